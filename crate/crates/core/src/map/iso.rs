//! Isomorphism of maps: homeomorphisms on both ends commuting with the maps.

use std::fmt;
use std::sync::Arc;

use super::ContinuousMap;
use crate::space::{FiniteSpace, Permutation};

/// Compact byte encoding of a map in canonical pair form. Two maps have
/// equal keys iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MapKey(Arc<[u8]>);

impl MapKey {
    fn encode(map: &ContinuousMap) -> Self {
        let mut bytes = Vec::with_capacity(8 + 2 * (map.dom().len() + map.cod().len()));
        map.dom().key().push_bytes(&mut bytes);
        map.cod().key().push_bytes(&mut bytes);
        bytes.extend(map.assignment().iter().map(|&v| v as u8));
        MapKey(bytes.into())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        let bytes: Option<Vec<u8>> = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect();
        Some(MapKey(bytes?.into()))
    }
}

impl fmt::Debug for MapKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MapKey({})", self.to_hex())
    }
}

/// A map moved onto canonical spaces (labels `a`, `b`, ...), together with
/// the relabelings that carry the original onto it:
/// `map.apply(dom_perm[i]) == cod_perm[original.apply(i)]`.
#[derive(Debug, Clone)]
pub struct CanonicalMap {
    pub map: ContinuousMap,
    pub dom_perm: Permutation,
    pub cod_perm: Permutation,
}

/// Witness that two maps `f`, `g` are isomorphic: `g.apply(dom[i]) == cod[f.apply(i)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapIsoWitness {
    pub dom: Permutation,
    pub cod: Permutation,
}

/// Least assignment `k -> cod_auto[a[dom_auto^-1 k]]` over the given
/// automorphism groups, with the pair of automorphisms achieving it.
pub fn canonical_assignment(
    a: &[usize],
    dom_autos: &[Permutation],
    cod_autos: &[Permutation],
) -> (Vec<usize>, usize, usize) {
    let mut best: Option<(Vec<usize>, usize, usize)> = None;
    let mut scratch = vec![0; a.len()];
    for (bi, beta) in cod_autos.iter().enumerate() {
        for (ai, alpha) in dom_autos.iter().enumerate() {
            for (i, &v) in a.iter().enumerate() {
                scratch[alpha[i]] = beta[v];
            }
            if best.as_ref().is_none_or(|(b, _, _)| scratch < *b) {
                best = Some((scratch.clone(), ai, bi));
            }
        }
    }
    best.expect("automorphism groups are never empty")
}

fn compose_perm(first: &[usize], then: &[usize]) -> Permutation {
    first.iter().map(|&k| then[k]).collect()
}

impl ContinuousMap {
    pub fn canonical(&self) -> CanonicalMap {
        let (cd, pd) = self.dom().canonical_form();
        let (cc, pc) = self.cod().canonical_form();
        let mut base = vec![0; self.dom().len()];
        for (i, &v) in self.assignment().iter().enumerate() {
            base[pd[i]] = pc[v];
        }
        let dom_autos = cd.automorphisms();
        let cod_autos = cc.automorphisms();
        let (assignment, ai, bi) = canonical_assignment(&base, &dom_autos, &cod_autos);
        let map = ContinuousMap::new_unchecked(
            Arc::new(cd.with_default_labels()),
            Arc::new(cc.with_default_labels()),
            assignment,
        );
        CanonicalMap {
            map,
            dom_perm: compose_perm(&pd, &dom_autos[ai]),
            cod_perm: compose_perm(&pc, &cod_autos[bi]),
        }
    }

    /// Key of the canonical form.
    pub fn canonical_key(&self) -> MapKey {
        MapKey::encode(&self.canonical().map)
    }

    /// Key of this exact map, assuming it is already in canonical pair form.
    pub(crate) fn raw_key(&self) -> MapKey {
        MapKey::encode(self)
    }

    /// Homeomorphisms on both ends carrying `self` onto `other`, if any.
    pub fn isomorphism_to(&self, other: &ContinuousMap) -> Option<MapIsoWitness> {
        if self.dom().len() != other.dom().len() || self.cod().len() != other.cod().len() {
            return None;
        }
        let a = self.canonical();
        let b = other.canonical();
        if a.map.raw_key() != b.map.raw_key() {
            return None;
        }
        let inv_dom = crate::space::canon_invert(&b.dom_perm);
        let inv_cod = crate::space::canon_invert(&b.cod_perm);
        Some(MapIsoWitness {
            dom: compose_perm(&a.dom_perm, &inv_dom),
            cod: compose_perm(&a.cod_perm, &inv_cod),
        })
    }
}

/// `Some(witness)` iff the maps are isomorphic.
pub fn maps_isomorphic(f: &ContinuousMap, g: &ContinuousMap) -> Option<MapIsoWitness> {
    f.isomorphism_to(g)
}

impl MapIsoWitness {
    /// Checks the witness directly against the two maps.
    pub fn verify(&self, f: &ContinuousMap, g: &ContinuousMap) -> bool {
        let homeo = |p: &[usize], x: &FiniteSpace, y: &FiniteSpace| {
            p.len() == x.len()
                && x.len() == y.len()
                && (0..x.len()).all(|i| (0..x.len()).all(|j| x.related(i, j) == y.related(p[i], p[j])))
        };
        homeo(&self.dom, f.dom(), g.dom())
            && homeo(&self.cod, f.cod(), g.cod())
            && (0..f.dom().len()).all(|i| g.apply(self.dom[i]) == self.cod[f.apply(i)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::FiniteSpace;

    fn sp(labels: &[&str], arrows: &[(&str, &str)]) -> Arc<FiniteSpace> {
        Arc::new(FiniteSpace::new(labels, arrows).unwrap())
    }

    #[test]
    fn relabeled_map_is_isomorphic() {
        let z = sp(&["a", "U", "x"], &[("U", "a"), ("U", "x")]);
        let p = sp(&["*"], &[]);
        let f = ContinuousMap::new(z.clone(), p, vec![0, 0, 0]).unwrap();
        let g = f.permute(&[2, 0, 1], &[0]);
        let w = maps_isomorphic(&f, &g).unwrap();
        assert!(w.verify(&f, &g));
    }

    #[test]
    fn open_and_closed_point_inclusions_differ() {
        let s1 = sp(&["a", "b"], &[("a", "b")]);
        let s2 = sp(&["o", "c"], &[("o", "c")]);
        let f = ContinuousMap::new(sp(&["a"], &[]), s1, vec![0]).unwrap();
        let g = ContinuousMap::new(sp(&["c"], &[]), s2, vec![1]).unwrap();
        assert!(maps_isomorphic(&f, &g).is_none());
    }

    #[test]
    fn empty_to_point_self_iso() {
        let f = ContinuousMap::from_empty(Arc::new(FiniteSpace::point()));
        let w = maps_isomorphic(&f, &f.clone()).unwrap();
        assert_eq!(w, MapIsoWitness { dom: vec![], cod: vec![0] });
    }

    #[test]
    fn canonical_form_witness_holds() {
        let z = sp(&["x", "y", "z"], &[("x", "y")]);
        let s = sp(&["o", "c"], &[("o", "c")]);
        let f = ContinuousMap::new(z, s, vec![0, 1, 1]).unwrap();
        let c = f.canonical();
        for i in 0..3 {
            assert_eq!(c.map.apply(c.dom_perm[i]), c.cod_perm[f.apply(i)]);
        }
        assert_eq!(c.map.canonical().map, c.map);
    }

    #[test]
    fn map_key_hex_round_trip() {
        let f = ContinuousMap::to_point(sp(&["o", "c"], &[("o", "c")]));
        let k = f.canonical_key();
        assert_eq!(MapKey::from_hex(&k.to_hex()), Some(k));
    }
}
