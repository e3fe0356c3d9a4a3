use std::collections::BTreeSet;

use super::{FiniteSpace, PointSet, SpaceKey};

/// All homeomorphism classes of `n`-point spaces, canonical and sorted by key.
///
/// Grows spaces one point at a time: every preorder on `n` points restricts to
/// a preorder on its first `n - 1` points, so extending each canonical
/// `(n - 1)`-point class by one point in every consistent way reaches every
/// class.
pub fn enumerate_spaces(n: usize) -> Vec<FiniteSpace> {
    assert!(n <= super::MAX_POINTS, "too many points");
    let mut level: BTreeSet<SpaceKey> = BTreeSet::new();
    level.insert(FiniteSpace::empty().key());
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for key in &level {
            let base = FiniteSpace::from_key(key);
            for ext in one_point_extensions(&base) {
                next.insert(ext.canonical_key());
            }
        }
        debug_assert!(next.iter().all(|k| k.point_count() == m));
        level = next;
    }
    level.iter().map(FiniteSpace::from_key).collect()
}

/// Spaces of every size `0..=n`, grouped by size.
pub fn enumerate_spaces_up_to(n: usize) -> Vec<Vec<FiniteSpace>> {
    (0..=n).map(enumerate_spaces).collect()
}

/// Every way to add a point `x` to `base`: a backward-closed set `down` of
/// points with `y -> x`, a forward-closed set `up` with `x -> z`, and
/// `y -> z` whenever `y` is in `down` and `z` is in `up`.
fn one_point_extensions(base: &FiniteSpace) -> Vec<FiniteSpace> {
    let n = base.len();
    let opens = base.open_sets();
    let closeds = base.closed_sets();
    let mut out = Vec::new();
    for &down in &opens {
        // Points reachable from every member of `down`.
        let reach = down
            .iter()
            .fold(PointSet::full(n), |acc, y| acc.intersection(base.point_closure(y)));
        for &up in &closeds {
            if !up.is_subset(reach) {
                continue;
            }
            let mut succ: Vec<u32> = base.succ_rows().to_vec();
            for y in down.iter() {
                succ[y] |= 1 << n;
            }
            succ.push(up.0 | (1 << n));
            let mut labels = base.labels().to_vec();
            labels.push(super::default_label(n));
            out.push(FiniteSpace::from_rows_unchecked(labels, succ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_spaces(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 9, 33]);
    }

    #[test]
    fn extensions_are_preorders() {
        for s in enumerate_spaces(3) {
            for e in one_point_extensions(&s) {
                FiniteSpace::from_rows(e.labels().to_vec(), e.succ_rows().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn enumerated_spaces_are_canonical() {
        for s in enumerate_spaces(3) {
            assert_eq!(s.canonical_key(), s.key());
        }
    }
}
