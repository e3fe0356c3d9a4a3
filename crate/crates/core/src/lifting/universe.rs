use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::map::search::hom_assignments;
use crate::map::{canonical_assignment, ContinuousMap, MapKey};
use crate::space::{enumerate_spaces, FiniteSpace, Permutation};

/// Largest bound [`build_universe`] accepts unless a caller raises it.
pub const DEFAULT_MAX_BOUND: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("universe bound {requested} exceeds the configured maximum {max}")]
    TooLarge { requested: usize, max: usize },
}

/// Every space of size at most `bound` up to homeomorphism, and every map
/// between them up to isomorphism, all in canonical form.
#[derive(Debug)]
pub struct Universe {
    bound: usize,
    spaces: Vec<Arc<FiniteSpace>>,
    autos: Vec<Vec<Permutation>>,
    maps: Vec<ContinuousMap>,
    ends: Vec<(u16, u16)>,
    keys: Vec<MapKey>,
    index: HashMap<MapKey, usize>,
    space_index: HashMap<crate::space::SpaceKey, usize>,
}

pub fn build_universe(n: usize) -> Result<Universe, UniverseError> {
    Universe::build_with_max(n, DEFAULT_MAX_BOUND)
}

impl Universe {
    pub fn build_with_max(n: usize, max: usize) -> Result<Universe, UniverseError> {
        if n > max {
            return Err(UniverseError::TooLarge { requested: n, max });
        }
        let spaces: Vec<Arc<FiniteSpace>> = (0..=n).flat_map(enumerate_spaces).map(Arc::new).collect();
        let autos: Vec<Vec<Permutation>> = spaces.par_iter().map(|s| s.automorphisms()).collect();
        let pairs: Vec<(usize, usize)> = (0..spaces.len())
            .flat_map(|x| (0..spaces.len()).map(move |y| (x, y)))
            .collect();
        let per_pair: Vec<Vec<Vec<usize>>> = pairs
            .par_iter()
            .map(|&(x, y)| {
                let classes: BTreeSet<Vec<usize>> = hom_assignments(&spaces[x], &spaces[y])
                    .iter()
                    .map(|a| canonical_assignment(a, &autos[x], &autos[y]).0)
                    .collect();
                classes.into_iter().collect()
            })
            .collect();
        let mut maps = Vec::new();
        let mut ends = Vec::new();
        for (&(x, y), classes) in pairs.iter().zip(per_pair) {
            for a in classes {
                maps.push(ContinuousMap::new_unchecked(spaces[x].clone(), spaces[y].clone(), a));
                ends.push((x as u16, y as u16));
            }
        }
        let keys: Vec<MapKey> = maps.par_iter().map(|m| m.raw_key()).collect();
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let space_index = spaces.iter().enumerate().map(|(i, s)| (s.key(), i)).collect();
        Ok(Universe {
            bound: n,
            spaces,
            autos,
            maps,
            ends,
            keys,
            index,
            space_index,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Canonical spaces ordered by size, then by key.
    pub fn spaces(&self) -> &[Arc<FiniteSpace>] {
        &self.spaces
    }

    /// Canonical maps ordered by domain, codomain, then assignment.
    pub fn maps(&self) -> &[ContinuousMap] {
        &self.maps
    }

    pub fn map(&self, id: usize) -> &ContinuousMap {
        &self.maps[id]
    }

    pub fn key(&self, id: usize) -> &MapKey {
        &self.keys[id]
    }

    /// Indices of the domain and codomain of map `id` in [`Self::spaces`].
    pub fn ends(&self, id: usize) -> (usize, usize) {
        let (d, c) = self.ends[id];
        (d as usize, c as usize)
    }

    pub fn automorphisms(&self, space: usize) -> &[Permutation] {
        &self.autos[space]
    }

    /// Position of the class of `f`, if both its ends fit in the universe.
    pub fn find(&self, f: &ContinuousMap) -> Option<usize> {
        if f.dom().len() > self.bound || f.cod().len() > self.bound {
            return None;
        }
        self.index.get(&f.canonical_key()).copied()
    }

    pub fn find_key(&self, key: &MapKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Position of the homeomorphism class of `s`, if it fits.
    pub fn find_space(&self, s: &FiniteSpace) -> Option<usize> {
        if s.len() > self.bound {
            return None;
        }
        self.space_index.get(&s.canonical_key()).copied()
    }

    /// Maps `{} -> X`, one per space.
    pub fn from_empty_maps(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.maps.len()).filter(|&i| self.ends(i).0 == 0)
    }

    /// Maps `X -> {*}`, one per space.
    pub fn to_point_maps(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.maps.len()).filter(|&i| self.ends(i).1 == 1)
    }

    /// `(spaces, maps)` counts.
    pub fn counts(&self) -> (usize, usize) {
        (self.spaces.len(), self.maps.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_universes() {
        let u0 = build_universe(0).unwrap();
        assert_eq!(u0.counts(), (1, 1));
        let u1 = build_universe(1).unwrap();
        assert_eq!(u1.counts(), (2, 3));
        let u2 = build_universe(2).unwrap();
        assert_eq!(u2.counts().0, 5);
    }

    #[test]
    fn guard() {
        assert_eq!(
            build_universe(6).unwrap_err(),
            UniverseError::TooLarge { requested: 6, max: 5 }
        );
        assert!(Universe::build_with_max(3, 2).is_err());
    }

    #[test]
    fn members_are_pairwise_non_isomorphic_and_findable() {
        let u = build_universe(2).unwrap();
        for (i, f) in u.maps().iter().enumerate() {
            assert_eq!(u.find(f), Some(i));
            let shuffled = f.permute(
                &(0..f.dom().len()).rev().collect::<Vec<_>>(),
                &(0..f.cod().len()).rev().collect::<Vec<_>>(),
            );
            assert_eq!(u.find(&shuffled), Some(i));
        }
        let keys: BTreeSet<&MapKey> = (0..u.maps().len()).map(|i| u.key(i)).collect();
        assert_eq!(keys.len(), u.maps().len());
    }

    #[test]
    fn special_families() {
        let u = build_universe(3).unwrap();
        assert_eq!(u.from_empty_maps().count(), u.spaces().len());
        assert_eq!(u.to_point_maps().count(), u.spaces().len());
        assert!(u.from_empty_maps().all(|i| u.map(i).dom().is_empty()));
    }
}
