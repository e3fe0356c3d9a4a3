//! Map properties from their open/closed set definitions.

use serde::Serialize;

use super::ContinuousMap;
use crate::space::PointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapOracles {
    pub is_surjective: bool,
    pub is_injective: bool,
    pub is_dense_image: bool,
    pub is_subspace_embedding: bool,
    pub is_induced_topology: bool,
    pub is_closed_map: bool,
    pub is_isomorphism: bool,
}

impl MapOracles {
    pub fn compute(f: &ContinuousMap) -> Self {
        let is_surjective = is_surjective(f);
        let is_injective = is_injective(f);
        let is_induced_topology = is_induced_topology(f);
        MapOracles {
            is_surjective,
            is_injective,
            is_dense_image: f.cod().closure(f.image()) == f.cod().all(),
            is_subspace_embedding: is_injective && is_induced_topology,
            is_induced_topology,
            is_closed_map: is_closed_map(f),
            is_isomorphism: is_isomorphism(f, is_surjective && is_injective),
        }
    }
}

impl ContinuousMap {
    pub fn oracles(&self) -> MapOracles {
        MapOracles::compute(self)
    }

    pub fn preimage(&self, v: PointSet) -> PointSet {
        PointSet::from_points((0..self.dom().len()).filter(|&i| v.contains(self.apply(i))))
    }

    pub fn image_of(&self, a: PointSet) -> PointSet {
        PointSet::from_points(a.iter().map(|i| self.apply(i)))
    }
}

fn is_surjective(f: &ContinuousMap) -> bool {
    f.image() == f.cod().all()
}

fn is_injective(f: &ContinuousMap) -> bool {
    f.image().len() == f.dom().len()
}

/// Every open set of the domain is the preimage of an open set of the codomain.
fn is_induced_topology(f: &ContinuousMap) -> bool {
    let pulled: std::collections::HashSet<PointSet> =
        f.cod().open_sets().into_iter().map(|v| f.preimage(v)).collect();
    f.dom().open_sets().iter().all(|u| pulled.contains(u))
}

fn is_closed_map(f: &ContinuousMap) -> bool {
    f.dom()
        .closed_sets()
        .into_iter()
        .all(|c| f.cod().is_closed(f.image_of(c)))
}

/// Bijective with a continuous inverse.
fn is_isomorphism(f: &ContinuousMap, bijective: bool) -> bool {
    if !bijective {
        return false;
    }
    let n = f.dom().len();
    (0..n).all(|i| (0..n).all(|j| f.cod().related(f.apply(i), f.apply(j)) <= f.dom().related(i, j)))
}
