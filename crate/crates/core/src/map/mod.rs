//! Continuous maps between finite spaces, i.e. monotone point assignments.

mod iso;
mod oracles;
pub(crate) mod search;

pub use iso::{canonical_assignment, maps_isomorphic, CanonicalMap, MapIsoWitness, MapKey};
pub use oracles::MapOracles;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::space::FiniteSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("assignment has length {got}, domain has {expected} points")]
    WrongLength { expected: usize, got: usize },
    #[error("point {point} is sent to {target}, but the codomain has {cod_len} points")]
    OutOfRange { point: usize, target: usize, cod_len: usize },
    #[error("not monotone: {from} -> {to} in the domain but {from_image} -/-> {to_image} in the codomain")]
    NotMonotone {
        from: String,
        to: String,
        from_image: String,
        to_image: String,
    },
    #[error("cannot compose: codomain of the first map is not the domain of the second")]
    Mismatch,
}

/// A continuous map between finite spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ContinuousMap {
    dom: Arc<FiniteSpace>,
    cod: Arc<FiniteSpace>,
    assignment: Vec<usize>,
}

impl ContinuousMap {
    /// Checks the assignment is in range and monotone.
    pub fn new(
        dom: impl Into<Arc<FiniteSpace>>,
        cod: impl Into<Arc<FiniteSpace>>,
        assignment: Vec<usize>,
    ) -> Result<Self, MapError> {
        let dom = dom.into();
        let cod = cod.into();
        if assignment.len() != dom.len() {
            return Err(MapError::WrongLength {
                expected: dom.len(),
                got: assignment.len(),
            });
        }
        if let Some((point, &target)) = assignment.iter().enumerate().find(|(_, &t)| t >= cod.len()) {
            return Err(MapError::OutOfRange {
                point,
                target,
                cod_len: cod.len(),
            });
        }
        for i in 0..dom.len() {
            for j in dom.point_closure(i).iter() {
                if !cod.related(assignment[i], assignment[j]) {
                    return Err(MapError::NotMonotone {
                        from: dom.label(i).to_owned(),
                        to: dom.label(j).to_owned(),
                        from_image: cod.label(assignment[i]).to_owned(),
                        to_image: cod.label(assignment[j]).to_owned(),
                    });
                }
            }
        }
        Ok(Self::new_unchecked(dom, cod, assignment))
    }

    pub(crate) fn new_unchecked(dom: Arc<FiniteSpace>, cod: Arc<FiniteSpace>, assignment: Vec<usize>) -> Self {
        debug_assert_eq!(assignment.len(), dom.len());
        ContinuousMap { dom, cod, assignment }
    }

    /// Build a map from labels: `pairs` lists `(domain label, codomain label)`.
    pub fn from_labels(
        dom: impl Into<Arc<FiniteSpace>>,
        cod: impl Into<Arc<FiniteSpace>>,
        pairs: &[(&str, &str)],
    ) -> Result<Self, MapError> {
        let dom = dom.into();
        let cod = cod.into();
        let mut assignment = vec![usize::MAX; dom.len()];
        for (a, b) in pairs {
            if let (Some(i), Some(j)) = (dom.index_of(a), cod.index_of(b)) {
                assignment[i] = j;
            }
        }
        Self::new(dom, cod, assignment)
    }

    pub fn identity(space: impl Into<Arc<FiniteSpace>>) -> Self {
        let space = space.into();
        let assignment = (0..space.len()).collect();
        ContinuousMap {
            dom: space.clone(),
            cod: space,
            assignment,
        }
    }

    /// The unique map `X -> {*}`.
    pub fn to_point(space: impl Into<Arc<FiniteSpace>>) -> Self {
        let space = space.into();
        let assignment = vec![0; space.len()];
        ContinuousMap {
            dom: space,
            cod: Arc::new(FiniteSpace::point()),
            assignment,
        }
    }

    /// The unique map `{} -> X`.
    pub fn from_empty(space: impl Into<Arc<FiniteSpace>>) -> Self {
        ContinuousMap {
            dom: Arc::new(FiniteSpace::empty()),
            cod: space.into(),
            assignment: Vec::new(),
        }
    }

    pub fn dom(&self) -> &FiniteSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSpace {
        &self.cod
    }

    pub fn dom_arc(&self) -> &Arc<FiniteSpace> {
        &self.dom
    }

    pub fn cod_arc(&self) -> &Arc<FiniteSpace> {
        &self.cod
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &ContinuousMap) -> Result<ContinuousMap, MapError> {
        if !Arc::ptr_eq(&self.cod, &next.dom) && *self.cod != *next.dom {
            return Err(MapError::Mismatch);
        }
        Ok(ContinuousMap {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            assignment: self.assignment.iter().map(|&b| next.assignment[b]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.assignment.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Same space on both sides but not the identity: the arrow notation has
    /// no way to write such a map with its own labels.
    pub fn is_endomorphism_shaped(&self) -> bool {
        self.dom == self.cod && !self.is_identity()
    }

    /// Image of the map as a point set of the codomain.
    pub fn image(&self) -> crate::space::PointSet {
        crate::space::PointSet::from_points(self.assignment.iter().copied())
    }

    /// Replace the codomain by a relabeled copy with the same relation.
    pub fn with_codomain(&self, cod: Arc<FiniteSpace>) -> Result<Self, MapError> {
        if !cod.same_relation(&self.cod) {
            return Err(MapError::Mismatch);
        }
        Ok(ContinuousMap {
            dom: self.dom.clone(),
            cod,
            assignment: self.assignment.clone(),
        })
    }

    /// Relabel both sides: `dom_perm[i]` is the new index of domain point `i`,
    /// likewise for `cod_perm`. The result is isomorphic to `self`.
    pub fn permute(&self, dom_perm: &[usize], cod_perm: &[usize]) -> Self {
        let mut assignment = vec![0; self.dom.len()];
        for (i, &v) in self.assignment.iter().enumerate() {
            assignment[dom_perm[i]] = cod_perm[v];
        }
        ContinuousMap {
            dom: Arc::new(self.dom.permute(dom_perm)),
            cod: Arc::new(self.cod.permute(cod_perm)),
            assignment,
        }
    }
}

impl fmt::Debug for ContinuousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match crate::notation::print_map(self) {
            Ok(s) => write!(f, "ContinuousMap({s})"),
            Err(_) => write!(f, "ContinuousMap({:?} -> {:?}, {:?})", self.dom, self.cod, self.assignment),
        }
    }
}

impl fmt::Display for ContinuousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::print_map_relabeled(self))
    }
}

/// Every continuous map `x -> y`, sorted by assignment.
pub fn hom_set(x: &Arc<FiniteSpace>, y: &Arc<FiniteSpace>) -> Vec<ContinuousMap> {
    search::hom_assignments(x, y)
        .into_iter()
        .map(|a| ContinuousMap::new_unchecked(x.clone(), y.clone(), a))
        .collect()
}
