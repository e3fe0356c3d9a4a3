//! Finite topological spaces, stored as their specialization preorder.
//!
//! A point `j` lies in the closure of a point `i` exactly when the relation
//! holds at `(i, j)`, written `i -> j`. Closed sets are the subsets that are
//! stable under following arrows; open sets are their complements.

mod canon;
mod enumerate;
mod oracles;

pub use canon::{invert as canon_invert, Permutation, SpaceKey};
pub use enumerate::{enumerate_spaces, enumerate_spaces_up_to};
pub use oracles::SpaceOracles;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Largest number of points a space may carry. Point sets are `u32` bit masks
/// and canonical keys pack one row into a `u16`.
pub const MAX_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("arrow mentions unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("a space may have at most {MAX_POINTS} points, got {0}")]
    TooManyPoints(usize),
    #[error("relation is not reflexive at point {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} -> {1} -> {2}")]
    NotTransitive(usize, usize, usize),
    #[error("relation matrix has the wrong shape")]
    BadShape,
}

/// A subset of the points of some space, as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(pub u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    /// The set of all points of an `n`-point space.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1 << i)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        PointSet(points.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement within an `n`-point space.
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Every subset of an `n`-point space, in increasing mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        (0..=PointSet::full(n).0 as u64).map(|m| PointSet(m as u32))
    }
}

/// Label used for point `i` of enumerated and canonical spaces: `a`, `b`, ...
pub fn default_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("p{i}")
    }
}

/// A finite topological space given by its specialization preorder.
///
/// The relation is always kept reflexive and transitive. `succ[i]` holds the
/// closure of point `i`; `pred[j]` holds the minimal open neighbourhood of `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    labels: Vec<String>,
    succ: Vec<u32>,
    pred: Vec<u32>,
}

impl FiniteSpace {
    /// Build a space from point labels and generating arrows `(from, to)`;
    /// the relation is the reflexive-transitive closure of the arrows.
    pub fn new<S: AsRef<str>>(labels: &[S], arrows: &[(S, S)]) -> Result<Self, SpaceError> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        if labels.len() > MAX_POINTS {
            return Err(SpaceError::TooManyPoints(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(SpaceError::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| SpaceError::UnknownLabel(l.to_owned()))
        };
        let mut edges = Vec::with_capacity(arrows.len());
        for (a, b) in arrows {
            edges.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_generators(labels, &edges)
    }

    /// Build a space on the given labels from index arrows, closing the relation.
    pub fn from_generators(labels: Vec<String>, arrows: &[(usize, usize)]) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(SpaceError::TooManyPoints(n));
        }
        let mut succ: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
        for &(a, b) in arrows {
            if a >= n || b >= n {
                return Err(SpaceError::BadShape);
            }
            succ[a] |= 1 << b;
        }
        // Warshall on bit rows.
        for k in 0..n {
            for i in 0..n {
                if succ[i] >> k & 1 == 1 {
                    succ[i] |= succ[k];
                }
            }
        }
        Ok(Self::from_rows_unchecked(labels, succ))
    }

    /// Build a space from a full relation matrix, which must already be a preorder.
    pub fn from_matrix(labels: Vec<String>, matrix: &[Vec<bool>]) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(SpaceError::TooManyPoints(n));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(SpaceError::BadShape);
        }
        let succ = matrix
            .iter()
            .map(|row| row.iter().enumerate().fold(0u32, |acc, (j, &b)| acc | (u32::from(b) << j)))
            .collect();
        Self::from_rows(labels, succ)
    }

    /// Build a space from closure bit rows, validating the preorder axioms.
    pub fn from_rows(labels: Vec<String>, succ: Vec<u32>) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(SpaceError::TooManyPoints(n));
        }
        if succ.len() != n || succ.iter().any(|&r| r & !PointSet::full(n).0 != 0) {
            return Err(SpaceError::BadShape);
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(SpaceError::DuplicateLabel(l.clone()));
            }
        }
        for i in 0..n {
            if succ[i] >> i & 1 == 0 {
                return Err(SpaceError::NotReflexive(i));
            }
            for j in PointSet(succ[i]).iter() {
                if let Some(k) = PointSet(succ[j] & !succ[i]).iter().next() {
                    return Err(SpaceError::NotTransitive(i, j, k));
                }
            }
        }
        Ok(Self::from_rows_unchecked(labels, succ))
    }

    pub(crate) fn from_rows_unchecked(labels: Vec<String>, succ: Vec<u32>) -> Self {
        let n = succ.len();
        let mut pred = vec![0u32; n];
        for (i, &row) in succ.iter().enumerate() {
            for j in PointSet(row).iter() {
                pred[j] |= 1 << i;
            }
        }
        FiniteSpace { labels, succ, pred }
    }

    /// The empty space.
    pub fn empty() -> Self {
        Self::from_rows_unchecked(Vec::new(), Vec::new())
    }

    /// The one-point space `{*}`.
    pub fn point() -> Self {
        Self::from_rows_unchecked(vec!["*".to_owned()], vec![1])
    }

    /// Discrete space on the given labels.
    pub fn discrete<S: AsRef<str>>(labels: &[S]) -> Result<Self, SpaceError> {
        Self::new(labels, &[])
    }

    /// Same relation with labels `a`, `b`, ...
    pub fn with_default_labels(&self) -> Self {
        FiniteSpace {
            labels: (0..self.len()).map(default_label).collect(),
            succ: self.succ.clone(),
            pred: self.pred.clone(),
        }
    }

    /// Same relation with new labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self, SpaceError> {
        if labels.len() != self.len() {
            return Err(SpaceError::BadShape);
        }
        Self::from_rows(labels, self.succ.clone())
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `true` iff `j` lies in the closure of `i`.
    #[inline]
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.succ[i] >> j & 1 == 1
    }

    /// Closure of a single point.
    #[inline]
    pub fn point_closure(&self, i: usize) -> PointSet {
        PointSet(self.succ[i])
    }

    /// Smallest open set containing `i`: the points whose closure contains `i`.
    #[inline]
    pub fn open_star(&self, i: usize) -> PointSet {
        PointSet(self.pred[i])
    }

    pub(crate) fn succ_rows(&self) -> &[u32] {
        &self.succ
    }

    pub(crate) fn pred_rows(&self) -> &[u32] {
        &self.pred
    }

    /// Relation as a boolean matrix.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len())
            .map(|i| (0..self.len()).map(|j| self.related(i, j)).collect())
            .collect()
    }

    /// Number of pairs `(i, j)` with `i != j` and `i -> j`.
    pub fn strict_arrow_count(&self) -> usize {
        self.succ.iter().map(|r| r.count_ones() as usize).sum::<usize>() - self.len()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        debug_assert!(a.is_subset(self.all()));
        PointSet(a.iter().fold(0, |acc, i| acc | self.succ[i]))
    }

    /// Smallest open set containing `a`.
    pub fn open_hull(&self, a: PointSet) -> PointSet {
        PointSet(a.iter().fold(0, |acc, i| acc | self.pred[i]))
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        let n = self.len();
        self.closure(a.complement(n)).complement(n)
    }

    pub fn is_closed(&self, c: PointSet) -> bool {
        self.closure(c) == c
    }

    pub fn is_open(&self, u: PointSet) -> bool {
        self.is_closed(u.complement(self.len()))
    }

    pub fn open_sets(&self) -> Vec<PointSet> {
        PointSet::all_subsets(self.len()).filter(|&u| self.is_open(u)).collect()
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        PointSet::all_subsets(self.len()).filter(|&c| self.is_closed(c)).collect()
    }

    /// Relabel points: point `i` of `self` becomes point `perm[i]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.len();
        assert_eq!(perm.len(), n, "permutation length");
        let mut labels = vec![String::new(); n];
        let mut succ = vec![0u32; n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
            succ[perm[i]] = PointSet(self.succ[i]).iter().fold(0, |acc, j| acc | (1 << perm[j]));
        }
        Self::from_rows_unchecked(labels, succ)
    }

    /// Same relation and point count, ignoring labels.
    pub fn same_relation(&self, other: &Self) -> bool {
        self.succ == other.succ
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace({})", crate::notation::print_space(self))
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::print_space(self))
    }
}
