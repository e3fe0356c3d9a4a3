//! The lifting property `f ⋌ g` and orthogonal classes.
//!
//! `f: A -> B` lifts against `g: X -> Y` when every commuting square
//! (`i: A -> X`, `j: B -> Y` with `f;j = i;g`) has a diagonal `d: B -> X` with
//! `f;d = i` and `d;g = j`.

mod cache;
mod class;
mod engine;
mod universe;
mod word;

pub use cache::{CacheError, LiftCache, CACHE_FORMAT};
pub use class::{Exactness, MapClass};
pub use engine::Engine;
pub use universe::{build_universe, Universe, UniverseError, DEFAULT_MAX_BOUND};
pub use word::{OrthWord, Side, Step, WordError};

use std::sync::Arc;

use crate::map::search::{exists_monotone, search_monotone};
use crate::map::ContinuousMap;
use crate::space::FiniteSpace;

/// A commuting square `f;bottom = top;g` that admits no diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    /// `i: dom f -> dom g`
    pub top: ContinuousMap,
    /// `j: cod f -> cod g`
    pub bottom: ContinuousMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub holds: bool,
    pub counterexample: Option<Square>,
    /// Commuting squares examined before the search stopped.
    pub squares_checked: usize,
}


/// Preimage masks of `g`: bit `x` of entry `y` is set iff `g(x) = y`.
fn preimages(g: &ContinuousMap) -> Vec<u32> {
    let mut pre = vec![0u32; g.cod().len()];
    for (x, &y) in g.assignment().iter().enumerate() {
        pre[y] |= 1 << x;
    }
    pre
}

/// Is there a diagonal for the square `(i, j)`?
fn has_diagonal(f: &ContinuousMap, g_pre: &[u32], x: &FiniteSpace, i: &[usize], j: &[usize]) -> bool {
    let b = f.cod();
    let mut allowed: Vec<u32> = (0..b.len()).map(|p| g_pre[j[p]]).collect();
    for (a, &img) in f.assignment().iter().enumerate() {
        allowed[img] &= 1 << i[a];
    }
    exists_monotone(b, x, &allowed)
}

/// `(top, bottom)` assignments of a square.
type SquareAssignments = (Vec<usize>, Vec<usize>);

/// Walks every commuting square, stopping at the first one with no diagonal.
/// Returns the failing square (if any) and the number of squares visited.
fn search_squares(f: &ContinuousMap, g: &ContinuousMap) -> (Option<SquareAssignments>, usize) {
    let (a, b) = (f.dom(), f.cod());
    let (x, y) = (g.dom(), g.cod());
    let g_pre = preimages(g);
    let all_y = vec![y.all().0; b.len()];
    let mut squares = 0usize;
    let mut failure = None;
    search_monotone(b, y, &all_y, &mut |j| {
        let allowed_i: Vec<u32> = f.assignment().iter().map(|&fb| g_pre[j[fb]]).collect();
        let mut ok = true;
        search_monotone(a, x, &allowed_i, &mut |i| {
            squares += 1;
            if has_diagonal(f, &g_pre, x, i, j) {
                true
            } else {
                failure = Some((i.to_vec(), j.to_vec()));
                ok = false;
                false
            }
        });
        ok
    });
    (failure, squares)
}

/// Decides `f ⋌ g` by exhaustive search, reporting a counterexample square
/// when the property fails.
pub fn has_lifting(f: &ContinuousMap, g: &ContinuousMap) -> LiftReport {
    let (failure, squares_checked) = search_squares(f, g);
    match failure {
        None => LiftReport {
            holds: true,
            counterexample: None,
            squares_checked,
        },
        Some((i, j)) => LiftReport {
            holds: false,
            counterexample: Some(Square {
                top: ContinuousMap::new_unchecked(f.dom_arc().clone(), g.dom_arc().clone(), i),
                bottom: ContinuousMap::new_unchecked(f.cod_arc().clone(), g.cod_arc().clone(), j),
            }),
            squares_checked,
        },
    }
}

/// `f ⋌ g` without the report.
pub fn lifts(f: &ContinuousMap, g: &ContinuousMap) -> bool {
    search_squares(f, g).0.is_none()
}

impl Square {
    /// Re-checks, independently of the search, that the square commutes and
    /// that no map `cod f -> dom g` is a diagonal.
    pub fn verify_counterexample(&self, f: &ContinuousMap, g: &ContinuousMap) -> bool {
        let commutes = match (f.compose(&self.bottom), self.top.compose(g)) {
            (Ok(l), Ok(r)) => l.assignment() == r.assignment(),
            _ => false,
        };
        let cod_f = Arc::new(f.cod().clone());
        let dom_g = Arc::new(g.dom().clone());
        let no_diagonal = crate::map::hom_set(&cod_f, &dom_g).iter().all(|d| {
            let upper = (0..f.dom().len()).all(|a| d.apply(f.apply(a)) == self.top.apply(a));
            let lower = (0..f.cod().len()).all(|b| g.apply(d.apply(b)) == self.bottom.apply(b));
            !(upper && lower)
        });
        commutes && no_diagonal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_map;

    fn m(s: &str) -> ContinuousMap {
        parse_map(s).unwrap()
    }

    #[test]
    fn surjection_lifts_against_empty_seed() {
        let r = has_lifting(&m("{} => {*}"), &m("{a,b} => {a=b}"));
        assert!(r.holds);
        assert!(r.counterexample.is_none());
    }

    #[test]
    fn non_surjection_gives_counterexample() {
        let f = m("{} => {*}");
        let g = m("{a} => {a,b}");
        let r = has_lifting(&f, &g);
        assert!(!r.holds);
        let sq = r.counterexample.unwrap();
        assert!(sq.verify_counterexample(&f, &g));
        // The bottom map picks the point outside the image.
        assert_eq!(g.cod().label(sq.bottom.apply(0)), "b");
    }

    #[test]
    fn gluing_map_fails_against_itself() {
        let g = m("{a,b} => {a=b}");
        assert!(!has_lifting(&g, &g).holds);
    }

    #[test]
    fn vacuous_when_no_square_commutes() {
        // No map {*} -> {} exists, so there are no squares at all.
        let f = m("{} => {*}");
        let g = ContinuousMap::identity(Arc::new(FiniteSpace::empty()));
        let r = has_lifting(&f, &g);
        assert!(r.holds);
        assert_eq!(r.squares_checked, 0);
    }

    #[test]
    fn t0_seed_against_sierpinski() {
        assert!(lifts(&m("{x<->y} => {x=y}"), &m("{o->c} => {*}")));
        assert!(!lifts(&m("{x<->y} => {x=y}"), &m("{x<->y} => {*}")));
    }
}
