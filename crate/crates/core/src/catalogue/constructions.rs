use std::sync::Arc;

use super::CatalogueError;
use crate::map::ContinuousMap;
use crate::notation::parse_map;
use crate::space::{FiniteSpace, PointSet};

/// The inclusion `A -> A + {x}` where the new point `x` has the
/// neighbourhoods of `p`: every `y` with `y -> p` also gets `y -> x`, and `x`
/// is related to nothing but itself. `x` is closed and not open.
pub fn adjoin_point(a: &FiniteSpace, p: usize) -> Result<ContinuousMap, CatalogueError> {
    if a.is_empty() {
        return Err(CatalogueError::EmptySpace);
    }
    if p >= a.len() {
        return Err(CatalogueError::NoSuchPoint(p));
    }
    let n = a.len();
    let x = n;
    let mut rows: Vec<u32> = (0..n)
        .map(|y| {
            let row = a.point_closure(y).0;
            if a.related(y, p) {
                row | (1 << x)
            } else {
                row
            }
        })
        .collect();
    rows.push(1 << x);
    let mut labels = a.labels().to_vec();
    labels.push(fresh_label(a));
    let b = FiniteSpace::from_rows(labels, rows).map_err(CatalogueError::Space)?;
    debug_assert!(b.is_closed(PointSet::singleton(x)) && !b.is_open(PointSet::singleton(x)));
    ContinuousMap::new(Arc::new(a.clone()), Arc::new(b), (0..n).collect()).map_err(CatalogueError::Map)
}

fn fresh_label(a: &FiniteSpace) -> String {
    std::iter::successors(Some("x".to_owned()), |s| Some(format!("{s}'")))
        .find(|l| a.index_of(l).is_none() && a.labels().iter().all(|m| m.split('=').all(|part| part != l)))
        .expect("some label is free")
}

/// `{x<-x1->x2<-x3->...->y} => {x<-x1=...=xn->y}` for odd `n`. For `n = 3`
/// this is the lifting condition of normal spaces.
pub fn zigzag_map(n: usize) -> Result<ContinuousMap, CatalogueError> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(CatalogueError::EvenZigzag(n));
    }
    let mut dom = String::from("{x");
    for i in 1..=n {
        dom.push_str(if i % 2 == 1 { "<-" } else { "->" });
        dom.push_str(&format!("x{i}"));
    }
    dom.push_str("->y}");
    let glued: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let cod = format!("{{x<-{}->y}}", glued.join("="));
    parse_map(&format!("{dom} => {cod}")).map_err(CatalogueError::Literal)
}
