//! Classical point-set definitions, evaluated by brute force over open and
//! closed sets. Nothing here goes through the lifting machinery.

use serde::Serialize;

use super::{FiniteSpace, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceOracles {
    pub is_t0: bool,
    pub is_t1: bool,
    pub is_discrete: bool,
    pub is_antidiscrete: bool,
    /// Connected, or empty.
    pub is_connected: bool,
    pub is_totally_disconnected: bool,
    pub is_normal_t4: bool,
    pub is_regular_t3: bool,
    pub is_hausdorff: bool,
    pub is_nonempty: bool,
}

impl SpaceOracles {
    pub fn compute(s: &FiniteSpace) -> Self {
        let opens = s.open_sets();
        let closeds = s.closed_sets();
        SpaceOracles {
            is_t0: is_t0(s),
            is_t1: is_t1(s),
            is_discrete: opens.len() == 1 << s.len(),
            is_antidiscrete: opens.len() <= 2,
            is_connected: components(s).len() <= 1,
            is_totally_disconnected: components(s).iter().all(|c| c.len() == 1),
            is_normal_t4: is_normal(&opens, &closeds),
            is_regular_t3: is_regular(s, &opens, &closeds),
            is_hausdorff: is_hausdorff(s, &opens),
            is_nonempty: !s.is_empty(),
        }
    }
}

impl FiniteSpace {
    pub fn oracles(&self) -> SpaceOracles {
        SpaceOracles::compute(self)
    }
}

fn is_t0(s: &FiniteSpace) -> bool {
    let n = s.len();
    (0..n).all(|i| (0..n).all(|j| i == j || !(s.related(i, j) && s.related(j, i))))
}

fn is_t1(s: &FiniteSpace) -> bool {
    let n = s.len();
    (0..n).all(|i| (0..n).all(|j| i == j || !s.related(i, j)))
}

/// Connected components of the comparability graph.
pub(crate) fn components(s: &FiniteSpace) -> Vec<PointSet> {
    let n = s.len();
    let mut seen = PointSet::EMPTY;
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut comp = PointSet::singleton(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !comp.contains(j) && (s.related(i, j) || s.related(j, i)) {
                    comp.insert(j);
                    stack.push(j);
                }
            }
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

fn separated(opens: &[PointSet], a: PointSet, b: PointSet) -> bool {
    opens.iter().any(|&u| {
        a.is_subset(u) && opens.iter().any(|&v| b.is_subset(v) && u.is_disjoint(v))
    })
}

fn is_normal(opens: &[PointSet], closeds: &[PointSet]) -> bool {
    closeds.iter().all(|&a| {
        closeds
            .iter()
            .all(|&b| !a.is_disjoint(b) || separated(opens, a, b))
    })
}

fn is_regular(s: &FiniteSpace, opens: &[PointSet], closeds: &[PointSet]) -> bool {
    (0..s.len()).all(|x| {
        closeds
            .iter()
            .all(|&f| f.contains(x) || separated(opens, PointSet::singleton(x), f))
    })
}

fn is_hausdorff(s: &FiniteSpace, opens: &[PointSet]) -> bool {
    let n = s.len();
    (0..n).all(|x| {
        (0..n).all(|y| x == y || separated(opens, PointSet::singleton(x), PointSet::singleton(y)))
    })
}
