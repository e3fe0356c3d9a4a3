//! Backtracking search for monotone assignments between two spaces.

use crate::space::{FiniteSpace, PointSet};

/// Enumerates monotone maps `src -> tgt` where point `p` may only go to the
/// points in `allowed[p]`. `visit` returns `false` to stop early; the return
/// value is `false` iff the search was stopped.
pub(crate) fn search_monotone(
    src: &FiniteSpace,
    tgt: &FiniteSpace,
    allowed: &[u32],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = src.len();
    debug_assert_eq!(allowed.len(), n);
    if allowed.contains(&0) {
        return true;
    }
    // Fewer predecessors first: a linear extension of the preorder.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| (src.open_star(p).len(), allowed[p].count_ones()));
    let mut state = Search {
        src,
        tgt,
        allowed,
        order,
        assignment: vec![usize::MAX; n],
    };
    state.descend(0, visit)
}

struct Search<'a> {
    src: &'a FiniteSpace,
    tgt: &'a FiniteSpace,
    allowed: &'a [u32],
    order: Vec<usize>,
    assignment: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.assignment);
        }
        let p = self.order[depth];
        let mut cand = self.allowed[p];
        for &q in &self.order[..depth] {
            let v = self.assignment[q];
            if self.src.related(q, p) {
                cand &= self.tgt.succ_rows()[v];
            }
            if self.src.related(p, q) {
                cand &= self.tgt.pred_rows()[v];
            }
            if cand == 0 {
                return true;
            }
        }
        for v in PointSet(cand).iter() {
            self.assignment[p] = v;
            if !self.descend(depth + 1, visit) {
                self.assignment[p] = usize::MAX;
                return false;
            }
        }
        self.assignment[p] = usize::MAX;
        true
    }
}

/// All monotone assignments `src -> tgt` as index vectors.
pub(crate) fn hom_assignments(src: &FiniteSpace, tgt: &FiniteSpace) -> Vec<Vec<usize>> {
    let allowed = vec![tgt.all().0; src.len()];
    let mut out = Vec::new();
    search_monotone(src, tgt, &allowed, &mut |a| {
        out.push(a.to_vec());
        true
    });
    out.sort();
    out
}

/// `true` if some monotone map respects `allowed`.
pub(crate) fn exists_monotone(src: &FiniteSpace, tgt: &FiniteSpace, allowed: &[u32]) -> bool {
    let mut found = false;
    search_monotone(src, tgt, allowed, &mut |_| {
        found = true;
        false
    });
    found
}
