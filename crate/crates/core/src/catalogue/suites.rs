//! Sweeps that go beyond one catalogue entry.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{adjoin_point, zigzag_map, COMPACTNESS_SEEDS, T4_RHS};
use crate::lifting::{Engine, MapClass, OrthWord};
use crate::map::ContinuousMap;
use crate::notation::{parse_map, print_map_relabeled};

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub universe: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, engine: &Engine) -> Self {
        SuiteReport {
            suite: suite.to_owned(),
            universe: engine.universe().bound(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn word(s: &str) -> OrthWord {
    s.parse().expect("valid word")
}

fn seed(s: &str) -> MapClass {
    MapClass::seeds([parse_map(s).expect("valid literal")])
}

/// The orthogonals of `{} -> {*}`: `r` is the surjections, `l` the maps
/// with non-empty domain together with `{} -> {}`, `ll` the isomorphisms.
/// `lr` is the isomorphisms together with every `{} -> Y`: no map with a
/// non-empty domain has a square into `{}`, so those lift vacuously.
pub fn iterated_suite(engine: &Engine) -> SuiteReport {
    let mut report = SuiteReport::new("iterated", engine);
    let point = seed("{} => {*}");
    type Expect = fn(&ContinuousMap) -> bool;
    let cases: [(&str, Expect); 4] = [
        ("r", |f| f.oracles().is_surjective),
        ("l", |f| !f.dom().is_empty() || f.cod().is_empty()),
        ("ll", |f| f.oracles().is_isomorphism),
        ("lr", |f| f.oracles().is_isomorphism || f.dom().is_empty()),
    ];
    for (w, expect) in cases {
        let class = engine.eval_shared(&point, &word(w));
        for (id, f) in engine.universe().maps().iter().enumerate() {
            report.checked += 1;
            let member = class.contains_key(engine.universe().key(id));
            if member != expect(f) {
                report.failures.push(format!("{w}: {} (member={member})", print_map_relabeled(f)));
            }
        }
    }
    report
}

/// Every space passing the normality lifting also lifts against the
/// five-step zigzag.
pub fn urysohn_suite(engine: &Engine) -> SuiteReport {
    let mut report = SuiteReport::new("urysohn", engine);
    let t4 = parse_map(T4_RHS).expect("valid literal");
    let z5 = zigzag_map(5).expect("odd length");
    let rows: Vec<Option<(bool, String)>> = engine
        .universe()
        .spaces()
        .par_iter()
        .map(|x| {
            let e = ContinuousMap::from_empty(x.clone());
            engine
                .lifts(&e, &t4)
                .then(|| (engine.lifts(&e, &z5), print_map_relabeled(&ContinuousMap::to_point(x.clone()))))
        })
        .collect();
    for (ok, lit) in rows.into_iter().flatten() {
        report.checked += 1;
        if !ok {
            report.failures.push(lit);
        }
    }
    report
}

/// For every space `A` with `1 <= |A| <= max_base` and every point `p`, the
/// inclusion `A -> A + {x}` adjoining a point near `p` lifts against `K -> {*}`
/// for every `K` of the universe, lies in the left orthogonal of the four
/// compactness maps, and in the class `r,<5,l` of `{o} => {o->c}`.
pub fn ultrafilter_suite(engine: &Engine, max_base: usize) -> SuiteReport {
    let mut report = SuiteReport::new("ultrafilter", engine);
    let u = engine.universe();
    let adjoined: Vec<ContinuousMap> = u
        .spaces()
        .iter()
        .filter(|a| !a.is_empty() && a.len() <= max_base)
        .flat_map(|a| (0..a.len()).map(move |p| adjoin_point(a, p).expect("non-empty base")))
        .collect();
    let compact = MapClass::seeds(COMPACTNESS_SEEDS.iter().map(|s| parse_map(s).expect("valid literal")));
    let open_point = seed("{o} => {o->c}");
    let truncated = word("r,<5,l");
    let rows: Vec<(usize, Vec<String>)> = adjoined
        .par_iter()
        .map(|g| {
            let lit = print_map_relabeled(g);
            let mut failures = Vec::new();
            let mut checked = 0;
            for k in u.spaces() {
                checked += 1;
                let to_point = ContinuousMap::to_point(Arc::clone(k));
                if !engine.lifts(g, &to_point) {
                    failures.push(format!("{lit} against {}", print_map_relabeled(&to_point)));
                }
            }
            checked += 1;
            if !engine.member_of_word_class(g, &compact, &word("l")).0 {
                failures.push(format!("{lit} not in the left orthogonal of the compactness maps"));
            }
            if u.bound() >= 4 {
                checked += 1;
                if !engine.member_of_word_class(g, &open_point, &truncated).0 {
                    failures.push(format!("{lit} not in r,<5,l of {{o}} => {{o->c}}"));
                }
            }
            (checked, failures)
        })
        .collect();
    for (checked, failures) in rows {
        report.checked += checked;
        report.failures.extend(failures);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::build_universe;

    #[test]
    fn suites_pass_at_universe_three() {
        let e = Engine::new(Arc::new(build_universe(3).unwrap()));
        for r in [iterated_suite(&e), urysohn_suite(&e), ultrafilter_suite(&e, 3)] {
            assert!(r.passed(), "{}: {:?}", r.suite, r.failures);
            assert!(r.checked > 0);
        }
    }
}
