use finlift_core::lifting::Exactness;
use finlift_core::notation::reduction_arrows;
use finlift_core::{ContinuousMap, FiniteSpace};

/// `a |-> x, b |-> y`, or `(empty)`.
pub fn assignment(f: &ContinuousMap) -> String {
    if f.dom().is_empty() {
        return "(empty)".to_owned();
    }
    (0..f.dom().len())
        .map(|i| format!("{} |-> {}", f.dom().label(i), f.cod().label(f.apply(i))))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn counts(s: &FiniteSpace) -> String {
    let arrows = reduction_arrows(s).len();
    format!(
        "{} point{}, {} arrow{}",
        s.len(),
        plural(s.len()),
        arrows,
        plural(arrows)
    )
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

pub fn flags(pairs: &[(&str, bool)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn banner(e: Exactness, universe: usize) -> String {
    match e {
        Exactness::Exact => format!("exactness: exact (agrees with the true class on maps between spaces of size <= {universe})"),
        Exactness::RelativeApproximation => format!(
            "exactness: relative-approximation (quantifiers range over spaces of size <= {universe}; \
             verdicts are necessary-condition evidence, not a characterization)"
        ),
        Exactness::FiniteTrivial => "exactness: finite-trivial (every finite space has the property; \
             this is a smoke test, not an equivalence)"
            .to_owned(),
    }
}
