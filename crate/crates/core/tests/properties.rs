use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::Index;

use finlift_core::json::MapJson;
use finlift_core::lifting::lifts;
use finlift_core::notation::print_map_relabeled;
use finlift_core::{hom_set, maps_isomorphic, parse_map, parse_space, print_space, ContinuousMap, FiniteSpace};

fn space(max: usize) -> impl Strategy<Value = FiniteSpace> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arrows: Vec<(usize, usize)> =
                (0..n * n).filter(|&k| bits[k]).map(|k| (k / n, k % n)).collect();
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            FiniteSpace::from_generators(labels, &arrows).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn map(max: usize) -> impl Strategy<Value = ContinuousMap> {
    (space(max), space(max), any::<Index>()).prop_filter_map("empty hom-set", |(a, b, i)| {
        let homs = hom_set(&Arc::new(a), &Arc::new(b));
        (!homs.is_empty()).then(|| homs[i.index(homs.len())].clone())
    })
}

fn relabel(f: &ContinuousMap, pd: &[usize], pc: &[usize]) -> ContinuousMap {
    let mut a = vec![0; f.dom().len()];
    for (i, &v) in f.assignment().iter().enumerate() {
        a[pd[i]] = pc[v];
    }
    ContinuousMap::new(Arc::new(f.dom().permute(pd)), Arc::new(f.cod().permute(pc)), a).unwrap()
}

fn relabeled(max: usize) -> impl Strategy<Value = (ContinuousMap, ContinuousMap)> {
    map(max).prop_flat_map(|f| {
        let (n, m) = (f.dom().len(), f.cod().len());
        (Just(f), permutation(n), permutation(m)).prop_map(|(f, pd, pc)| {
            let g = relabel(&f, &pd, &pc);
            (f, g)
        })
    })
}

proptest! {
    #[test]
    fn canonical_key_of_shuffled_space(s in space(5).prop_flat_map(|s| { let n = s.len(); (Just(s), permutation(n)) })) {
        let (s, p) = s;
        prop_assert_eq!(s.permute(&p).canonical_key(), s.canonical_key());
        prop_assert!(s.permute(&p).homeomorphism_to(&s).is_some());
    }

    #[test]
    fn map_key_ignores_labels((f, g) in relabeled(4)) {
        prop_assert_eq!(f.canonical_key(), g.canonical_key());
        prop_assert!(maps_isomorphic(&f, &g).is_some());
    }

    #[test]
    fn lifting_ignores_labels((f, f2) in relabeled(3), (g, g2) in relabeled(3)) {
        prop_assert_eq!(lifts(&f, &g), lifts(&f2, &g2));
    }

    #[test]
    fn identities_lift_both_ways(f in map(3), s in space(3)) {
        let id = ContinuousMap::identity(Arc::new(s));
        prop_assert!(lifts(&id, &f));
        prop_assert!(lifts(&f, &id));
    }

    #[test]
    fn self_lifting_means_isomorphism(f in map(3)) {
        prop_assert_eq!(lifts(&f, &f), f.oracles().is_isomorphism);
    }

    #[test]
    fn right_class_closed_under_composition((f, g) in composable(3)) {
        let seed = parse_map("{o} => {o->c}").unwrap();
        let h = f.compose(&g).unwrap();
        if lifts(&seed, &f) && lifts(&seed, &g) {
            prop_assert!(lifts(&seed, &h));
        }
    }

    #[test]
    fn counterexample_squares_are_genuine(f in map(3), g in map(3)) {
        let report = finlift_core::lifting::has_lifting(&f, &g);
        match report.counterexample {
            Some(sq) => prop_assert!(!report.holds && sq.verify_counterexample(&f, &g)),
            None => prop_assert!(report.holds),
        }
    }

    #[test]
    fn space_notation_round_trips(s in space(5)) {
        let back = parse_space(&print_space(&s)).unwrap();
        prop_assert_eq!(back.canonical_key(), s.canonical_key());
    }

    #[test]
    fn map_notation_round_trips(f in map(4)) {
        let back = parse_map(&print_map_relabeled(&f)).unwrap();
        prop_assert!(maps_isomorphic(&back, &f).is_some());
    }

    #[test]
    fn json_round_trips(f in map(4)) {
        let text = serde_json::to_string(&MapJson::from_map(&f)).unwrap();
        let back: MapJson = serde_json::from_str(&text).unwrap();
        let g = back.to_map().unwrap();
        prop_assert_eq!(g.assignment(), f.assignment());
        prop_assert!(g.dom().same_relation(f.dom()) && g.cod().same_relation(f.cod()));
    }
}

/// Pairs `f: A -> B`, `g: B -> C`.
fn composable(max: usize) -> impl Strategy<Value = (ContinuousMap, ContinuousMap)> {
    (map(max), space(max), any::<Index>()).prop_filter_map("empty hom-set", |(f, c, i)| {
        let homs = hom_set(f.cod_arc(), &Arc::new(c));
        (!homs.is_empty()).then(|| (f, homs[i.index(homs.len())].clone()))
    })
}
