use std::sync::Arc;

use finlift_core::lifting::{build_universe, Engine, Exactness, LiftCache, MapClass, OrthWord, Side};
use finlift_core::parse_map;

fn engine(n: usize) -> Engine {
    Engine::new(Arc::new(build_universe(n).unwrap()))
}

fn seeds(lits: &[&str]) -> MapClass {
    MapClass::seeds(lits.iter().map(|s| parse_map(s).unwrap()))
}

#[test]
fn membership_agrees_with_listing() {
    let e = engine(3);
    let classes = [
        seeds(&["{} => {*}"]),
        seeds(&["{o} => {o->c}"]),
        seeds(&["{x<->y} => {x=y}", "{o->c} => {o=c}"]),
    ];
    for class in &classes {
        for w in ["l", "r", "lr", "rl", "rr", "r,<3,l", "l,<2"] {
            let word: OrthWord = w.parse().unwrap();
            let listed = e.eval_word(class, &word);
            for f in e.universe().maps() {
                let (member, _) = e.member_of_word_class(f, class, &word);
                assert_eq!(member, listed.contains(f), "{w}: {f:?}");
            }
        }
    }
}

#[test]
fn single_orthogonal_of_seeds_is_exact() {
    let e = engine(2);
    let class = seeds(&["{c} => {o->c}"]);
    for side in [Side::L, Side::R] {
        let c = e.orthogonal(&class, side);
        assert_eq!(c.exactness(), Exactness::Exact);
        assert_eq!(c.universe(), Some(2));
    }
    let deep = e.eval_word(&class, &"lr".parse().unwrap());
    assert_eq!(deep.exactness(), Exactness::RelativeApproximation);
}

#[test]
fn truncation_keeps_small_maps() {
    let e = engine(3);
    let r = e.eval_word(&seeds(&["{} => {*}"]), &"r,<3".parse().unwrap());
    assert!(!r.is_empty());
    assert!(r.members().iter().all(|f| f.dom().len() < 3 && f.cod().len() < 3));
    assert!(r.is_complete());
}

#[test]
fn disk_cache_survives_a_new_engine() {
    let dir = tempfile::tempdir().unwrap();
    let cache = LiftCache::new(dir.path());
    let first = engine(2);
    let class = seeds(&["{} => {*}"]);
    let listed = first.orthogonal(&class, Side::L);
    let exported = first.export();
    assert!(!exported.is_empty());
    cache.store(&exported).unwrap();

    let second = engine(2);
    assert_eq!(second.import(cache.load().unwrap()), exported.len());
    let again = second.orthogonal(&class, Side::L);
    assert_eq!(again.keys(), listed.keys());
    let (computed, _) = second.stats();
    assert_eq!(computed, 0, "every verdict should come from the cache");
}
