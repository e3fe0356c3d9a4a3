//! Memoized orthogonal computations over a fixed universe.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use dashmap::DashMap;
use rayon::prelude::*;

use super::class::{Exactness, MapClass};
use super::universe::Universe;
use super::word::{OrthWord, Side, Step};
use crate::map::{ContinuousMap, MapKey};

/// Interned ids: universe maps keep their universe index, anything else is
/// appended after them.
#[derive(Default)]
struct Interner {
    ids: HashMap<MapKey, u32>,
    extra: Vec<(MapKey, ContinuousMap)>,
}

/// Lifting queries and orthogonal classes over one universe, with a shared
/// memo of `f ⋌ g` verdicts keyed by canonical forms.
pub struct Engine {
    universe: Arc<Universe>,
    interner: Mutex<Interner>,
    memo: DashMap<u64, bool>,
    classes: Mutex<HashMap<ClassKey, Arc<OnceLock<Arc<MapClass>>>>>,
    computed: AtomicU64,
    hits: AtomicU64,
}

fn pair(f: u32, g: u32) -> u64 {
    (u64::from(f) << 32) | u64::from(g)
}

/// Seeds (by key and origin) and the word applied to them.
type ClassKey = (Vec<MapKey>, Option<String>, String);

/// A class member ready for the sweep.
struct Probe {
    id: u32,
    map: ContinuousMap,
}

impl Engine {
    pub fn new(universe: Arc<Universe>) -> Self {
        Engine {
            universe,
            interner: Mutex::new(Interner::default()),
            memo: DashMap::new(),
            classes: Mutex::new(HashMap::new()),
            computed: AtomicU64::new(0),
            hits: AtomicU64::new(0),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Id of the canonical map with key `key`, interning it if new.
    fn intern(&self, key: &MapKey, canonical: impl FnOnce() -> ContinuousMap) -> u32 {
        if let Some(i) = self.universe.find_key(key) {
            return i as u32;
        }
        let mut inner = self.interner.lock().expect("interner lock");
        if let Some(&i) = inner.ids.get(key) {
            return i;
        }
        let id = (self.universe.maps().len() + inner.extra.len()) as u32;
        inner.extra.push((key.clone(), canonical()));
        inner.ids.insert(key.clone(), id);
        id
    }

    fn probe(&self, f: &ContinuousMap) -> Probe {
        let c = f.canonical().map;
        let key = c.raw_key();
        let id = self.intern(&key, || c.clone());
        Probe { id, map: c }
    }

    fn key_of(&self, id: u32) -> MapKey {
        let n = self.universe.maps().len();
        if (id as usize) < n {
            self.universe.key(id as usize).clone()
        } else {
            self.interner.lock().expect("interner lock").extra[id as usize - n].0.clone()
        }
    }

    fn lifts_ids(&self, fid: u32, f: &ContinuousMap, gid: u32, g: &ContinuousMap) -> bool {
        let k = pair(fid, gid);
        if let Some(v) = self.memo.get(&k) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return *v;
        }
        let v = super::lifts(f, g);
        self.computed.fetch_add(1, Ordering::Relaxed);
        self.memo.insert(k, v);
        v
    }

    /// `f ⋌ g`, memoized.
    pub fn lifts(&self, f: &ContinuousMap, g: &ContinuousMap) -> bool {
        let (pf, pg) = (self.probe(f), self.probe(g));
        self.lifts_ids(pf.id, &pf.map, pg.id, &pg.map)
    }

    /// Does universe map `candidate` lift against every probe on `side`?
    /// `killer` remembers the probe that rejected the previous candidate.
    fn passes(&self, candidate: usize, side: Side, probes: &[Probe], killer: &AtomicUsize) -> bool {
        let c = self.universe.map(candidate);
        let cid = candidate as u32;
        let test = |p: &Probe| match side {
            Side::L => self.lifts_ids(cid, c, p.id, &p.map),
            Side::R => self.lifts_ids(p.id, &p.map, cid, c),
        };
        let first = killer.load(Ordering::Relaxed);
        if first < probes.len() && !test(&probes[first]) {
            return false;
        }
        for (k, p) in probes.iter().enumerate() {
            if k != first && !test(p) {
                killer.store(k, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    fn probes(&self, class: &MapClass) -> Vec<Probe> {
        let mut probes: Vec<Probe> = class
            .members()
            .iter()
            .zip(class.keys())
            .map(|(m, k)| Probe {
                id: self.intern(k, || m.clone()),
                map: m.clone(),
            })
            .collect();
        // Small members are cheap and tend to reject first.
        probes.sort_by_key(|p| (p.map.dom().len() + p.map.cod().len(), p.id));
        probes
    }

    fn sweep(&self, class: &MapClass, side: Side) -> Vec<usize> {
        let probes = self.probes(class);
        let killer = AtomicUsize::new(0);
        (0..self.universe.maps().len())
            .into_par_iter()
            .filter(|&c| self.passes(c, side, &probes, &killer))
            .collect()
    }

    fn class_from_ids(&self, ids: Vec<usize>, word: Option<OrthWord>, exactness: Exactness, complete: bool) -> MapClass {
        let members = ids.iter().map(|&i| self.universe.map(i).clone()).collect();
        let keys = ids.iter().map(|&i| self.universe.key(i).clone()).collect();
        MapClass::computed(members, keys, word, self.universe.bound(), exactness, complete)
    }

    /// Exactness of an orthogonal of `class`: exact when the whole class is
    /// known exactly, otherwise only an approximation from outside.
    fn orth_exactness(class: &MapClass) -> Exactness {
        if class.is_complete() && class.exactness() == Exactness::Exact {
            Exactness::Exact
        } else {
            Exactness::RelativeApproximation
        }
    }

    /// `{ f in u : f ⋌ g for all g in class }` for `L`, dually for `R`.
    pub fn orthogonal(&self, class: &MapClass, side: Side) -> MapClass {
        let word = Self::extend(class.word(), Step::Orth(side));
        let ids = self.sweep(class, side);
        self.class_from_ids(ids, Some(word), Self::orth_exactness(class), false)
    }

    /// Keeps members with both ends of size below `k`. The result is the
    /// whole truncated class when `class` was exact and the universe holds
    /// every space of size `k - 1`.
    pub fn truncate(&self, class: &MapClass, k: usize) -> MapClass {
        let word = Self::extend(class.word(), Step::Trunc(k));
        let (members, keys): (Vec<_>, Vec<_>) = class
            .members()
            .iter()
            .zip(class.keys())
            .filter(|(m, _)| m.dom().len() < k && m.cod().len() < k)
            .map(|(m, key)| (m.clone(), key.clone()))
            .unzip();
        let complete =
            class.is_complete() || (class.exactness() == Exactness::Exact && k <= self.universe.bound() + 1);
        MapClass::computed(members, keys, Some(word), self.universe.bound(), class.exactness(), complete)
    }

    fn extend(word: Option<&OrthWord>, step: Step) -> OrthWord {
        let mut steps = word.map(|w| w.steps().to_vec()).unwrap_or_default();
        steps.push(step);
        OrthWord::new(steps).expect("non-empty")
    }

    /// Applies `word` to `seeds` left to right.
    pub fn eval_word(&self, seeds: &MapClass, word: &OrthWord) -> MapClass {
        (*self.eval_shared(seeds, word)).clone()
    }

    /// Like [`Self::eval_word`], sharing the result (and every prefix) with
    /// later calls on this engine.
    pub fn eval_shared(&self, seeds: &MapClass, word: &OrthWord) -> Arc<MapClass> {
        let key = (seeds.keys().to_vec(), seeds.word().map(|w| w.to_string()), word.to_string());
        let cell = self
            .classes
            .lock()
            .expect("class cache lock")
            .entry(key)
            .or_default()
            .clone();
        cell.get_or_init(|| {
            let before = match word.prefix() {
                Some(p) => self.eval_shared(seeds, &p),
                None => Arc::new(seeds.clone()),
            };
            Arc::new(match word.last() {
                Step::Orth(side) => self.orthogonal(&before, side),
                Step::Trunc(k) => self.truncate(&before, k),
            })
        })
        .clone()
    }

    /// Is `f` in the class `word` of `seeds`? Only the final step is tested
    /// directly against `f`, so `f` need not lie in the universe.
    pub fn member_of_word_class(&self, f: &ContinuousMap, seeds: &MapClass, word: &OrthWord) -> (bool, Exactness) {
        match word.last() {
            Step::Trunc(k) => {
                let fits = f.dom().len() < k && f.cod().len() < k;
                let (inside, exactness) = match word.prefix() {
                    Some(p) => self.member_of_word_class(f, seeds, &p),
                    None => (seeds.contains(f), Exactness::Exact),
                };
                (fits && inside, exactness)
            }
            Step::Orth(side) => {
                let before = match word.prefix() {
                    Some(p) => self.eval_shared(seeds, &p),
                    None => Arc::new(seeds.clone()),
                };
                let pf = self.probe(f);
                let holds = before.members().iter().zip(before.keys()).all(|(m, k)| {
                    let id = self.intern(k, || m.clone());
                    match side {
                        Side::L => self.lifts_ids(pf.id, &pf.map, id, m),
                        Side::R => self.lifts_ids(id, m, pf.id, &pf.map),
                    }
                });
                (holds, Self::orth_exactness(&before))
            }
        }
    }

    /// `(computed, memo hits)` since construction.
    pub fn stats(&self) -> (u64, u64) {
        (self.computed.load(Ordering::Relaxed), self.hits.load(Ordering::Relaxed))
    }

    /// Every memoized verdict as `(f key, g key, holds)`, sorted.
    pub fn export(&self) -> Vec<(MapKey, MapKey, bool)> {
        let raw: Vec<(u64, bool)> = self.memo.iter().map(|e| (*e.key(), *e.value())).collect();
        let mut out: Vec<(MapKey, MapKey, bool)> = raw
            .into_iter()
            .map(|(k, v)| (self.key_of((k >> 32) as u32), self.key_of(k as u32), v))
            .collect();
        out.sort();
        out
    }

    /// Seeds the memo with verdicts for maps of this universe. Entries whose
    /// maps fall outside it are skipped; returns how many were loaded.
    pub fn import(&self, entries: impl IntoIterator<Item = (MapKey, MapKey, bool)>) -> usize {
        let mut loaded = 0;
        for (f, g, v) in entries {
            if let (Some(a), Some(b)) = (self.universe.find_key(&f), self.universe.find_key(&g)) {
                self.memo.insert(pair(a as u32, b as u32), v);
                loaded += 1;
            }
        }
        loaded
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::build_universe;
    use crate::notation::parse_map;

    fn engine(n: usize) -> Engine {
        Engine::new(Arc::new(build_universe(n).unwrap()))
    }

    fn seed(s: &str) -> MapClass {
        MapClass::seeds([parse_map(s).unwrap()])
    }

    #[test]
    fn right_orthogonal_of_point_seed_is_surjections() {
        let e = engine(3);
        let c = e.orthogonal(&seed("{} => {*}"), Side::R);
        assert_eq!(c.exactness(), Exactness::Exact);
        let surj: Vec<_> = e.universe().maps().iter().filter(|m| m.oracles().is_surjective).collect();
        assert_eq!(c.len(), surj.len());
        assert!(c.members().iter().all(|m| m.oracles().is_surjective));
    }

    #[test]
    fn left_orthogonal_of_point_seed() {
        let e = engine(3);
        let c = e.orthogonal(&seed("{} => {*}"), Side::L);
        for m in e.universe().maps() {
            let expected = !m.dom().is_empty() || m.cod().is_empty();
            assert_eq!(c.contains(m), expected, "{m}");
        }
    }

    #[test]
    fn exactness_tracking() {
        let e = engine(2);
        let s = seed("{o} => {o->c}");
        let r = e.eval_word(&s, &"r".parse().unwrap());
        assert_eq!(r.exactness(), Exactness::Exact);
        assert!(!r.is_complete());
        let rl = e.eval_word(&s, &"rl".parse().unwrap());
        assert_eq!(rl.exactness(), Exactness::RelativeApproximation);
        // Truncating inside the universe recovers the whole class.
        let rt = e.eval_word(&s, &"r,<3".parse().unwrap());
        assert!(rt.is_complete());
        assert_eq!(e.eval_word(&s, &"r,<3,l".parse().unwrap()).exactness(), Exactness::Exact);
        assert!(!e.eval_word(&s, &"r,<4".parse().unwrap()).is_complete());
        assert_eq!(rl.word().unwrap().to_string(), "r,l");
    }

    #[test]
    fn membership_examples() {
        let e = engine(2);
        let t0 = seed("{x<->y} => {x=y}");
        let r: OrthWord = "r".parse().unwrap();
        let (m, x) = e.member_of_word_class(&parse_map("{x<->y} => {*}").unwrap(), &t0, &r);
        assert!(!m);
        assert_eq!(x, Exactness::Exact);
        assert!(e.member_of_word_class(&parse_map("{o->c} => {*}").unwrap(), &t0, &r).0);

        let p = seed("{} => {*}");
        let rl: OrthWord = "rl".parse().unwrap();
        let (m, x) = e.member_of_word_class(&parse_map("{} => {a,b}").unwrap(), &p, &rl);
        assert!(m);
        assert_eq!(x, Exactness::RelativeApproximation);
        assert!(!e.member_of_word_class(&parse_map("{} => {o->c}").unwrap(), &p, &rl).0);
    }

    #[test]
    fn membership_for_maps_outside_the_universe() {
        let e = engine(1);
        let t0 = seed("{x<->y} => {x=y}");
        let f = parse_map("{a->b->c} => {*}").unwrap();
        assert!(e.member_of_word_class(&f, &t0, &"r".parse().unwrap()).0);
    }

    #[test]
    fn memo_round_trip() {
        let e = engine(2);
        e.orthogonal(&seed("{} => {*}"), Side::R);
        let dump = e.export();
        assert!(!dump.is_empty());
        let fresh = engine(2);
        let loaded = fresh.import(dump.clone());
        assert!(loaded > 0);
        let again = fresh.orthogonal(&seed("{} => {*}"), Side::R);
        assert_eq!(again.len(), e.orthogonal(&seed("{} => {*}"), Side::R).len());
    }
}
