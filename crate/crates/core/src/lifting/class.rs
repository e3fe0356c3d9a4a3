use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::word::OrthWord;
use crate::map::{ContinuousMap, MapKey};

/// How much a verdict or class can be trusted beyond the finite universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    /// Agrees with the true class on every map of the universe.
    Exact,
    /// Computed against a universe-restricted class; a membership verdict
    /// of `true` is only a necessary condition.
    RelativeApproximation,
    /// The property holds for every finite space, so the check is a smoke test.
    FiniteTrivial,
}

impl Exactness {
    pub fn as_str(self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::RelativeApproximation => "relative-approximation",
            Exactness::FiniteTrivial => "finite-trivial",
        }
    }
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite set of maps in canonical form, pairwise non-isomorphic.
///
/// `complete` records that the members are the whole class, not merely the
/// part of it visible inside the universe: true for literal seeds and for
/// truncations that fit inside the universe.
#[derive(Debug, Clone)]
pub struct MapClass {
    members: Vec<ContinuousMap>,
    keys: Vec<MapKey>,
    word: Option<OrthWord>,
    universe: Option<usize>,
    exactness: Exactness,
    complete: bool,
}

impl MapClass {
    /// A literal seed class. Duplicates up to isomorphism are dropped.
    pub fn seeds(maps: impl IntoIterator<Item = ContinuousMap>) -> Self {
        let mut by_key = BTreeMap::new();
        for m in maps {
            let c = m.canonical().map;
            by_key.entry(c.raw_key()).or_insert(c);
        }
        let (keys, members) = by_key.into_iter().unzip();
        MapClass {
            members,
            keys,
            word: None,
            universe: None,
            exactness: Exactness::Exact,
            complete: true,
        }
    }

    /// Members already canonical and deduplicated, in the given order.
    pub(crate) fn computed(
        members: Vec<ContinuousMap>,
        keys: Vec<MapKey>,
        word: Option<OrthWord>,
        universe: usize,
        exactness: Exactness,
        complete: bool,
    ) -> Self {
        MapClass {
            members,
            keys,
            word,
            universe: Some(universe),
            exactness,
            complete,
        }
    }

    pub fn members(&self) -> &[ContinuousMap] {
        &self.members
    }

    pub fn keys(&self) -> &[MapKey] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The word that produced this class, `None` for seeds.
    pub fn word(&self) -> Option<&OrthWord> {
        self.word.as_ref()
    }

    /// The universe bound used, `None` for seeds.
    pub fn universe(&self) -> Option<usize> {
        self.universe
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Membership up to isomorphism.
    pub fn contains(&self, f: &ContinuousMap) -> bool {
        self.contains_key(&f.canonical_key())
    }

    pub fn contains_key(&self, key: &MapKey) -> bool {
        self.keys.contains(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_map;

    #[test]
    fn seeds_deduplicate_up_to_isomorphism() {
        let c = MapClass::seeds([
            parse_map("{a} => {a,b}").unwrap(),
            parse_map("{x} => {y,x}").unwrap(),
            parse_map("{} => {*}").unwrap(),
        ]);
        assert_eq!(c.len(), 2);
        assert!(c.contains(&parse_map("{p} => {p,q}").unwrap()));
        assert!(c.is_complete());
        assert_eq!(c.exactness(), Exactness::Exact);
        assert!(c.word().is_none());
    }

    #[test]
    fn exactness_names() {
        assert_eq!(
            serde_json::to_string(&Exactness::RelativeApproximation).unwrap(),
            "\"relative-approximation\""
        );
        assert_eq!(Exactness::FiniteTrivial.to_string(), "finite-trivial");
    }
}
