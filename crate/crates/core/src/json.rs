//! JSON shapes for spaces, maps and classes.
//!
//! ```text
//! space: {"points": [label, ...], "arrows": [[from, to], ...]}
//! map:   {"dom": space, "cod": space, "assignment": [index, ...], "literal": text}
//! class: {"word": text | null, "universe": n | null, "exactness": text, "members": [map, ...]}
//! ```
//!
//! `arrows` is a transitive reduction; reading a space back takes its
//! reflexive-transitive closure. `assignment[i]` is the codomain index of
//! domain point `i`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lifting::{Exactness, MapClass};
use crate::map::{ContinuousMap, MapError};
use crate::notation::{print_map_relabeled, reduction_arrows};
use crate::space::{FiniteSpace, SpaceError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("bad space: {0}")]
    Space(#[from] SpaceError),
    #[error("bad map: {0}")]
    Map(#[from] MapError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub arrows: Vec<(String, String)>,
}

impl SpaceJson {
    pub fn from_space(s: &FiniteSpace) -> Self {
        SpaceJson {
            points: s.labels().to_vec(),
            arrows: reduction_arrows(s)
                .into_iter()
                .map(|(a, b)| (s.label(a).to_owned(), s.label(b).to_owned()))
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<FiniteSpace, JsonError> {
        Ok(FiniteSpace::new(&self.points, &self.arrows)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub dom: SpaceJson,
    pub cod: SpaceJson,
    pub assignment: Vec<usize>,
    pub literal: String,
}

impl MapJson {
    pub fn from_map(f: &ContinuousMap) -> Self {
        MapJson {
            dom: SpaceJson::from_space(f.dom()),
            cod: SpaceJson::from_space(f.cod()),
            assignment: f.assignment().to_vec(),
            literal: print_map_relabeled(f),
        }
    }

    /// Rebuilds the map from `dom`, `cod` and `assignment`; `literal` is
    /// informational.
    pub fn to_map(&self) -> Result<ContinuousMap, JsonError> {
        Ok(ContinuousMap::new(
            Arc::new(self.dom.to_space()?),
            Arc::new(self.cod.to_space()?),
            self.assignment.clone(),
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub word: Option<String>,
    pub universe: Option<usize>,
    pub exactness: String,
    pub members: Vec<MapJson>,
}

impl ClassJson {
    pub fn from_class(c: &MapClass) -> Self {
        ClassJson {
            word: c.word().map(|w| w.to_string()),
            universe: c.universe(),
            exactness: c.exactness().to_string(),
            members: c.members().iter().map(MapJson::from_map).collect(),
        }
    }

    pub fn exactness(&self) -> Option<Exactness> {
        [Exactness::Exact, Exactness::RelativeApproximation, Exactness::FiniteTrivial]
            .into_iter()
            .find(|e| e.as_str() == self.exactness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::{build_universe, Engine, Side};
    use crate::map::maps_isomorphic;
    use crate::notation::{parse_map, parse_space};

    #[test]
    fn space_shape() {
        let s = parse_space("{a->b->c, d<->e}").unwrap();
        let j = SpaceJson::from_space(&s);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"points":["a","b","c","d","e"],"arrows":[["a","b"],["b","c"],["d","e"],["e","d"]]}"#
        );
        let back: SpaceJson = serde_json::from_str(&text).unwrap();
        assert!(back.to_space().unwrap().same_relation(&s));
    }

    #[test]
    fn map_round_trip_over_small_universe() {
        let u = build_universe(3).unwrap();
        for f in u.maps() {
            let text = serde_json::to_string(&MapJson::from_map(f)).unwrap();
            let back: MapJson = serde_json::from_str(&text).unwrap();
            let g = back.to_map().unwrap();
            assert_eq!(g.assignment(), f.assignment());
            assert!(g.dom().same_relation(f.dom()) && g.cod().same_relation(f.cod()));
            assert!(maps_isomorphic(&parse_map(&back.literal).unwrap(), f).is_some());
        }
    }

    #[test]
    fn class_round_trip() {
        let e = Engine::new(Arc::new(build_universe(2).unwrap()));
        let c = e.orthogonal(&MapClass::seeds([parse_map("{} => {*}").unwrap()]), Side::R);
        let j = ClassJson::from_class(&c);
        let back: ClassJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.word.as_deref(), Some("r"));
        assert_eq!(back.universe, Some(2));
        assert_eq!(back.exactness(), Some(Exactness::Exact));
        assert_eq!(back.members.len(), c.len());
    }

    #[test]
    fn invalid_json_maps_are_rejected() {
        let mut j = MapJson::from_map(&parse_map("{o->c} => {o=c}").unwrap());
        j.assignment = vec![0, 5];
        assert!(matches!(j.to_map(), Err(JsonError::Map(_))));
        j.dom.arrows.push(("o".into(), "zz".into()));
        assert!(matches!(j.to_map(), Err(JsonError::Space(_))));
    }
}
