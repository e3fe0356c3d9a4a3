//! Lifting properties between continuous maps of finite topological spaces.
//!
//! Finite spaces are handled as finite preorders ([`space`]), continuous maps
//! as monotone assignments ([`map`]). The [`lifting`] module decides `f ⋌ g`
//! and evaluates iterated orthogonals relative to a bounded universe of
//! spaces; [`catalogue`] lists topological properties defined this way next
//! to their classical definitions.
//!
//! ```
//! use finlift_core::lifting::{build_universe, has_lifting, Engine, MapClass};
//! use finlift_core::parse_map;
//! use std::sync::Arc;
//!
//! let f = parse_map("{} => {*}").unwrap();
//! let g = parse_map("{a,b} => {a=b}").unwrap();
//! assert!(has_lifting(&f, &g).holds);
//!
//! let engine = Engine::new(Arc::new(build_universe(3).unwrap()));
//! let surjections = engine.eval_word(&MapClass::seeds([f]), &"r".parse().unwrap());
//! assert!(surjections.contains(&g));
//! ```

pub mod catalogue;
pub mod json;
pub mod lifting;
pub mod map;
pub mod notation;
pub mod space;

pub use map::{hom_set, maps_isomorphic, ContinuousMap, MapError, MapOracles};
pub use notation::{parse_map, parse_space, print_map, print_space, ParseError};
pub use space::{enumerate_spaces, FiniteSpace, PointSet, SpaceError, SpaceOracles};
