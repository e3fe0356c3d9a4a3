//! Topological properties written as lifting conditions, each paired with
//! its classical definition so the two can be compared exhaustively.

mod constructions;
mod suites;
mod verify;

pub use constructions::{adjoin_point, zigzag_map};
pub use suites::{iterated_suite, ultrafilter_suite, urysohn_suite, SuiteReport};
pub use verify::{check_property, combine_exactness, verify_catalogue, verify_entry, EntryReport, Subject, VerificationReport};

use serde::Serialize;
use thiserror::Error;

use crate::lifting::{Exactness, MapClass, OrthWord, Side};
use crate::map::{ContinuousMap, MapError};
use crate::notation::{parse_map, ParseError};
use crate::space::{FiniteSpace, SpaceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogueError {
    #[error("the space is empty, so it carries no ultrafilter")]
    EmptySpace,
    #[error("no point with index {0}")]
    NoSuchPoint(usize),
    #[error("zigzag length must be odd and positive, got {0}")]
    EvenZigzag(usize),
    #[error("property `{0}` applies to {1}s")]
    WrongSubject(&'static str, &'static str),
    #[error(transparent)]
    Literal(ParseError),
    #[error(transparent)]
    Space(SpaceError),
    #[error(transparent)]
    Map(MapError),
}

/// How a space is turned into a map for a space property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceAs {
    /// `X -> {*}`
    ToPoint,
    /// `{} -> X`
    FromEmpty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubjectKind {
    Map,
    Space,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Form {
    /// The subject lies in `{seed}^side`: `seed ⋌ subject` for `R`,
    /// `subject ⋌ seed` for `L`.
    DirectLifting {
        #[serde(serialize_with = "side_name")]
        side: Side,
        seed: &'static str,
        via: Option<SpaceAs>,
    },
    /// The subject lies in the class `word` of `seeds`.
    MembershipInWord {
        seeds: Vec<&'static str>,
        word: &'static str,
        via: Option<SpaceAs>,
    },
    /// Every map from `probe` into the subject space (only injective ones if
    /// `injective_only`) lifts against `rhs`.
    QuantifiedLifting {
        probe: &'static str,
        injective_only: bool,
        rhs: &'static str,
    },
}

fn side_name<S: serde::Serializer>(side: &Side, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match side {
        Side::L => "l",
        Side::R => "r",
    })
}

/// Classical definitions the lifting verdicts are compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Oracle {
    Surjective,
    Injective,
    InducedTopology,
    DenseImage,
    ClosedMap,
    SubspaceEmbedding,
    ClosedEmbedding,
    Isomorphism,
    T0,
    T1,
    ConnectedOrEmpty,
    Nonempty,
    Discrete,
    AntidiscreteNonempty,
    TotallyDisconnectedNonempty,
    Hausdorff,
    RegularT3,
    NormalT4,
    /// Every finite space is quasi-compact.
    QuasiCompact,
}

impl Oracle {
    pub fn on_map(self, f: &ContinuousMap) -> Option<bool> {
        let o = f.oracles();
        Some(match self {
            Oracle::Surjective => o.is_surjective,
            Oracle::Injective => o.is_injective,
            Oracle::InducedTopology => o.is_induced_topology,
            Oracle::DenseImage => o.is_dense_image,
            Oracle::ClosedMap => o.is_closed_map,
            Oracle::SubspaceEmbedding => o.is_subspace_embedding,
            Oracle::ClosedEmbedding => o.is_subspace_embedding && f.cod().is_closed(f.image()),
            Oracle::Isomorphism => o.is_isomorphism,
            _ => return None,
        })
    }

    pub fn on_space(self, s: &FiniteSpace) -> Option<bool> {
        let o = s.oracles();
        Some(match self {
            Oracle::T0 => o.is_t0,
            Oracle::T1 => o.is_t1,
            Oracle::ConnectedOrEmpty => o.is_connected,
            Oracle::Nonempty => o.is_nonempty,
            Oracle::Discrete => o.is_discrete,
            Oracle::AntidiscreteNonempty => o.is_antidiscrete && o.is_nonempty,
            Oracle::TotallyDisconnectedNonempty => o.is_totally_disconnected && o.is_nonempty,
            Oracle::Hausdorff => o.is_hausdorff,
            Oracle::RegularT3 => o.is_regular_t3,
            Oracle::NormalT4 => o.is_normal_t4,
            Oracle::QuasiCompact => true,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyDef {
    pub name: &'static str,
    pub subject: SubjectKind,
    pub form: Form,
    pub oracle: Option<Oracle>,
    pub exactness: Exactness,
    pub summary: &'static str,
}

impl PropertyDef {
    fn direct(
        name: &'static str,
        subject: SubjectKind,
        side: Side,
        seed: &'static str,
        via: Option<SpaceAs>,
        oracle: Oracle,
        summary: &'static str,
    ) -> Self {
        PropertyDef {
            name,
            subject,
            form: Form::DirectLifting { side, seed, via },
            oracle: Some(oracle),
            exactness: Exactness::Exact,
            summary,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn word(
        name: &'static str,
        subject: SubjectKind,
        seeds: Vec<&'static str>,
        word: &'static str,
        via: Option<SpaceAs>,
        oracle: Oracle,
        exactness: Exactness,
        summary: &'static str,
    ) -> Self {
        PropertyDef {
            name,
            subject,
            form: Form::MembershipInWord { seeds, word, via },
            oracle: Some(oracle),
            exactness,
            summary,
        }
    }

    fn quantified(
        name: &'static str,
        probe: &'static str,
        injective_only: bool,
        rhs: &'static str,
        oracle: Oracle,
        summary: &'static str,
    ) -> Self {
        PropertyDef {
            name,
            subject: SubjectKind::Space,
            form: Form::QuantifiedLifting {
                probe,
                injective_only,
                rhs,
            },
            oracle: Some(oracle),
            exactness: Exactness::Exact,
            summary,
        }
    }

    /// Every map literal the entry mentions.
    pub fn literals(&self) -> Vec<&'static str> {
        match &self.form {
            Form::DirectLifting { seed, .. } => vec![seed],
            Form::MembershipInWord { seeds, .. } => seeds.clone(),
            Form::QuantifiedLifting { rhs, .. } => vec![rhs],
        }
    }

    /// The seed class of a word entry.
    pub fn seed_class(&self) -> Option<Result<MapClass, ParseError>> {
        match &self.form {
            Form::MembershipInWord { seeds, .. } => Some(
                seeds
                    .iter()
                    .map(|s| parse_map(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map(MapClass::seeds),
            ),
            _ => None,
        }
    }

    pub fn parsed_word(&self) -> Option<OrthWord> {
        match &self.form {
            Form::MembershipInWord { word, .. } => Some(word.parse().expect("catalogue words are valid")),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }
}

const SURJ_SEED: &str = "{} => {*}";
const GLUE_ANTIDISCRETE: &str = "{x<->y} => {x=y}";
const GLUE_SIERPINSKI: &str = "{o->c} => {o=c}";
const CLOSED_POINT: &str = "{c} => {o->c}";
const OPEN_POINT: &str = "{o} => {o->c}";
const GLUE_DISCRETE: &str = "{a,b} => {a=b}";

/// The four maps whose double orthogonal detects compactness of Hausdorff
/// spaces.
pub const COMPACTNESS_SEEDS: [&str; 4] = [
    "{B1<-O->B2} => {*}",
    "{U'} => {U->U'}",
    "{x<->y} => {x=y}",
    "{o->c} => {o=c}",
];

/// The normality condition: `{} -> X` lifts against this map.
pub const T4_RHS: &str = "{a<-U->x<-V->b} => {a<-U=x=V->b}";

pub fn catalogue() -> Vec<PropertyDef> {
    use Exactness::{FiniteTrivial, RelativeApproximation};
    use SpaceAs::{FromEmpty, ToPoint};
    use SubjectKind::{Map, Space};
    vec![
        PropertyDef::direct("surjective", Map, Side::R, SURJ_SEED, None, Oracle::Surjective, "every point of the codomain is hit"),
        PropertyDef::direct("injective", Map, Side::L, GLUE_ANTIDISCRETE, None, Oracle::Injective, "distinct points stay distinct"),
        PropertyDef::direct("induced-topology", Map, Side::L, GLUE_SIERPINSKI, None, Oracle::InducedTopology, "every open set of the domain is a preimage of an open set"),
        PropertyDef::direct("dense-image", Map, Side::L, CLOSED_POINT, None, Oracle::DenseImage, "the closure of the image is everything"),
        PropertyDef::direct("closed-map", Map, Side::R, OPEN_POINT, None, Oracle::ClosedMap, "images of closed sets are closed"),
        PropertyDef::word("subspace-embedding", Map, vec![SURJ_SEED], "rr", None, Oracle::SubspaceEmbedding, RelativeApproximation, "injective with the induced topology"),
        PropertyDef::word("isomorphism", Map, vec![SURJ_SEED], "ll", None, Oracle::Isomorphism, RelativeApproximation, "homeomorphism"),
        PropertyDef::word("closed-embedding", Map, vec![CLOSED_POINT], "lr", None, Oracle::ClosedEmbedding, RelativeApproximation, "embedding onto a closed subset"),
        PropertyDef::word("proper-evidence", Map, vec![OPEN_POINT], "r,<5,l,r", None, Oracle::ClosedMap, RelativeApproximation, "conjecturally the proper maps; closed maps between finite spaces"),
        PropertyDef::direct("t0", Space, Side::R, GLUE_ANTIDISCRETE, Some(ToPoint), Oracle::T0, "distinct points have distinct closures"),
        PropertyDef::direct("t1", Space, Side::R, GLUE_SIERPINSKI, Some(ToPoint), Oracle::T1, "points are closed"),
        PropertyDef::direct("connected-or-empty", Space, Side::L, GLUE_DISCRETE, Some(ToPoint), Oracle::ConnectedOrEmpty, "no splitting into two disjoint non-empty open sets"),
        PropertyDef::direct("nonempty", Space, Side::L, SURJ_SEED, Some(ToPoint), Oracle::Nonempty, "has a point"),
        PropertyDef::word("discrete", Space, vec![SURJ_SEED], "rl", Some(FromEmpty), Oracle::Discrete, RelativeApproximation, "every subset is open"),
        PropertyDef::word("antidiscrete", Space, vec![GLUE_ANTIDISCRETE], "lr", Some(ToPoint), Oracle::AntidiscreteNonempty, RelativeApproximation, "non-empty, and only the empty set and the whole space are open"),
        PropertyDef::word("antidiscrete-rr", Space, vec![GLUE_DISCRETE], "rr", Some(ToPoint), Oracle::AntidiscreteNonempty, RelativeApproximation, "the same, second description"),
        PropertyDef::word("totally-disconnected-nonempty", Space, vec![GLUE_DISCRETE], "lr", Some(ToPoint), Oracle::TotallyDisconnectedNonempty, RelativeApproximation, "non-empty with singleton components"),
        PropertyDef::quantified("hausdorff", "{x,y}", true, "{x->o<-y} => {x=o=y}", Oracle::Hausdorff, "distinct points have disjoint neighbourhoods"),
        PropertyDef::quantified("hausdorff-variant", "{x,y}", true, "{p<-s->q} => {p=s=q}", Oracle::Hausdorff, "the same condition with open and closed points swapped"),
        PropertyDef::quantified("regular-t3", "{x}", false, "{x->X<-U->F} => {x=X=U->F}", Oracle::RegularT3, "points and closed sets are separated"),
        PropertyDef::direct("normal-t4", Space, Side::L, T4_RHS, Some(FromEmpty), Oracle::NormalT4, "disjoint closed sets are separated"),
        PropertyDef::word("compact-hausdorff", Space, COMPACTNESS_SEEDS.to_vec(), "lr", Some(ToPoint), Oracle::QuasiCompact, FiniteTrivial, "compactness of Hausdorff spaces; every finite space passes"),
        PropertyDef::word("compact-hausdorff-truncated", Space, vec![OPEN_POINT], "r,<5,l,r", Some(ToPoint), Oracle::QuasiCompact, FiniteTrivial, "compactness through the truncated class"),
    ]
}

/// Looks an entry up by name.
pub fn property(name: &str) -> Option<PropertyDef> {
    catalogue().into_iter().find(|p| p.name == name)
}

/// Word entries whose seed class and word are `seeds` and `word`.
pub fn entries_for_word(seeds: &MapClass, word: &OrthWord) -> Vec<PropertyDef> {
    catalogue()
        .into_iter()
        .filter(|p| p.parsed_word().as_ref() == Some(word))
        .filter(|p| matches!(p.seed_class(), Some(Ok(c)) if c.keys() == seeds.keys()))
        .collect()
}
