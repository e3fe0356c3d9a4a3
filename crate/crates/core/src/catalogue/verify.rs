use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{CatalogueError, Form, Oracle, PropertyDef, SpaceAs, SubjectKind};
use crate::lifting::{Engine, Exactness, MapClass, OrthWord, Side};
use crate::map::{hom_set, ContinuousMap};
use crate::notation::{parse_map, parse_space, print_map_relabeled};
use crate::space::FiniteSpace;

#[derive(Debug, Clone, Copy)]
pub enum Subject<'a> {
    Map(&'a ContinuousMap),
    Space(&'a FiniteSpace),
}

impl Subject<'_> {
    fn kind(&self) -> SubjectKind {
        match self {
            Subject::Map(_) => SubjectKind::Map,
            Subject::Space(_) => SubjectKind::Space,
        }
    }

    /// A literal reproducing the subject: the map itself, or `X => {*}`.
    pub fn literal(&self) -> String {
        match self {
            Subject::Map(f) => print_map_relabeled(f),
            Subject::Space(s) => print_map_relabeled(&ContinuousMap::to_point(Arc::new((*s).clone()))),
        }
    }
}

/// An entry with its literals parsed once.
enum Prepared {
    Direct {
        side: Side,
        seed: ContinuousMap,
        via: Option<SpaceAs>,
    },
    Word {
        seeds: MapClass,
        word: OrthWord,
        via: Option<SpaceAs>,
    },
    Quantified {
        probe: Arc<FiniteSpace>,
        injective_only: bool,
        rhs: ContinuousMap,
    },
}

fn literal(s: &str) -> Result<ContinuousMap, CatalogueError> {
    parse_map(s).map_err(CatalogueError::Literal)
}

impl Prepared {
    fn new(p: &PropertyDef) -> Result<Self, CatalogueError> {
        Ok(match &p.form {
            Form::DirectLifting { side, seed, via } => Prepared::Direct {
                side: *side,
                seed: literal(seed)?,
                via: *via,
            },
            Form::MembershipInWord { seeds, word, via } => Prepared::Word {
                seeds: MapClass::seeds(seeds.iter().map(|s| literal(s)).collect::<Result<Vec<_>, _>>()?),
                word: word.parse().expect("catalogue words are valid"),
                via: *via,
            },
            Form::QuantifiedLifting {
                probe,
                injective_only,
                rhs,
            } => Prepared::Quantified {
                probe: Arc::new(parse_space(probe).map_err(CatalogueError::Literal)?),
                injective_only: *injective_only,
                rhs: literal(rhs)?,
            },
        })
    }

    fn as_map(subject: Subject<'_>, via: Option<SpaceAs>) -> ContinuousMap {
        match (subject, via) {
            (Subject::Map(f), _) => f.clone(),
            (Subject::Space(s), Some(SpaceAs::FromEmpty)) => ContinuousMap::from_empty(Arc::new(s.clone())),
            (Subject::Space(s), _) => ContinuousMap::to_point(Arc::new(s.clone())),
        }
    }

    fn check(&self, engine: &Engine, subject: Subject<'_>) -> (bool, Exactness) {
        match self {
            Prepared::Direct { side, seed, via } => {
                let f = Self::as_map(subject, *via);
                let holds = match side {
                    Side::R => engine.lifts(seed, &f),
                    Side::L => engine.lifts(&f, seed),
                };
                (holds, Exactness::Exact)
            }
            Prepared::Word { seeds, word, via } => {
                engine.member_of_word_class(&Self::as_map(subject, *via), seeds, word)
            }
            Prepared::Quantified {
                probe,
                injective_only,
                rhs,
            } => {
                let Subject::Space(x) = subject else {
                    unreachable!("quantified entries take spaces")
                };
                let x = Arc::new(x.clone());
                let holds = hom_set(probe, &x)
                    .iter()
                    .filter(|q| !injective_only || q.image().len() == probe.len())
                    .all(|q| engine.lifts(q, rhs));
                (holds, Exactness::Exact)
            }
        }
    }
}

/// The exactness of a verdict: the entry's declared exactness, degraded by
/// the computed one.
pub fn combine_exactness(declared: Exactness, computed: Exactness) -> Exactness {
    match (declared, computed) {
        (Exactness::FiniteTrivial, _) => Exactness::FiniteTrivial,
        (Exactness::Exact, Exactness::Exact) => Exactness::Exact,
        _ => Exactness::RelativeApproximation,
    }
}

fn kind_name(kind: SubjectKind) -> &'static str {
    match kind {
        SubjectKind::Map => "map",
        SubjectKind::Space => "space",
    }
}

/// Decides the property for one subject through its lifting form. The
/// exactness says how far the verdict can be read as the property itself.
pub fn check_property(
    engine: &Engine,
    subject: Subject<'_>,
    p: &PropertyDef,
) -> Result<(bool, Exactness), CatalogueError> {
    if subject.kind() != p.subject {
        return Err(CatalogueError::WrongSubject(p.name, kind_name(p.subject)));
    }
    let (holds, computed) = Prepared::new(p)?.check(engine, subject);
    Ok((holds, combine_exactness(p.exactness, computed)))
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub entry: String,
    pub universe: usize,
    pub exactness: Exactness,
    pub oracle: Option<Oracle>,
    pub checked: usize,
    pub agreements: usize,
    /// Subjects where the lifting verdict and the oracle differ.
    pub disagreements: Vec<String>,
    /// Subjects the oracle accepts but the lifting test rejects.
    pub necessary_violations: Vec<String>,
}

impl EntryReport {
    /// Exact entries must agree everywhere; the others only need every
    /// oracle-approved subject to pass.
    pub fn accepted(&self) -> bool {
        match self.exactness {
            Exactness::Exact => self.disagreements.is_empty(),
            _ => self.necessary_violations.is_empty(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub universe: usize,
    pub entries: Vec<EntryReport>,
}

impl VerificationReport {
    pub fn accepted(&self) -> bool {
        self.entries.iter().all(EntryReport::accepted)
    }
}

/// Sweeps every subject of the universe for one entry.
pub fn verify_entry(engine: &Engine, p: &PropertyDef) -> Result<EntryReport, CatalogueError> {
    let prepared = Prepared::new(p)?;
    let u = engine.universe();
    let rows: Vec<(bool, Option<bool>, String)> = match p.subject {
        SubjectKind::Map => u
            .maps()
            .par_iter()
            .map(|f| {
                let s = Subject::Map(f);
                let oracle = p.oracle.and_then(|o| o.on_map(f));
                (prepared.check(engine, s).0, oracle, s.literal())
            })
            .collect(),
        SubjectKind::Space => u
            .spaces()
            .par_iter()
            .map(|x| {
                let s = Subject::Space(x);
                let oracle = p.oracle.and_then(|o| o.on_space(x));
                (prepared.check(engine, s).0, oracle, s.literal())
            })
            .collect(),
    };
    let mut report = EntryReport {
        entry: p.name.to_owned(),
        universe: u.bound(),
        exactness: p.exactness,
        oracle: p.oracle,
        checked: rows.len(),
        agreements: 0,
        disagreements: Vec::new(),
        necessary_violations: Vec::new(),
    };
    for (verdict, oracle, lit) in rows {
        match oracle {
            Some(o) if o == verdict => report.agreements += 1,
            Some(o) => {
                if o && !verdict {
                    report.necessary_violations.push(lit.clone());
                }
                report.disagreements.push(lit);
            }
            None => {}
        }
    }
    Ok(report)
}

/// Every catalogue entry against its oracle over the whole universe.
pub fn verify_catalogue(engine: &Engine) -> Result<VerificationReport, CatalogueError> {
    let entries = super::catalogue()
        .iter()
        .map(|p| verify_entry(engine, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerificationReport {
        universe: engine.universe().bound(),
        entries,
    })
}
