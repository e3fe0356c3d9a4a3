use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::Context;
use serde_json::{json, Value};

use finlift_core::catalogue::{
    catalogue, check_property, combine_exactness, entries_for_word, iterated_suite, ultrafilter_suite, urysohn_suite,
    verify_catalogue, Subject, SubjectKind, SuiteReport,
};
use finlift_core::json::{ClassJson, MapJson, SpaceJson};
use finlift_core::lifting::{has_lifting, Engine, Exactness, LiftCache, MapClass, OrthWord, Universe};
use finlift_core::notation::print_map_relabeled;
use finlift_core::{enumerate_spaces, parse_map, parse_space, print_space, FiniteSpace, ParseError};

use crate::render::{assignment, banner, counts, flags};
use crate::{Config, Suite};

/// Largest space size for `spaces` without `--allow-large`.
const SPACES_MAX: usize = 5;
const SPACES_MAX_LARGE: usize = 7;
/// Largest base space for the ultrafilter suite.
const ULTRAFILTER_BASE: usize = 3;

pub enum Failure {
    Parse(ParseError),
    Usage(String),
    Other(anyhow::Error),
}

impl Failure {
    pub fn render(&self) -> String {
        match self {
            Failure::Parse(e) => format!("error: cannot parse literal\n{}", e.render()),
            Failure::Usage(m) => format!("error: {m}"),
            Failure::Other(e) => format!("error: {e:#}"),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

fn is_map_literal(s: &str) -> bool {
    s.contains("=>")
}

/// Builds the engine and loads the disk cache, if any.
struct Session {
    engine: Engine,
    cache: Option<LiftCache>,
}

impl Session {
    fn open(cfg: &Config) -> Result<Self, Failure> {
        let max = if cfg.allow_large { 5 } else { 4 };
        if cfg.universe > max {
            return Err(Failure::Usage(if cfg.universe <= 5 {
                format!("universe bound {} needs --allow-large", cfg.universe)
            } else {
                format!("universe bound {} exceeds the maximum of 5", cfg.universe)
            }));
        }
        let universe = Universe::build_with_max(cfg.universe, max).map_err(|e| Failure::Usage(e.to_string()))?;
        let engine = Engine::new(Arc::new(universe));
        let cache = cfg.cache_dir.as_ref().map(LiftCache::new);
        if let Some(c) = &cache {
            let entries = c
                .load()
                .with_context(|| format!("reading {}", c.path().display()))
                .map_err(Failure::Other)?;
            engine.import(entries);
        }
        Ok(Session { engine, cache })
    }

    fn close(&self) -> Result<(), Failure> {
        if let Some(c) = &self.cache {
            c.store(&self.engine.export())
                .with_context(|| format!("writing {}", c.path().display()))
                .map_err(Failure::Other)?;
        }
        Ok(())
    }

    fn bound(&self) -> usize {
        self.engine.universe().bound()
    }
}

fn space_flags(s: &FiniteSpace) -> String {
    let o = s.oracles();
    flags(&[
        ("T0", o.is_t0),
        ("T1", o.is_t1),
        ("discrete", o.is_discrete),
        ("antidiscrete", o.is_antidiscrete),
        ("connected", o.is_connected),
    ])
}

pub fn parse(literal: &str) -> Result<Outcome, Failure> {
    let mut text = String::new();
    let json = if is_map_literal(literal) {
        let f = parse_map(literal)?;
        let canon = f.canonical().map;
        let o = f.oracles();
        writeln!(text, "map: {}", print_map_relabeled(&f)).unwrap();
        writeln!(text, "canonical: {}", print_map_relabeled(&canon)).unwrap();
        writeln!(text, "domain: {}", counts(f.dom())).unwrap();
        writeln!(text, "codomain: {}", counts(f.cod())).unwrap();
        writeln!(text, "assignment: {}", assignment(&f)).unwrap();
        let summary = flags(&[
            ("surjective", o.is_surjective),
            ("injective", o.is_injective),
            ("induced", o.is_induced_topology),
            ("dense", o.is_dense_image),
            ("closed", o.is_closed_map),
            ("iso", o.is_isomorphism),
        ]);
        writeln!(text, "{summary}").unwrap();
        json!({
            "kind": "map",
            "map": MapJson::from_map(&f),
            "canonical": MapJson::from_map(&canon),
            "oracles": o,
        })
    } else {
        let s = parse_space(literal)?;
        let canon = s.canonical();
        writeln!(text, "space: {}", print_space(&s)).unwrap();
        writeln!(text, "canonical: {}", print_space(&canon)).unwrap();
        writeln!(text, "{}", counts(&s)).unwrap();
        writeln!(text, "{}", space_flags(&s)).unwrap();
        json!({
            "kind": "space",
            "space": SpaceJson::from_space(&s),
            "canonical": SpaceJson::from_space(&canon),
            "points": s.len(),
            "arrows": SpaceJson::from_space(&s).arrows.len(),
            "oracles": s.oracles(),
        })
    };
    Ok(Outcome { text, json, code: 0 })
}

pub fn lift(f: &str, g: &str) -> Result<Outcome, Failure> {
    let f = parse_map(f)?;
    let g = parse_map(g)?;
    let report = has_lifting(&f, &g);
    let mut text = String::new();
    writeln!(text, "f: {}", print_map_relabeled(&f)).unwrap();
    writeln!(text, "g: {}", print_map_relabeled(&g)).unwrap();
    let square = report.counterexample.as_ref().map(|sq| {
        json!({
            "top": MapJson::from_map(&sq.top),
            "bottom": MapJson::from_map(&sq.bottom),
        })
    });
    if report.holds {
        writeln!(
            text,
            "holds ({} commuting square{}, each with a diagonal)",
            report.squares_checked,
            if report.squares_checked == 1 { "" } else { "s" }
        ).unwrap();
    } else {
        let sq = report.counterexample.as_ref().expect("failure has a square");
        writeln!(text, "fails: commuting square without a diagonal").unwrap();
        writeln!(text, "  top    (dom f -> dom g): {}", assignment(&sq.top)).unwrap();
        writeln!(text, "  bottom (cod f -> cod g): {}", assignment(&sq.bottom)).unwrap();
    }
    let json = json!({
        "f": MapJson::from_map(&f),
        "g": MapJson::from_map(&g),
        "holds": report.holds,
        "squares_checked": report.squares_checked,
        "counterexample": square,
    });
    Ok(Outcome {
        text,
        json,
        code: if report.holds { 0 } else { 1 },
    })
}

fn catalogue_notes(seeds: &MapClass, word: &OrthWord) -> Vec<(&'static str, Exactness)> {
    entries_for_word(seeds, word)
        .into_iter()
        .map(|p| (p.name, p.exactness))
        .collect()
}

pub fn orth(cfg: &Config, seeds: &[String], word: &str, check: Option<&str>) -> Result<Outcome, Failure> {
    let word: OrthWord = word.parse().map_err(|e| Failure::Usage(format!("bad word `{word}`: {e}")))?;
    let seed_maps = seeds.iter().map(|s| parse_map(s)).collect::<Result<Vec<_>, _>>()?;
    let check = check.map(parse_map).transpose()?;
    let seeds = MapClass::seeds(seed_maps);
    let session = Session::open(cfg)?;
    let engine = &session.engine;
    let notes = catalogue_notes(&seeds, &word);
    let mut text = String::new();
    let out = match check {
        Some(f) => {
            let (member, computed) = engine.member_of_word_class(&f, &seeds, &word);
            writeln!(text, "map: {}", print_map_relabeled(&f)).unwrap();
            writeln!(text, "word: {word}  universe: {}", session.bound()).unwrap();
            writeln!(text, "member={member}").unwrap();
            writeln!(text, "{}", banner(computed, session.bound())).unwrap();
            for (name, e) in &notes {
                writeln!(text, "catalogue entry {name}: {}", banner(combine_exactness(*e, computed), session.bound())).unwrap();
            }
            let json = json!({
                "map": MapJson::from_map(&f),
                "word": word.to_string(),
                "universe": session.bound(),
                "member": member,
                "exactness": computed,
                "catalogue": notes.iter().map(|(n, e)| json!({
                    "entry": n,
                    "exactness": combine_exactness(*e, computed),
                })).collect::<Vec<_>>(),
            });
            Outcome {
                text,
                json,
                code: if member { 0 } else { 1 },
            }
        }
        None => {
            let class = engine.eval_shared(&seeds, &word);
            writeln!(text, "word: {word}  universe: {}  members: {}", session.bound(), class.len()).unwrap();
            writeln!(text, "{}", banner(class.exactness(), session.bound())).unwrap();
            for (name, e) in &notes {
                writeln!(
                    text,
                    "catalogue entry {name}: {}",
                    banner(combine_exactness(*e, class.exactness()), session.bound())
                )
                .unwrap();
            }
            for f in class.members() {
                writeln!(text, "{}", print_map_relabeled(f)).unwrap();
            }
            Outcome {
                text,
                json: serde_json::to_value(ClassJson::from_class(&class)).expect("serializable"),
                code: 0,
            }
        }
    };
    session.close()?;
    Ok(out)
}

pub fn spaces(cfg: &Config, size: usize, list: bool) -> Result<Outcome, Failure> {
    let max = if cfg.allow_large { SPACES_MAX_LARGE } else { SPACES_MAX };
    if size > max {
        return Err(Failure::Usage(if cfg.allow_large {
            format!("size {size} exceeds the maximum of {max}")
        } else {
            format!("size {size} exceeds {max}; pass --allow-large for up to {SPACES_MAX_LARGE}")
        }));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut last = Vec::new();
    for n in 0..=size {
        let spaces = enumerate_spaces(n);
        rows.push(json!({"size": n, "spaces": spaces.len()}));
        if n == size {
            last = spaces;
        }
    }
    writeln!(text, "{} spaces of size {size} up to homeomorphism", last.len()).unwrap();
    for row in &rows {
        writeln!(text, "  size {}: {}", row["size"], row["spaces"]).unwrap();
    }
    if list {
        for s in &last {
            writeln!(text, "{}", print_space(s)).unwrap();
        }
    }
    let mut json = json!({"size": size, "count": last.len(), "counts": rows});
    if list {
        json["spaces"] = json!(last.iter().map(SpaceJson::from_space).collect::<Vec<_>>());
    }
    Ok(Outcome { text, json, code: 0 })
}

pub fn classify(cfg: &Config, literal: &str) -> Result<Outcome, Failure> {
    let (map, space) = if is_map_literal(literal) {
        (Some(parse_map(literal)?), None)
    } else {
        (None, Some(parse_space(literal)?))
    };
    let session = Session::open(cfg)?;
    let subject = match (&map, &space) {
        (Some(f), _) => Subject::Map(f),
        (_, Some(s)) => Subject::Space(s),
        _ => unreachable!(),
    };
    let kind = if map.is_some() { SubjectKind::Map } else { SubjectKind::Space };
    let mut text = String::new();
    writeln!(text, "{}  universe: {}", subject.literal(), session.bound()).unwrap();
    let mut rows = Vec::new();
    for p in catalogue().iter().filter(|p| p.subject == kind) {
        let (holds, exactness) =
            check_property(&session.engine, subject, p).map_err(|e| Failure::Other(e.into()))?;
        writeln!(text, "{:<30} {:<5} {}", p.name, holds, exactness.as_str()).unwrap();
        rows.push(json!({"property": p.name, "holds": holds, "exactness": exactness}));
    }
    let json = json!({
        "subject": subject.literal(),
        "universe": session.bound(),
        "properties": rows,
    });
    session.close()?;
    Ok(Outcome { text, json, code: 0 })
}

fn suite_text(text: &mut String, r: &SuiteReport) {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(text, "{verdict} {}: {} checks, {} failures", r.suite, r.checked, r.failures.len()).unwrap();
    for f in &r.failures {
        writeln!(text, "  {f}").unwrap();
    }
}

pub fn verify(cfg: &Config, suite: Suite) -> Result<Outcome, Failure> {
    let session = Session::open(cfg)?;
    let engine = &session.engine;
    let mut text = String::new();
    let mut ok = true;
    let mut json = json!({"universe": session.bound()});
    if matches!(suite, Suite::Catalogue | Suite::All) {
        let report = verify_catalogue(engine).map_err(|e| Failure::Other(e.into()))?;
        for e in &report.entries {
            let verdict = if e.accepted() { "PASS" } else { "FAIL" };
            writeln!(
                text,
                "{verdict} {:<30} {:<22} {} checked, {} agree, {} disagree",
                e.entry,
                e.exactness.as_str(),
                e.checked,
                e.agreements,
                e.disagreements.len()
            )
            .unwrap();
            if e.exactness == Exactness::Exact {
                for d in &e.disagreements {
                    writeln!(text, "  {d}").unwrap();
                }
            }
        }
        ok &= report.accepted();
        json["catalogue"] = serde_json::to_value(&report).expect("serializable");
    }
    let mut suites = Vec::new();
    if matches!(suite, Suite::Iterated | Suite::All) {
        suites.push(iterated_suite(engine));
    }
    if matches!(suite, Suite::Urysohn | Suite::All) {
        suites.push(urysohn_suite(engine));
    }
    if matches!(suite, Suite::Ultrafilter | Suite::All) {
        suites.push(ultrafilter_suite(engine, ULTRAFILTER_BASE));
    }
    for r in &suites {
        suite_text(&mut text, r);
        ok &= r.passed();
    }
    if !suites.is_empty() {
        json["suites"] = serde_json::to_value(&suites).expect("serializable");
    }
    writeln!(text, "universe {}: {}", session.bound(), if ok { "all checks passed" } else { "FAILURES" }).unwrap();
    json["passed"] = json!(ok);
    session.close()?;
    Ok(Outcome {
        text,
        json,
        code: if ok { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_literals_are_recognized() {
        assert!(is_map_literal("{} => {*}"));
        assert!(!is_map_literal("{a->b}"));
    }

    #[test]
    fn universe_guard() {
        let cfg = Config {
            universe: 5,
            allow_large: false,
            cache_dir: None,
        };
        assert!(matches!(Session::open(&cfg), Err(Failure::Usage(_))));
    }
}
