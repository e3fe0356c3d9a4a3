//! Arrow notation for finite spaces and maps.
//!
//! ```text
//! space := '{' (chain (',' chain)*)? '}'
//! chain := label (rel label)*
//! rel   := '->' | '<-' | '<->' | '='
//! map   := space '=>' space
//! label := [A-Za-z0-9_']+ | '*'
//! ```
//!
//! `a->b` puts `b` in the closure of `a`. In a map literal the codomain also
//! contains every point and relation of the domain literal, matched by label,
//! and each domain point goes to the codomain point of the same name. The
//! one exception is a codomain written `{*}` when the domain has no point
//! `*`: that is the one-point space, so `X => {*}` is the map to a point.

mod lexer;
mod parser;
mod print;

pub use parser::{parse_map_literal, parse_space_literal, Chain, MapLiteral, Relation, SpaceLiteral};
pub use print::{print_map, print_map_relabeled, print_space, reduction_arrows};

use std::fmt;

use thiserror::Error;

use crate::map::ContinuousMap;
use crate::space::FiniteSpace;

/// A syntax or construction error with its byte offset in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(input: &str, offset: usize, message: String) -> Self {
        ParseError {
            input: input.to_owned(),
            offset,
            message,
        }
    }

    /// 1-based column of the error, counted in characters.
    pub fn column(&self) -> usize {
        self.input[..self.offset.min(self.input.len())].chars().count() + 1
    }

    /// The input with a caret under the offending position.
    pub fn render(&self) -> String {
        format!(
            "{}\n{}^ {}",
            self.input,
            " ".repeat(self.column() - 1),
            self.message
        )
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (column {})", self.message, self.column())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("a map from a space to itself other than the identity has no arrow-notation literal")]
    Endomorphism,
}

pub fn parse_space(input: &str) -> Result<FiniteSpace, ParseError> {
    let lit = parse_space_literal(input)?;
    parser::space_from_literal(&lit, input)
}

pub fn parse_map(input: &str) -> Result<ContinuousMap, ParseError> {
    let lit = parse_map_literal(input)?;
    parser::map_from_literal(&lit, input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::maps_isomorphic;

    fn same_space(a: &str, b: &str) {
        assert_eq!(
            parse_space(a).unwrap().canonical_key(),
            parse_space(b).unwrap().canonical_key(),
            "{a} vs {b}"
        );
    }

    #[test]
    fn sierpinski_literal() {
        let s = parse_space("{o->c}").unwrap();
        assert_eq!(s.labels(), ["o", "c"]);
        assert!(s.related(0, 1) && !s.related(1, 0));
        assert!(s.is_open(crate::space::PointSet::singleton(0)));
    }

    #[test]
    fn zigzag_literal() {
        let z = parse_space("{a<-U->x<-V->b}").unwrap();
        assert_eq!(z.len(), 5);
        let u = z.index_of("U").unwrap();
        let v = z.index_of("V").unwrap();
        let x = z.index_of("x").unwrap();
        assert!(z.related(u, x) && z.related(v, x) && !z.related(x, u));
        // Opens are generated by the open points U and V.
        let opens = z.open_sets();
        assert!(opens.contains(&crate::space::PointSet::from_points([u])));
        assert!(opens.contains(&crate::space::PointSet::from_points([v])));
    }

    #[test]
    fn empty_and_point() {
        assert_eq!(parse_space("{}").unwrap().len(), 0);
        let p = parse_space("{*}").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.label(0), "*");
        assert_eq!(parse_space(" {  } ").unwrap().len(), 0);
    }

    #[test]
    fn equivalent_spellings() {
        same_space("{a<->b}", "{a->b, b->a}");
        same_space("{a->b->c}", "{a->b, b->c}");
        same_space("{b->c, a->b}", "{a->b, b->c}");
        same_space("{c<-b<-a}", "{a->b->c}");
        same_space("{a=b}", "{*}");
    }

    #[test]
    fn glued_label_names() {
        let s = parse_space("{x=X=U->F}").unwrap();
        assert_eq!(s.labels(), ["x=X=U", "F"]);
    }

    #[test]
    fn t0_seed_map() {
        let f = parse_map("{x<->y} => {x=y}").unwrap();
        assert_eq!(f.dom().len(), 2);
        assert_eq!(f.cod().len(), 1);
        assert_eq!(f.assignment(), &[0, 0]);
    }

    #[test]
    fn codomain_only_points() {
        let f = parse_map("{a} => {a,b}").unwrap();
        let g = parse_map("{a} => {b}").unwrap();
        assert_eq!(f.cod().len(), 2);
        assert!(maps_isomorphic(&f, &g).is_some());
        assert!(!f.cod().related(0, 1) && !f.cod().related(1, 0));
    }

    #[test]
    fn surjectivity_seed() {
        let f = parse_map("{} => {*}").unwrap();
        assert_eq!(f.dom().len(), 0);
        assert_eq!(f.cod().len(), 1);
    }

    #[test]
    fn point_codomain_is_terminal() {
        let f = parse_map("{B1<-O->B2} => {*}").unwrap();
        assert_eq!(f.cod().len(), 1);
        assert_eq!(f.assignment(), &[0, 0, 0]);
        // With `*` in the domain the usual rule applies.
        let g = parse_map("{*, a} => {*}").unwrap();
        assert_eq!(g.cod().len(), 2);
    }

    #[test]
    fn codomain_inherits_domain_relations() {
        let f = parse_map("{a<-U->x<-V->b} => {U=x=V}").unwrap();
        let g = parse_map("{a<-U->x<-V->b} => {a<-U=x=V->b}").unwrap();
        assert_eq!(f.cod().len(), 3);
        assert!(maps_isomorphic(&f, &g).is_some());
    }

    #[test]
    fn domain_gluing_merges_first() {
        let f = parse_map("{a=b, c} => {a=b=c}").unwrap();
        assert_eq!(f.dom().len(), 2);
        assert_eq!(f.cod().len(), 1);
    }

    #[test]
    fn syntax_errors_report_positions() {
        let e = parse_space("{a->").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.render().ends_with("^ expected a point label, found end of input"));
        let e = parse_space("{a b}").unwrap_err();
        assert_eq!(e.column(), 4);
        let e = parse_map("{a} {b}").unwrap_err();
        assert!(e.message.contains("`=>`"));
        assert!(parse_space("{a} x").is_err());
        assert!(parse_space("a->b").is_err());
        assert!(parse_space("{,}").is_err());
    }

    #[test]
    fn print_examples() {
        let s = parse_space("{o->c}").unwrap();
        assert_eq!(print_space(&s), "{o->c}");
        assert_eq!(print_space(&FiniteSpace::empty()), "{}");
        assert_eq!(print_space(&parse_space("{a<->b, c}").unwrap()), "{a<->b, c}");
        let id = ContinuousMap::identity(std::sync::Arc::new(s.clone()));
        assert_eq!(print_map(&id).unwrap(), "{o->c} => {o->c}");
    }

    #[test]
    fn endomorphisms_are_not_printable() {
        let s = std::sync::Arc::new(parse_space("{o->c}").unwrap());
        let k = ContinuousMap::new(s.clone(), s, vec![1, 1]).unwrap();
        assert_eq!(print_map(&k), Err(NotationError::Endomorphism));
        let text = print_map_relabeled(&k);
        assert!(maps_isomorphic(&parse_map(&text).unwrap(), &k).is_some());
    }

    #[test]
    fn t4_map_round_trip() {
        let f = parse_map("{a<-U->x<-V->b} => {a<-U=x=V->b}").unwrap();
        let printed = print_map(&f).unwrap();
        assert!(maps_isomorphic(&parse_map(&printed).unwrap(), &f).is_some(), "{printed}");
    }
}
