//! Recursive descent over the token stream, then a small builder that turns
//! the chains into a preorder.

use std::collections::HashMap;
use std::sync::Arc;

use super::lexer::{tokenize, Token};
use super::ParseError;
use crate::map::ContinuousMap;
use crate::space::{FiniteSpace, MAX_POINTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Forward,
    Backward,
    Both,
    Glue,
}

/// One chain `label (rel label)*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub labels: Vec<String>,
    pub relations: Vec<Relation>,
}

/// A parsed but not yet interpreted space literal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpaceLiteral {
    pub chains: Vec<Chain>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapLiteral {
    pub domain: SpaceLiteral,
    pub codomain: SpaceLiteral,
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            input,
            tokens: tokenize(input)?,
            pos: 0,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.input.len(), |&(_, o)| o)
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = self.peek().map_or("end of input".to_owned(), Token::describe);
        ParseError::new(self.input, self.offset(), format!("expected {expected}, found {found}"))
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn label(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Token::Label(l)) => {
                let l = l.clone();
                self.pos += 1;
                Ok(l)
            }
            _ => Err(self.error("a point label")),
        }
    }

    fn relation(&mut self) -> Option<Relation> {
        let rel = match self.peek()? {
            Token::Forward => Relation::Forward,
            Token::Backward => Relation::Backward,
            Token::Both => Relation::Both,
            Token::Glue => Relation::Glue,
            _ => return None,
        };
        self.pos += 1;
        Some(rel)
    }

    fn chain(&mut self) -> Result<Chain, ParseError> {
        let mut chain = Chain {
            labels: vec![self.label()?],
            relations: Vec::new(),
        };
        while let Some(rel) = self.relation() {
            chain.relations.push(rel);
            chain.labels.push(self.label()?);
        }
        Ok(chain)
    }

    fn space(&mut self) -> Result<SpaceLiteral, ParseError> {
        self.expect(Token::LBrace, "`{`")?;
        let mut lit = SpaceLiteral::default();
        if self.peek() == Some(&Token::RBrace) {
            self.pos += 1;
            return Ok(lit);
        }
        loop {
            lit.chains.push(self.chain()?);
            match self.peek() {
                Some(Token::Comma) => self.pos += 1,
                Some(Token::RBrace) => {
                    self.pos += 1;
                    return Ok(lit);
                }
                _ => return Err(self.error("`,`, `}` or a relation (`->`, `<-`, `<->`, `=`)")),
            }
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

pub fn parse_space_literal(input: &str) -> Result<SpaceLiteral, ParseError> {
    let mut p = Parser::new(input)?;
    let lit = p.space()?;
    p.finish()?;
    Ok(lit)
}

pub fn parse_map_literal(input: &str) -> Result<MapLiteral, ParseError> {
    let mut p = Parser::new(input)?;
    let domain = p.space()?;
    p.expect(Token::MapsTo, "`=>`")?;
    let codomain = p.space()?;
    p.finish()?;
    Ok(MapLiteral { domain, codomain })
}

/// Collects labels, `=` gluings and arrows, then quotients.
#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    parent: Vec<usize>,
    arrows: Vec<(usize, usize)>,
}

impl Builder {
    fn id(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        self.parent.push(i);
        i
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the earlier label as root so classes are ordered by first appearance.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn add(&mut self, lit: &SpaceLiteral) {
        for chain in &lit.chains {
            let ids: Vec<usize> = chain.labels.iter().map(|l| self.id(l)).collect();
            for (k, rel) in chain.relations.iter().enumerate() {
                let (a, b) = (ids[k], ids[k + 1]);
                match rel {
                    Relation::Forward => self.arrows.push((a, b)),
                    Relation::Backward => self.arrows.push((b, a)),
                    Relation::Both => {
                        self.arrows.push((a, b));
                        self.arrows.push((b, a));
                    }
                    Relation::Glue => self.union(a, b),
                }
            }
        }
    }

    /// The quotient space, plus the class index of every label.
    fn build(mut self, input: &str) -> Result<(FiniteSpace, HashMap<String, usize>), ParseError> {
        let roots: Vec<usize> = (0..self.labels.len()).map(|i| self.find(i)).collect();
        let mut class_of_root = HashMap::new();
        let mut members: Vec<Vec<&str>> = Vec::new();
        for (i, &r) in roots.iter().enumerate() {
            let c = *class_of_root.entry(r).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            members[c].push(&self.labels[i]);
        }
        if members.len() > MAX_POINTS {
            return Err(ParseError::new(
                input,
                0,
                format!("a space may have at most {MAX_POINTS} points, got {}", members.len()),
            ));
        }
        let labels: Vec<String> = members.iter().map(|m| m.join("=")).collect();
        let arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .map(|&(a, b)| (class_of_root[&roots[a]], class_of_root[&roots[b]]))
            .collect();
        let space = FiniteSpace::from_generators(labels, &arrows)
            .map_err(|e| ParseError::new(input, 0, e.to_string()))?;
        let classes = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), class_of_root[&roots[i]]))
            .collect();
        Ok((space, classes))
    }
}

pub fn space_from_literal(lit: &SpaceLiteral, input: &str) -> Result<FiniteSpace, ParseError> {
    let mut b = Builder::default();
    b.add(lit);
    Ok(b.build(input)?.0)
}

/// `{*}` alone, as in `{o->c} => {*}`: the one-point space.
fn is_point_literal(lit: &SpaceLiteral) -> bool {
    matches!(lit.chains.as_slice(), [c] if c.relations.is_empty() && c.labels == ["*"])
}

/// The codomain is the codomain literal together with every point and
/// relation of the domain literal, matched by label. A codomain written as
/// `{*}` whose label the domain does not use is the one-point space instead,
/// so `X => {*}` is the map to a point.
pub fn map_from_literal(lit: &MapLiteral, input: &str) -> Result<ContinuousMap, ParseError> {
    let mut db = Builder::default();
    db.add(&lit.domain);
    let dom_labels = db.labels.clone();
    let (dom, dom_classes) = db.build(input)?;

    if is_point_literal(&lit.codomain) && !dom_labels.iter().any(|l| l == "*") {
        return Ok(ContinuousMap::to_point(dom));
    }

    let mut cb = Builder::default();
    cb.add(&lit.codomain);
    cb.add(&lit.domain);
    let (cod, cod_classes) = cb.build(input)?;

    let mut assignment = vec![usize::MAX; dom.len()];
    for l in &dom_labels {
        let d = dom_classes[l];
        let c = cod_classes[l];
        debug_assert!(assignment[d] == usize::MAX || assignment[d] == c);
        assignment[d] = c;
    }
    ContinuousMap::new(Arc::new(dom), Arc::new(cod), assignment)
        .map_err(|e| ParseError::new(input, 0, e.to_string()))
}
