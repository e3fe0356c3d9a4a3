use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Left orthogonal: maps lifting against every member.
    L,
    /// Right orthogonal: maps every member lifts against.
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Orth(Side),
    /// Keep members whose domain and codomain both have fewer than `k` points.
    Trunc(usize),
}

/// A non-empty word over `l`, `r` and `<k`, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthWord {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("truncation bound must be at least 1, got <{0}")]
    ZeroTruncation(usize),
    #[error("unexpected `{token}` in word (expected `l`, `r` or `<INT`)")]
    BadToken { token: String },
}

impl OrthWord {
    pub fn new(steps: Vec<Step>) -> Result<Self, WordError> {
        if steps.is_empty() {
            return Err(WordError::Empty);
        }
        if let Some(Step::Trunc(0)) = steps.iter().find(|s| matches!(s, Step::Trunc(0))) {
            return Err(WordError::ZeroTruncation(0));
        }
        Ok(OrthWord { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All steps but the last, or `None` for a one-step word.
    pub fn prefix(&self) -> Option<OrthWord> {
        (self.steps.len() > 1).then(|| OrthWord {
            steps: self.steps[..self.steps.len() - 1].to_vec(),
        })
    }

    pub fn last(&self) -> Step {
        *self.steps.last().expect("words are non-empty")
    }

    pub fn orth_steps(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::Orth(_))).count()
    }
}

/// Accepts comma-separated tokens; a token of several letters such as `rl`
/// is read one letter at a time.
impl FromStr for OrthWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let mut steps = Vec::new();
        for token in s.split(',').map(str::trim) {
            if let Some(k) = token.strip_prefix('<') {
                let k: usize = k.trim().parse().map_err(|_| WordError::BadToken { token: token.to_owned() })?;
                if k == 0 {
                    return Err(WordError::ZeroTruncation(k));
                }
                steps.push(Step::Trunc(k));
                continue;
            }
            if token.is_empty() {
                if s.trim().is_empty() {
                    return Err(WordError::Empty);
                }
                return Err(WordError::BadToken { token: String::new() });
            }
            for c in token.chars() {
                match c.to_ascii_lowercase() {
                    'l' => steps.push(Step::Orth(Side::L)),
                    'r' => steps.push(Step::Orth(Side::R)),
                    _ => return Err(WordError::BadToken { token: token.to_owned() }),
                }
            }
        }
        OrthWord::new(steps)
    }
}

impl fmt::Display for OrthWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Orth(Side::L) => "l".to_owned(),
                Step::Orth(Side::R) => "r".to_owned(),
                Step::Trunc(k) => format!("<{k}"),
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for OrthWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
