use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    LBrace,
    RBrace,
    Comma,
    Label(String),
    /// `->`
    Forward,
    /// `<-`
    Backward,
    /// `<->`
    Both,
    /// `=`
    Glue,
    /// `=>`
    MapsTo,
}

impl Token {
    pub(crate) fn describe(&self) -> String {
        match self {
            Token::LBrace => "`{`".into(),
            Token::RBrace => "`}`".into(),
            Token::Comma => "`,`".into(),
            Token::Label(l) => format!("label `{l}`"),
            Token::Forward => "`->`".into(),
            Token::Backward => "`<-`".into(),
            Token::Both => "`<->`".into(),
            Token::Glue => "`=`".into(),
            Token::MapsTo => "`=>`".into(),
        }
    }
}

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `input` into tokens paired with their byte offsets.
pub(crate) fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let rest = &input[i..];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (tok, len) = if rest.starts_with("<->") {
            (Token::Both, 3)
        } else if rest.starts_with("<-") {
            (Token::Backward, 2)
        } else if rest.starts_with("->") {
            (Token::Forward, 2)
        } else if rest.starts_with("=>") {
            (Token::MapsTo, 2)
        } else {
            match c {
                '{' => (Token::LBrace, 1),
                '}' => (Token::RBrace, 1),
                ',' => (Token::Comma, 1),
                '=' => (Token::Glue, 1),
                '*' => (Token::Label("*".into()), 1),
                c if is_label_char(c) => {
                    let len = rest.find(|ch: char| !is_label_char(ch)).unwrap_or(rest.len());
                    (Token::Label(rest[..len].to_owned()), len)
                }
                _ => {
                    let ch = rest.chars().next().unwrap_or(c);
                    return Err(ParseError::new(input, i, format!("unexpected character `{ch}`")));
                }
            }
        };
        out.push((tok, i));
        i += len;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_match_first() {
        let toks: Vec<Token> = tokenize("{a<->b<-c->d=e} => {*}")
            .unwrap()
            .into_iter()
            .map(|(t, _)| t)
            .collect();
        assert_eq!(
            toks,
            vec![
                Token::LBrace,
                Token::Label("a".into()),
                Token::Both,
                Token::Label("b".into()),
                Token::Backward,
                Token::Label("c".into()),
                Token::Forward,
                Token::Label("d".into()),
                Token::Glue,
                Token::Label("e".into()),
                Token::RBrace,
                Token::MapsTo,
                Token::LBrace,
                Token::Label("*".into()),
                Token::RBrace,
            ]
        );
    }

    #[test]
    fn primes_and_digits_in_labels() {
        let toks = tokenize("{U->U', x_1}").unwrap();
        assert_eq!(toks[3].0, Token::Label("U'".into()));
        assert_eq!(toks[5].0, Token::Label("x_1".into()));
    }

    #[test]
    fn bad_character_position() {
        let err = tokenize("{a -> b; c}").unwrap_err();
        assert_eq!(err.offset, 7);
    }
}
