//! Recursive-descent parser for the formula grammar:
//!
//! ```text
//! formula = or ;
//! or      = and { "|" and } ;
//! and     = not { "&" not } ;
//! not     = "~" not | atom-or-paren ;
//! atom-or-paren = ATOM | "(" formula ")" ;
//! ATOM    = letter { letter | digit | "_" } ;
//! ```
//!
//! `¬`, `∧` and `∨` are accepted for `~`, `&` and `|`. Offsets in errors are
//! byte offsets into the input.

use thiserror::Error;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty formula")]
    Empty,
    #[error("syntax error at offset {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: &'static str,
        found: String,
    },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Empty => None,
            ParseError::Syntax { offset, .. } => Some(*offset),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Not,
    And,
    Or,
    LParen,
    RParen,
    Eof,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its start offset, without consuming it.
    fn peek(&mut self) -> Result<(Tok, usize, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::Eof, start, start));
        };
        let single = |t: Tok| Ok((t, start, start + c.len_utf8()));
        match c {
            '~' | '¬' => single(Tok::Not),
            '&' | '∧' => single(Tok::And),
            '|' | '∨' => single(Tok::Or),
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            c if c.is_ascii_alphabetic() => {
                let len = rest
                    .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                    .unwrap_or(rest.len());
                Ok((Tok::Atom(rest[..len].to_string()), start, start + len))
            }
            other => Err(ParseError::Syntax {
                offset: start,
                expected: "a formula token",
                found: format!("{other:?}"),
            }),
        }
    }

    fn describe(tok: &Tok) -> String {
        match tok {
            Tok::Atom(name) => format!("atom {name:?}"),
            Tok::Not => "'~'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        loop {
            let (tok, _, end) = self.peek()?;
            if tok != Tok::Or {
                return Ok(lhs);
            }
            self.pos = end;
            let rhs = self.and()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.not()?;
        loop {
            let (tok, _, end) = self.peek()?;
            if tok != Tok::And {
                return Ok(lhs);
            }
            self.pos = end;
            let rhs = self.not()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
    }

    fn not(&mut self) -> Result<Formula, ParseError> {
        let (tok, start, end) = self.peek()?;
        self.pos = end;
        match tok {
            Tok::Not => Ok(Formula::Not(Box::new(self.not()?))),
            Tok::Atom(name) => Ok(Formula::Atom(name)),
            Tok::LParen => {
                let inner = self.or()?;
                let (close, at, end) = self.peek()?;
                if close != Tok::RParen {
                    return Err(ParseError::Syntax {
                        offset: at,
                        expected: "')'",
                        found: Self::describe(&close),
                    });
                }
                self.pos = end;
                Ok(inner)
            }
            other => Err(ParseError::Syntax {
                offset: start,
                expected: "an atom, '~' or '('",
                found: Self::describe(&other),
            }),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser { src: text, pos: 0 };
    let f = p.or()?;
    match p.peek()? {
        (Tok::Eof, _, _) => Ok(f),
        (tok, at, _) => Err(ParseError::Syntax {
            offset: at,
            expected: "an operator or end of input",
            found: Parser::describe(&tok),
        }),
    }
}
