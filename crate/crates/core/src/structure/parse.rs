//! Concrete syntax.
//!
//! ```text
//! structure := "o" | "1" | atom | "~" structure
//!            | "[" list "]" | "(" list ")" | "<" seqlist ">"
//! list      := structure ("," structure)*
//! seqlist   := structure (";" structure)*
//! atom      := [A-Za-z][A-Za-z0-9']* ("_" digits ("." digits)*)?
//! ```

use thiserror::Error;

use super::raw::{canonicalize, RawStructure};
use super::{Atom, Kind, Structure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Parses and canonicalizes.
pub fn parse(text: &str) -> Result<Structure, ParseError> {
    parse_raw(text).map(|raw| canonicalize(&raw))
}

pub fn parse_raw(text: &str) -> Result<RawStructure, ParseError> {
    Parser::new(text, false).run()
}

/// Like [`parse_raw`] but accepts `{}` as a hole leaf.
pub(crate) fn parse_raw_with_hole(text: &str) -> Result<RawStructure, ParseError> {
    Parser::new(text, true).run()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    allow_hole: bool,
}

impl Parser {
    fn new(src: &str, allow_hole: bool) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            allow_hole,
        }
    }

    fn run(mut self) -> Result<RawStructure, ParseError> {
        self.skip_ws();
        if self.pos == self.chars.len() {
            return Err(ParseError::Empty);
        }
        let s = self.structure()?;
        self.skip_ws();
        if self.pos != self.chars.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(s)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let consumed: String = self.chars[..self.pos].iter().collect();
        let line = consumed.matches('\n').count() + 1;
        let column = consumed.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn structure(&mut self) -> Result<RawStructure, ParseError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('~') => {
                self.pos += 1;
                Ok(RawStructure::negation(self.structure()?))
            }
            Some('[') => self.list(Kind::Par, ']', ','),
            Some('(') => self.list(Kind::Copar, ')', ','),
            Some('<') => self.list(Kind::Seq, '>', ';'),
            Some('1') => {
                self.pos += 1;
                Ok(RawStructure::Unit)
            }
            Some('{') if self.allow_hole => {
                self.pos += 1;
                self.expect('}')?;
                Ok(RawStructure::Atom(Atom::hole()))
            }
            Some(c) if c.is_ascii_alphabetic() => self.atom(),
            Some(c) => Err(self.error(format!("unexpected character '{c}'"))),
        }
    }

    fn list(&mut self, kind: Kind, close: char, sep: char) -> Result<RawStructure, ParseError> {
        self.pos += 1;
        let mut children = vec![self.structure()?];
        loop {
            match self.peek() {
                Some(c) if c == sep => {
                    self.pos += 1;
                    children.push(self.structure()?);
                }
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(RawStructure::node(kind, children));
                }
                _ => return Err(self.error(format!("expected '{sep}' or '{close}'"))),
            }
        }
    }

    fn atom(&mut self) -> Result<RawStructure, ParseError> {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '\'')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let mut index = Vec::new();
        if self.chars.get(self.pos) == Some(&'_') {
            self.pos += 1;
            loop {
                let digits_start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                if digits_start == self.pos {
                    return Err(self.error("expected digits in atom index"));
                }
                let digits: String = self.chars[digits_start..self.pos].iter().collect();
                index.push(
                    digits
                        .parse()
                        .map_err(|_| self.error("atom index component out of range"))?,
                );
                if self.chars.get(self.pos) == Some(&'.') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        if name == "o" && index.is_empty() {
            return Ok(RawStructure::Unit);
        }
        Ok(RawStructure::Atom(Atom::with_index(&name, &index)))
    }
}
