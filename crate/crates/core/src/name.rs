//! Structured generator names.
//!
//! Every construction names its output generators from the names of its
//! inputs, so repeated builds are reproducible and outputs are diffable:
//! tensor generators are tuples, quotient classes list their members,
//! collapse basepoints record which subcomputad was crushed, and disjoint
//! unions tag each summand.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A generator name. Ordering is derived and total, which fixes the
/// iteration order of chains and serialized documents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenName {
    /// A user-chosen token: letters, digits, `_`, `'`, `*`, `+`, `-`.
    Atom(String),
    /// A tensor pair, kept flat: `(a.b.c)` not `((a.b).c)`.
    Tensor(Vec<GenName>),
    /// A quotient class, sorted members: `[a|b]`.
    Class(Vec<GenName>),
    /// The basepoint created by collapsing a subcomputad; the inner name
    /// is the least 0-generator of the collapsed part: `*(x)`.
    Star(Box<GenName>),
    /// A summand tag from a disjoint union: `0:a`.
    Tagged(u32, Box<GenName>),
}

impl GenName {
    pub fn atom(s: impl Into<String>) -> Self {
        GenName::Atom(s.into())
    }

    pub fn tagged(tag: u32, inner: GenName) -> Self {
        GenName::Tagged(tag, Box::new(inner))
    }

    pub fn star(inner: GenName) -> Self {
        GenName::Star(Box::new(inner))
    }

    /// Class name from members; sorts and deduplicates.
    pub fn class(mut members: Vec<GenName>) -> Self {
        members.sort();
        members.dedup();
        GenName::Class(members)
    }

    /// Pair two names as a tensor generator, flattening nested tensors so
    /// that iterated products get canonical names.
    pub fn tensor(left: &GenName, right: &GenName) -> Self {
        let mut factors = Vec::new();
        match left {
            GenName::Tensor(v) => factors.extend(v.iter().cloned()),
            other => factors.push(other.clone()),
        }
        match right {
            GenName::Tensor(v) => factors.extend(v.iter().cloned()),
            other => factors.push(other.clone()),
        }
        GenName::Tensor(factors)
    }
}

fn atom_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '\'' | '*' | '+' | '-')
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenName::Atom(s) => write!(f, "{s}"),
            GenName::Tensor(v) => {
                write!(f, "(")?;
                for (i, n) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ".")?;
                    }
                    write!(f, "{n}")?;
                }
                write!(f, ")")
            }
            GenName::Class(v) => {
                write!(f, "[")?;
                for (i, n) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{n}")?;
                }
                write!(f, "]")
            }
            GenName::Star(inner) => write!(f, "*({inner})"),
            GenName::Tagged(tag, inner) => write!(f, "{tag}:{inner}"),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input,
            chars: input.char_indices().peekable(),
        }
    }

    fn err(&mut self, what: &str) -> Error {
        let at = self.chars.peek().map(|(i, _)| *i).unwrap_or(self.input.len());
        Error::Parse(format!("{what} at byte {at} in `{}`", self.input))
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        self.chars.next().map(|(_, c)| c)
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn name(&mut self) -> Result<GenName, Error> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let mut factors = vec![self.name()?];
                while self.peek() == Some('.') {
                    self.bump();
                    factors.push(self.name()?);
                }
                self.expect(')')?;
                if factors.len() < 2 {
                    return Err(self.err("tensor name needs at least two factors"));
                }
                Ok(GenName::Tensor(factors))
            }
            Some('[') => {
                self.bump();
                let mut members = vec![self.name()?];
                while self.peek() == Some('|') {
                    self.bump();
                    members.push(self.name()?);
                }
                self.expect(']')?;
                Ok(GenName::Class(members))
            }
            Some(c) if atom_char(c) => {
                let mut token = String::new();
                while let Some(c) = self.peek() {
                    if atom_char(c) {
                        token.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                // `*(x)` is a collapse basepoint, `12:x` a summand tag;
                // a bare token is an atom.
                if token == "*" && self.peek() == Some('(') {
                    self.bump();
                    let inner = self.name()?;
                    self.expect(')')?;
                    return Ok(GenName::star(inner));
                }
                if self.peek() == Some(':') {
                    let tag: u32 = token
                        .parse()
                        .map_err(|_| self.err("tag before `:` must be an integer"))?;
                    self.bump();
                    return Ok(GenName::tagged(tag, self.name()?));
                }
                Ok(GenName::Atom(token))
            }
            _ => Err(self.err("expected a generator name")),
        }
    }
}

impl FromStr for GenName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser::new(s.trim());
        let name = p.name()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(name)
    }
}
