//! Infix string notation: `MAP,SAM=>SAP`.
//!
//! Grammar (whitespace between tokens is insignificant):
//!
//! ```text
//! syllogism = prop sep prop sep? therefore sep? prop
//! prop      = UPPER FORM UPPER | TERM "." FORM "." TERM
//! therefore = "∴" | "=>"
//! sep       = " "* ","? " "*
//! ```
//!
//! Single-letter propositions are written without separators (`MAP`);
//! a proposition with any longer term uses dots around the form letter
//! (`DOG.A.MAMMAL`). Complemented terms (`~M`) are printed with the dotted
//! form and are only accepted by [`parse_syllogism_extended`].

use std::fmt;

use thiserror::Error;

use crate::model::{Form, MalformedSyllogism, Mood, Proposition, Syllogism, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Term,
    Form,
    Dot,
    Separator,
    Therefore,
    End,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Term => "term",
            Expected::Form => "form letter (A, E, I, O)",
            Expected::Dot => "'.'",
            Expected::Separator => "',' or space",
            Expected::Therefore => "'∴' or '=>'",
            Expected::End => "end of input",
        })
    }
}

/// `position` is a character index into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {}, found {}", list(.expected), found_text(.found))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<Expected>,
    pub found: Option<char>,
}

fn list(expected: &[Expected]) -> String {
    let parts: Vec<String> = expected.iter().map(|e| e.to_string()).collect();
    match parts.len() {
        0 => "nothing".into(),
        1 => parts[0].clone(),
        _ => format!("one of {}", parts.join(", ")),
    }
}

fn found_text(found: &Option<char>) -> String {
    match found {
        Some(c) => format!("{c:?}"),
        None => "end of input".into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("not a standard-form syllogism")]
    Malformed(#[from] MalformedSyllogism),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    allow_complement: bool,
}

impl Parser {
    fn new(text: &str, allow_complement: bool) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            allow_complement,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, index: usize) -> Option<char> {
        self.chars.get(index).copied()
    }

    fn error_at(&self, position: usize, expected: &[Expected]) -> ParseError {
        ParseError {
            position,
            expected: expected.to_vec(),
            found: self.peek_at(position),
        }
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    /// Length of the `[A-Z0-9]` run starting at `start`.
    fn run_len(&self, start: usize) -> usize {
        self.chars[start.min(self.chars.len())..]
            .iter()
            .take_while(|c| c.is_ascii_uppercase() || c.is_ascii_digit())
            .count()
    }

    fn word(&self, start: usize, len: usize) -> String {
        self.chars[start..start + len].iter().collect()
    }

    fn proposition(&mut self) -> Result<Proposition, ParseError> {
        let start = self.pos;
        let tilde = self.peek() == Some('~');
        if tilde {
            if !self.allow_complement {
                return Err(self.error_at(start, &[Expected::Term]));
            }
            return self.dotted(start);
        }
        if !matches!(self.peek(), Some(c) if c.is_ascii_uppercase()) {
            return Err(self.error_at(start, &[Expected::Term]));
        }
        let run = self.run_len(start);
        if self.peek_at(start + run) == Some('.') {
            return self.dotted(start);
        }
        // compact form: exactly three characters, term form term
        if Form::from_letter(self.peek_at(start + 1).unwrap_or('\0')).is_none() || run < 2 {
            let mut expected = vec![Expected::Form];
            if run == 1 {
                expected.push(Expected::Dot);
            }
            return Err(self.error_at(start + 1, &expected));
        }
        if run < 3 || !self.chars[start + 2].is_ascii_uppercase() {
            return Err(self.error_at(start + 2, &[Expected::Term]));
        }
        let form = Form::from_letter(self.chars[start + 1]).expect("checked");
        let subject = Term::from_valid(&self.word(start, 1));
        let predicate = Term::from_valid(&self.word(start + 2, 1));
        self.pos = start + 3;
        Ok(Proposition::new(form, subject, predicate))
    }

    fn dotted_term(&mut self) -> Result<Term, ParseError> {
        let mut complemented = false;
        if self.peek() == Some('~') {
            if !self.allow_complement {
                return Err(self.error_at(self.pos, &[Expected::Term]));
            }
            complemented = true;
            self.pos += 1;
        }
        if !matches!(self.peek(), Some(c) if c.is_ascii_uppercase()) {
            return Err(self.error_at(self.pos, &[Expected::Term]));
        }
        let len = self.run_len(self.pos);
        let term = Term::from_valid(&self.word(self.pos, len));
        self.pos += len;
        Ok(if complemented { term.complement() } else { term })
    }

    fn expect_dot(&mut self) -> Result<(), ParseError> {
        if self.peek() == Some('.') {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_at(self.pos, &[Expected::Dot]))
        }
    }

    fn dotted(&mut self, start: usize) -> Result<Proposition, ParseError> {
        self.pos = start;
        let subject = self.dotted_term()?;
        self.expect_dot()?;
        let form = match self.peek().and_then(Form::from_letter) {
            Some(f) => f,
            None => return Err(self.error_at(self.pos, &[Expected::Form])),
        };
        self.pos += 1;
        self.expect_dot()?;
        let predicate = self.dotted_term()?;
        Ok(Proposition::new(form, subject, predicate))
    }

    /// `sep` between the premises: spaces and at most one comma, possibly
    /// empty (`MAPSAM∴SAP`).
    fn separator(&mut self) {
        self.skip_spaces();
        if self.peek() == Some(',') {
            self.pos += 1;
            self.skip_spaces();
        }
    }

    fn therefore(&mut self) -> Result<(), ParseError> {
        self.skip_spaces();
        if self.peek() == Some(',') {
            self.pos += 1;
            self.skip_spaces();
        }
        match (self.peek(), self.peek_at(self.pos + 1)) {
            (Some('∴'), _) => self.pos += 1,
            (Some('='), Some('>')) => self.pos += 2,
            _ => return Err(self.error_at(self.pos, &[Expected::Therefore])),
        }
        self.skip_spaces();
        if self.peek() == Some(',') {
            self.pos += 1;
            self.skip_spaces();
        }
        Ok(())
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.skip_spaces();
        if self.pos < self.chars.len() {
            return Err(self.error_at(self.pos, &[Expected::End]));
        }
        Ok(())
    }

    fn syllogism(&mut self) -> Result<Syllogism, ParseError> {
        self.skip_spaces();
        let major = self.proposition()?;
        let before = self.pos;
        self.separator();
        let minor = self.proposition().map_err(|mut e| {
            if e.position == before && !e.expected.contains(&Expected::Separator) {
                e.expected.push(Expected::Separator);
            }
            e
        })?;
        self.therefore()?;
        let conclusion = self.proposition()?;
        self.end()?;
        Ok(Syllogism::new(major, minor, conclusion))
    }
}

pub fn parse_proposition(text: &str) -> Result<Proposition, ParseError> {
    let mut parser = Parser::new(text, false);
    parser.skip_spaces();
    let p = parser.proposition()?;
    parser.end()?;
    Ok(p)
}

/// Parses and checks standard form.
pub fn parse_syllogism(text: &str) -> Result<Syllogism, NotationError> {
    let s = Parser::new(text, false).syllogism()?;
    s.roles()?;
    Ok(s)
}

/// Parses any triple of propositions, complemented terms included, without
/// checking standard form. Used to read back reduction steps.
pub fn parse_syllogism_extended(text: &str) -> Result<Syllogism, ParseError> {
    Parser::new(text, true).syllogism()
}

/// Accepts a mnemonic name (case-insensitive) or a syllogism string.
pub fn parse_syllogism_or_name(text: &str) -> Result<Syllogism, NotationError> {
    let trimmed = text.trim();
    if let Ok(mood) = Mood::from_mnemonic(trimmed) {
        return Ok(mood.syllogism());
    }
    parse_syllogism(trimmed)
}

pub fn print_proposition(p: &Proposition) -> String {
    p.to_string()
}

pub fn print_syllogism(s: &Syllogism) -> String {
    s.to_string()
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.subject.is_single_letter() && self.predicate.is_single_letter() {
            write!(f, "{}{}{}", self.subject, self.form, self.predicate)
        } else {
            write!(f, "{}.{}.{}", self.subject, self.form, self.predicate)
        }
    }
}

impl fmt::Display for Syllogism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}=>{}", self.major, self.minor, self.conclusion)
    }
}

impl serde::Serialize for Proposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Proposition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        let mut parser = Parser::new(&raw, true);
        parser.skip_spaces();
        parser
            .proposition()
            .and_then(|p| parser.end().map(|_| p))
            .map_err(serde::de::Error::custom)
    }
}

impl serde::Serialize for Syllogism {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Syllogism {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        parse_syllogism_extended(&raw).map_err(serde::de::Error::custom)
    }
}
