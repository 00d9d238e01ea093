//! Text form of isometries.
//!
//! ```text
//! element := factor ('*' factor)*
//! factor  := 't[' int (',' int)* ']' | 'id' | 'g' digits | generator-name
//! ```
//!
//! Whitespace is ignored. `gK` is the point-group element with index `K`
//! (`g0` is the identity); generator names come from the group spec. The
//! factors are multiplied left to right with the group law.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{Group, Isometry};

struct Parser<'a> {
    text: &'a str,
    src: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { text: self.text.to_string(), pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.src[start..self.pos].iter().collect();
        s.parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        self.src[start..self.pos].iter().collect()
    }

    fn factor(&mut self, g: &Group) -> Result<Isometry> {
        if self.src[self.pos..].starts_with(&['t', '[']) {
            self.pos += 2;
            let mut coords = vec![self.integer()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                coords.push(self.integer()?);
            }
            self.expect(']')?;
            if coords.len() != g.dim() {
                return Err(Error::DimensionMismatch { expected: g.dim(), found: coords.len() });
            }
            return Ok(g.translation(coords));
        }
        let start = self.pos;
        let name = self.ident();
        if name.is_empty() {
            return Err(self.err("expected a factor"));
        }
        if let Some(p) = g.generator_by_name(&name) {
            return Ok(g.spherical(p));
        }
        if name == "id" {
            return Ok(g.identity());
        }
        if let Some(digits) = name.strip_prefix('g') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let index: usize = digits.parse().map_err(|_| {
                    self.pos = start;
                    self.err("index too large")
                })?;
                if index >= g.order() {
                    return Err(Error::IndexOutOfRange { index, order: g.order() });
                }
                return Ok(g.spherical(index));
            }
        }
        Err(Error::UnknownGenerator(name))
    }
}

impl Group {
    pub fn parse_element(&self, text: &str) -> Result<Isometry> {
        let src: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { text, src, pos: 0 };
        let mut acc = p.factor(self)?;
        while p.peek() == Some('*') {
            p.pos += 1;
            let f = p.factor(self)?;
            acc = self.multiply(&acc, &f);
        }
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(acc)
    }

    /// `t[λ]*gK`, or `t[λ]` when the point part is the identity.
    pub fn format_element(&self, h: &Isometry) -> String {
        let coords: Vec<String> = h.trans.iter().map(ToString::to_string).collect();
        let t = format!("t[{}]", coords.join(","));
        if h.point == 0 {
            t
        } else {
            format!("{t}*g{}", h.point)
        }
    }
}
