//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant, no implicit multiplication):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := nat | var | '(' expr ')' | '-' factor
//! ```
//!
//! Integer literals are mapped into the coefficient field; division is
//! not part of the grammar.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::poly::WPoly;
use crate::ring::RingDescriptor;
use crate::scalar::Field;

/// Syntax or name error, with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

/// Parse `text` into a polynomial over `ring`, embedding integer
/// literals with `cfg`.
pub fn parse<K: Field>(
    text: &str,
    ring: &Arc<RingDescriptor>,
    cfg: &K::Config,
) -> Result<WPoly<K>, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
        cfg,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(poly)
}

struct Parser<'a, K: Field> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Arc<RingDescriptor>,
    cfg: &'a K::Config,
}

impl<'a, K: Field> Parser<'a, K> {
    fn err(&self, message: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// Consume `c` if it is next (after whitespace); report whether it was.
    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<WPoly<K>, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<WPoly<K>, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<WPoly<K>, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.nat()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<WPoly<K>, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(WPoly::constant(self.ring, K::embed(self.cfg, &n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match (0..self.ring.num_vars()).find(|&i| self.ring.var_name(i) == name) {
                    Some(i) => Ok(WPoly::var(self.ring, i)),
                    None => Err(ParseError {
                        offset: start,
                        message: format!("unknown variable `{name}`"),
                    }),
                }
            }
            _ => Err(self.err("expected a number, variable, '(' or '-'")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits.parse().map_err(|_| ParseError {
            offset: start,
            message: "expected an integer".to_string(),
        })
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.err("expected an exponent"));
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits.parse().map_err(|_| ParseError {
            offset: start,
            message: "exponent overflow".to_string(),
        })
    }
}
