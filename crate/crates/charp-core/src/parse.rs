//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := natural | variable | '(' expr ')' | '-' base
//! ```
//!
//! Multiplication is always explicit (`2*x`, never `2x`), integer literals
//! are reduced modulo `p`, and unknown variables are rejected against the
//! ring. Note one consequence of the grammar: unary minus is part of
//! `base`, so it binds tighter than `^` and `-x^2` parses as `(-x)^2`.
//! The printer never emits that shape, so printing and re-parsing always
//! round-trips.

use alloc::string::String;
use alloc::sync::Arc;

use crate::error::ParseError;
use crate::multipoly::{MultiPoly, PolyRing};

/// Parses an expression into an element of `ring`.
pub fn parse(src: &str, ring: &Arc<PolyRing>) -> Result<MultiPoly, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, ring };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: String::from(message) }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.src.get(self.pos) {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// The next non-whitespace byte, without consuming it.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
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

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let exp = self.natural()?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            if exp > 1 << 20 {
                return Err(self.error("exponent out of range"));
            }
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.base()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                // Integer literals become field constants; folding digit by
                // digit keeps arbitrarily long literals overflow-free.
                let field = self.ring.field();
                let mut acc: u64 = 0;
                while let Some(&c) = self.src.get(self.pos) {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    acc = field.reduce(acc * 10 + (c - b'0') as u64);
                    self.pos += 1;
                }
                Ok(MultiPoly::constant(self.ring, acc))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while let Some(&c) = self.src.get(self.pos) {
                    if c.is_ascii_alphanumeric() || c == b'_' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name = core::str::from_utf8(&self.src[start..self.pos])
                    .expect("identifier bytes are ASCII");
                match self.ring.var_index(name) {
                    Some(i) => Ok(MultiPoly::var(self.ring, i)),
                    None => Err(ParseError {
                        position: start,
                        message: alloc::format!("unknown variable `{name}`"),
                    }),
                }
            }
            _ => Err(self.error("expected a number, variable, `(` or `-`")),
        }
    }

    /// An exponent: a plain digit string, *not* reduced modulo p.
    fn natural(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.error("expected an exponent")),
        }
        let mut acc: u64 = 0;
        while let Some(&c) = self.src.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            acc = acc
                .checked_mul(10)
                .and_then(|a| a.checked_add((c - b'0') as u64))
                .ok_or_else(|| self.error("exponent out of range"))?;
            self.pos += 1;
        }
        Ok(acc)
    }
}
