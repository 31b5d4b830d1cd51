//! Recursive-descent parser shared by scalars and algebra elements.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | '+' unary | power
//! power   := atom ('^' ['-' | '+'] integer)?
//! atom    := integer | 's' | 'q' | name '[' integer ',' integer ']' | '(' sum ')'
//! ```
//!
//! `q` is read as `s^2`. Indexed names such as `P[1,0]` are handed to a
//! caller-supplied resolver.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;

use crate::lattice::LatticeVector;
use crate::scalar::{LaurentPoly, Scalar};

/// A parse or evaluation failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}

/// Values an expression can evaluate to.
pub trait ExprValue: Sized {
    fn from_scalar(c: Scalar) -> Self;
    fn add(self, rhs: Self) -> Result<Self, String>;
    fn sub(self, rhs: Self) -> Result<Self, String>;
    fn mul(self, rhs: Self) -> Result<Self, String>;
    fn div(self, rhs: Self) -> Result<Self, String>;
    fn pow(self, e: i64) -> Result<Self, String>;
    fn neg(self) -> Self;
}

/// Parses `text`, resolving indexed atoms `name[i,j]` through `resolve`
/// (which receives the name, the vector and the atom's byte offset).
pub fn parse<V, F>(text: &str, resolve: &mut F) -> Result<V, ParseError>
where
    V: ExprValue,
    F: FnMut(&str, LatticeVector, usize) -> Result<V, String>,
{
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        resolve,
    };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a, F> {
    src: &'a [u8],
    pos: usize,
    resolve: &'a mut F,
}

impl<'a, V, F> Parser<'a, F>
where
    V: ExprValue,
    F: FnMut(&str, LatticeVector, usize) -> Result<V, String>,
{
    fn error(&self, msg: &str) -> ParseError {
        ParseError {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn at(&self, pos: usize, msg: String) -> ParseError {
        ParseError { position: pos, message: msg }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

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

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected `{}`", c as char)))
        }
    }

    fn sum(&mut self) -> Result<V, ParseError> {
        let mut acc = self.product()?;
        loop {
            let op_pos = {
                self.skip_ws();
                self.pos
            };
            if self.eat(b'+') {
                let rhs = self.product()?;
                acc = acc.add(rhs).map_err(|m| self.at(op_pos, m))?;
            } else if self.eat(b'-') {
                let rhs = self.product()?;
                acc = acc.sub(rhs).map_err(|m| self.at(op_pos, m))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<V, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let op_pos = {
                self.skip_ws();
                self.pos
            };
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = acc.mul(rhs).map_err(|m| self.at(op_pos, m))?;
            } else if self.eat(b'/') {
                let rhs = self.unary()?;
                acc = acc.div(rhs).map_err(|m| self.at(op_pos, m))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<V, ParseError> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<V, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        let op_pos = self.pos;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let e = self.integer()?;
        let e = if negative { -e } else { e };
        base.pow(e).map_err(|m| self.at(op_pos, m))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| self.at(start, "integer out of range".to_string()))
    }

    fn signed_integer(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat(b'-');
        let v = self.integer()?;
        Ok(if negative { -v } else { v })
    }

    fn atom(&mut self) -> Result<V, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().map_err(|_| self.at(start, "bad integer".to_string()))?;
                Ok(V::from_scalar(Scalar::from_bigint(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    let i = self.signed_integer()?;
                    self.expect(b',')?;
                    let j = self.signed_integer()?;
                    self.expect(b']')?;
                    return (self.resolve)(name, LatticeVector::new(i, j), start).map_err(|m| self.at(start, m));
                }
                match name {
                    "s" => Ok(V::from_scalar(Scalar::s_pow(1))),
                    "q" => Ok(V::from_scalar(Scalar::from_poly(LaurentPoly::monomial(BigInt::from(1), 2)))),
                    _ => Err(self.at(start, alloc::format!("unknown symbol `{}`", name))),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }
}
