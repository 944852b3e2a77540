//! `x1*x2^2 - 3*x3 + 1` style printing and parsing.
//!
//! Grammar: `poly := ['-'] term (('+' | '-') term)*`,
//! `term := factor ('*' factor)*`, `factor := integer | 'x' index ['^' exponent]`.

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt;

pub(super) fn write_polynomial(p: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (k, t) in p.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (k, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let c = t.coeff.abs();
        let mut first = true;
        if !c.is_one() || t.mon.is_one() {
            write!(f, "{c}")?;
            first = false;
        }
        for (i, &e) in t.mon.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::PolyParse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits"))
    }

    fn term(&mut self) -> Result<(BigInt, Monomial)> {
        let n = self.ring.nvars();
        let mut coeff = BigInt::one();
        let mut exps = vec![0u16; n];
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx: usize = self
                        .digits()?
                        .parse()
                        .map_err(|_| self.err("variable index too large"))?;
                    if idx == 0 || idx > n {
                        return Err(self.err(format!("variable x{idx} not in a ring with {n} variables")));
                    }
                    let mut e = 1u16;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self.digits()?.parse().map_err(|_| self.err("exponent too large"))?;
                    }
                    exps[idx - 1] = exps[idx - 1]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent too large"))?;
                }
                Some(c) if c.is_ascii_digit() => {
                    let v: BigInt = self.digits()?.parse().expect("digits parse");
                    coeff *= v;
                }
                Some(_) => return Err(self.err("expected a number or a variable")),
                None => return Err(self.err("unexpected end of input")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_exponents(&exps)))
    }
}

/// Parses a polynomial written in the printing grammar.
pub fn parse_polynomial(ring: Ring, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        ring,
    };
    let mut terms = Vec::new();
    let mut sign = 1;
    if p.peek() == Some(b'-') {
        p.pos += 1;
        sign = -1;
    }
    loop {
        let (c, m) = p.term()?;
        terms.push((c * sign, m));
        match p.peek() {
            Some(b'+') => sign = 1,
            Some(b'-') => sign = -1,
            None => break,
            Some(_) => return Err(p.err("expected '+', '-' or end of input")),
        }
        p.pos += 1;
    }
    Ok(ring.from_terms(terms))
}
