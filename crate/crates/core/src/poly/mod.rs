//! Multivariate polynomials with arbitrary-precision integer coefficients.

mod det;
mod monomial;
mod text;

pub use det::{minors_of_row_set, symbolic_determinant, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use text::parse_polynomial;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Polynomial ring `Z[x1, .., xn]` with a fixed monomial order. Variable
/// `x{i+1}` corresponds to vertex `i` of the graph the ring was built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    order: MonomialOrder,
}

impl Ring {
    /// Panics if `nvars > 64`.
    pub fn new(nvars: usize, order: MonomialOrder) -> Self {
        assert!(nvars <= 64, "rings have at most 64 variables");
        Ring { nvars, order }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Ring::new(nvars, MonomialOrder::DegRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring::new(self.nvars, order)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn constant(&self, c: impl Into<BigInt>) -> Polynomial {
        self.term(c, Monomial::one(self.nvars))
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    /// The variable `x{i+1}`. Panics if `i >= nvars`.
    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable index out of range");
        self.term(1, Monomial::var(self.nvars, i))
    }

    pub fn term(&self, c: impl Into<BigInt>, m: Monomial) -> Polynomial {
        let c = c.into();
        assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: *self,
            terms: vec![Term { coeff: c, mon: m }],
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(&self, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (BigInt, Monomial)>,
    {
        let mut v: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, mon)| {
                assert_eq!(mon.nvars(), self.nvars);
                Term { coeff, mon }
            })
            .collect();
        let order = self.order;
        v.sort_by(|a, b| order.cmp(&b.mon, &a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.mon == t.mon => last.coeff += t.coeff,
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: *self,
            terms: out,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigInt,
    pub mon: Monomial,
}

/// A polynomial as a list of terms sorted strictly descending in the ring's
/// monomial order, with no zero coefficients. Zero is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mon.degree()).max().unwrap_or(0)
    }

    /// The value if the polynomial is a (possibly zero) constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [t] if t.mon.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Is this `1` or `-1`?
    pub fn is_unit(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.mon.is_one() && t.coeff.abs().is_one())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    mon: t.mon.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mon: t.mon.clone(),
                })
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mon: t.mon.mul(m),
                })
                .collect(),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = self.ring.zero();
        for t in &small.terms {
            acc = acc.combine(&large.mul_term(&t.coeff, &t.mon), false);
        }
        acc
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mon, &b[j].mon) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].coeff } else { b[j].coeff.clone() };
                    out.push(Term {
                        coeff: c,
                        mon: b[j].mon.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mon: a[i].mon.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: if negate { -&t.coeff } else { t.coeff.clone() },
            mon: t.mon.clone(),
        }));
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    /// `self - c * m * f`, merged in one pass.
    pub(crate) fn sub_mul_term(&self, c: &BigInt, m: &Monomial, f: &Polynomial) -> Polynomial {
        self.combine(&f.mul_term(c, m), true)
    }

    /// Multiplies by `-1` when the leading coefficient is negative.
    pub fn normalize_sign(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.ring.nvars {
            return Err(Error::PointLength {
                expected: self.ring.nvars,
                got: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.mon.exponents().iter().enumerate() {
                if e > 0 {
                    if point[i].is_zero() {
                        v.set_zero();
                        break;
                    }
                    v *= point[i].pow(e as u32);
                }
            }
            total += v;
        }
        Ok(total)
    }

    pub fn evaluate_i64(&self, point: &[i64]) -> Result<BigInt> {
        let p: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
        self.evaluate(&p)
    }

    /// Same polynomial viewed in `ring` (same variable count, possibly a
    /// different order).
    pub fn in_ring(&self, ring: Ring) -> Result<Polynomial> {
        if ring.nvars != self.ring.nvars {
            return Err(Error::RingMismatch);
        }
        Ok(ring.from_terms(self.terms.iter().map(|t| (t.coeff.clone(), t.mon.clone()))))
    }

    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].mon, &w[1].mon) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring, terms }
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        text::write_polynomial(self, f)
    }
}
