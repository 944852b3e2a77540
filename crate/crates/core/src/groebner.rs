//! Strong Gröbner bases over the integers and the unit-ideal test.
//!
//! A finite set `G ⊂ Z[X]` is a strong Gröbner basis when every leading term
//! of the ideal is a multiple (monomial and coefficient) of some `LT(g)`.
//! Over a PID this holds iff, for every pair, the S-polynomial
//! (lcm of leading monomials, lcm of leading coefficients) and, unless one
//! leading coefficient divides the other, the G-polynomial (Bézout
//! combination with leading term `gcd(a, b) · lcm`) reduce to zero.

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring, Term};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

/// Resource limits for [`strong_groebner_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximum number of critical pairs reduced.
    pub max_pairs: usize,
    /// Maximum total degree of any basis element.
    pub max_degree: u32,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 200_000,
            max_degree: 40,
        }
    }
}

/// Basis of an ideal; `complete` is set once every pair reduced to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
    complete: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Does the basis generate the unit ideal?
    pub fn contains_unit(&self) -> bool {
        self.basis.iter().any(Polynomial::is_unit)
    }

    /// Ideal membership; exact because the basis is complete.
    pub fn contains(&self, p: &Polynomial) -> bool {
        reduce(p, &self.basis).is_zero()
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

// Leading-term view of a basis element used for divisor lookups.
struct Lead<'a> {
    coeff: &'a BigInt,
    mon: &'a Monomial,
}

fn leads(basis: &[Polynomial]) -> Vec<Lead<'_>> {
    basis
        .iter()
        .filter_map(|g| g.leading_term())
        .map(|t| Lead {
            coeff: &t.coeff,
            mon: &t.mon,
        })
        .collect()
}

// Index of the divisor of `m` with the smallest |LC|; ties go to the
// earliest element.
fn best_divisor(leads: &[Lead<'_>], m: &Monomial) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, l) in leads.iter().enumerate() {
        if l.mon.divides(m) && best.is_none_or(|b| l.coeff.abs() < leads[b].coeff.abs()) {
            best = Some(i);
        }
    }
    best
}

// One reduction step of the term `c * m` against `g` with leading term
// `lc * lm`: subtract `q * (m / lm) * g` where `c - q*lc` is the
// nonnegative remainder mod |lc|. Returns the quotient, or None if zero.
fn quotient(c: &BigInt, lc: &BigInt) -> Option<BigInt> {
    let r = c.mod_floor(&lc.abs());
    let q = (c - &r) / lc;
    (!q.is_zero()).then_some(q)
}

/// Full reduction with coefficient remainders: each term divisible by some
/// leading monomial has its coefficient replaced by the nonnegative
/// remainder modulo the smallest such leading coefficient.
///
/// The result differs from `p` by an element of the ideal of `basis`; when
/// `basis` is a complete strong basis it is the canonical normal form.
pub fn reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = p.ring();
    let leads = leads(basis);
    let live: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut rem: Vec<Term> = Vec::new();
    let mut cur = p.clone();
    let mut skip = 0;
    while skip < cur.len() {
        let t = &cur.terms()[skip];
        let step = best_divisor(&leads, &t.mon)
            .and_then(|i| quotient(&t.coeff, leads[i].coeff).map(|q| (i, q, t.mon.div(leads[i].mon))));
        match step {
            Some((i, q, shift)) => {
                // terms before `skip` are final; split them off first
                if skip > 0 {
                    rem.extend(cur.terms()[..skip].iter().cloned());
                    cur = Polynomial::from_sorted_terms(ring, cur.terms()[skip..].to_vec());
                    skip = 0;
                }
                cur = cur.sub_mul_term(&q, &shift, live[i]);
            }
            None => skip += 1,
        }
    }
    rem.extend(cur.terms().iter().cloned());
    Polynomial::from_sorted_terms(ring, rem)
}

// Reduces only the leading term until it is irreducible or the
// polynomial vanishes.
fn top_reduce(mut p: Polynomial, basis: &[Polynomial], leads: &[Lead<'_>]) -> Polynomial {
    while let Some(t) = p.leading_term() {
        let Some(i) = best_divisor(leads, &t.mon) else { break };
        let Some(q) = quotient(&t.coeff, leads[i].coeff) else {
            break;
        };
        let shift = t.mon.div(leads[i].mon);
        p = p.sub_mul_term(&q, &shift, &basis[i]);
    }
    p
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    degree: u32,
    seq: usize,
}

enum Work {
    Input(usize),
    Pair(usize, usize),
}

struct Engine<'a> {
    ring: Ring,
    cfg: &'a GbConfig,
    basis: Vec<Polynomial>,
    queue: BinaryHeap<Reverse<(Key, usize)>>,
    work: Vec<Work>,
    pairs_done: usize,
    unit: bool,
}

impl Engine<'_> {
    fn push(&mut self, degree: u32, w: Work) {
        let seq = self.work.len();
        self.work.push(w);
        self.queue.push(Reverse((Key { degree, seq }, seq)));
    }

    fn insert(&mut self, p: Polynomial) -> Result<()> {
        let p = p.normalize_sign();
        if p.is_unit() {
            self.unit = true;
            return Ok(());
        }
        let deg = p.total_degree();
        if deg > self.cfg.max_degree {
            return Err(Error::BudgetExhausted(format!(
                "basis element of degree {deg} exceeds the limit {}",
                self.cfg.max_degree
            )));
        }
        let k = self.basis.len();
        let lm = p.leading_monomial().expect("nonzero").clone();
        self.basis.push(p);
        for i in 0..k {
            let lcm = self.basis[i].leading_monomial().expect("nonzero").lcm(&lm);
            self.push(lcm.degree(), Work::Pair(i, k));
        }
        Ok(())
    }

    fn reduce_and_insert(&mut self, p: Polynomial) -> Result<()> {
        let r = {
            let leads = leads(&self.basis);
            top_reduce(p, &self.basis, &leads)
        };
        if !r.is_zero() {
            self.insert(r)?;
        }
        Ok(())
    }

    fn pair_polys(&self, i: usize, j: usize) -> (Option<Polynomial>, Option<Polynomial>) {
        let (f, g) = (&self.basis[i], &self.basis[j]);
        let (tf, tg) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
        let (a, b) = (&tf.coeff, &tg.coeff);
        let m = tf.mon.lcm(&tg.mon);
        let (mf, mg) = (m.div(&tf.mon), m.div(&tg.mon));
        let coprime = tf.mon.coprime(&tg.mon) && a.gcd(b).is_one();
        let s = (!coprime).then(|| {
            let l = a.lcm(b);
            f.mul_term(&(&l / a), &mf).sub_mul_term(&(&l / b), &mg, g)
        });
        let gpoly = (!(b % a).is_zero() && !(a % b).is_zero()).then(|| {
            let e = a.extended_gcd(b);
            f.mul_term(&e.x, &mf).sub_mul_term(&(-e.y), &mg, g)
        });
        (s, gpoly)
    }

    fn run(&mut self, inputs: &[Polynomial]) -> Result<()> {
        while let Some(Reverse((_, idx))) = self.queue.pop() {
            if self.unit {
                return Ok(());
            }
            match self.work[idx] {
                Work::Input(k) => self.reduce_and_insert(inputs[k].clone())?,
                Work::Pair(i, j) => {
                    self.pairs_done += 1;
                    if self.pairs_done > self.cfg.max_pairs {
                        return Err(Error::BudgetExhausted(format!(
                            "more than {} critical pairs",
                            self.cfg.max_pairs
                        )));
                    }
                    let (s, g) = self.pair_polys(i, j);
                    // the G-polynomial carries the smaller leading coefficient
                    for p in [g, s].into_iter().flatten() {
                        self.reduce_and_insert(p)?;
                        if self.unit {
                            return Ok(());
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn common_ring(gens: &[Polynomial]) -> Result<Option<Ring>> {
    let Some(first) = gens.first() else { return Ok(None) };
    if gens.iter().any(|g| g.ring() != first.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(Some(first.ring()))
}

/// Strong Gröbner basis with the default budget.
pub fn strong_groebner(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    strong_groebner_with(gens, &GbConfig::default())
}

/// Buchberger's procedure over `Z` with the normal selection strategy
/// (smallest lcm degree first, then insertion order). Inputs enter the queue
/// as pseudo-pairs keyed by their own degree. The result is interreduced
/// and sorted by leading term.
pub fn strong_groebner_with(gens: &[Polynomial], cfg: &GbConfig) -> Result<GroebnerBasis> {
    let Some(ring) = common_ring(gens)? else {
        return Ok(GroebnerBasis {
            ring: Ring::degrevlex(0),
            basis: Vec::new(),
            complete: true,
        });
    };
    let mut e = Engine {
        ring,
        cfg,
        basis: Vec::new(),
        queue: BinaryHeap::new(),
        work: Vec::new(),
        pairs_done: 0,
        unit: false,
    };
    for (k, g) in gens.iter().enumerate() {
        if !g.is_zero() {
            e.push(g.total_degree(), Work::Input(k));
        }
    }
    e.run(gens)?;
    let basis = if e.unit {
        vec![ring.one()]
    } else {
        interreduce(ring, e.basis)
    };
    Ok(GroebnerBasis {
        ring: e.ring,
        basis,
        complete: true,
    })
}

fn strongly_divides(a: &Term, b: &Term) -> bool {
    a.mon.divides(&b.mon) && (&b.coeff % &a.coeff).is_zero()
}

fn interreduce(ring: Ring, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order();
    let cmp_lead = |p: &Polynomial, q: &Polynomial| {
        let (a, b) = (p.leading_term().expect("nonzero"), q.leading_term().expect("nonzero"));
        order.cmp(&a.mon, &b.mon).then_with(|| a.coeff.cmp(&b.coeff))
    };
    basis.sort_by(cmp_lead);
    // drop elements whose leading term is a multiple of an earlier one
    let mut kept: Vec<Polynomial> = Vec::new();
    for p in basis {
        let lt = p.leading_term().expect("nonzero");
        if !kept
            .iter()
            .any(|k| strongly_divides(k.leading_term().expect("nonzero"), lt))
        {
            kept.retain(|k| !strongly_divides(lt, k.leading_term().expect("nonzero")));
            kept.push(p);
        }
    }
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        kept[i] = reduce(&kept[i], &others);
    }
    kept.sort_by(cmp_lead);
    kept
}

/// How a triviality verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecisionPath {
    /// A generator (minor) equal to ±1.
    UnitMinor,
    /// The constant generators have gcd 1.
    ConstantGcd,
    /// Some integer point maps every generator into a proper ideal of `Z`.
    Evaluation,
    /// A complete strong Gröbner basis.
    FullGb,
}

impl fmt::Display for DecisionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecisionPath::UnitMinor => "unit-minor",
            DecisionPath::ConstantGcd => "constant-gcd",
            DecisionPath::Evaluation => "evaluation",
            DecisionPath::FullGb => "full-gb",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub trivial: bool,
    pub path: DecisionPath,
}

/// Options for [`is_trivial_with`].
#[derive(Clone, Debug, Default)]
pub struct TrivialityConfig {
    pub gb: GbConfig,
    /// Evaluation points tried after the all-zeros and all-(-1) points and
    /// before the pseudorandom ones (e.g. a graph's degree vector).
    pub extra_points: Vec<Vec<i64>>,
    /// Skip the evaluation stage.
    pub skip_evaluation: bool,
}

/// Seed of the pseudorandom evaluation points.
pub const EVALUATION_SEED: u64 = 0x5eed_c0de;
/// Number of pseudorandom evaluation points in `[-3, 3]^n`.
pub const RANDOM_POINTS: usize = 16;

/// The fixed evaluation points for a ring with `nvars` variables:
/// all zeros, all `-1`, `extra`, then pseudorandom points in `[-3, 3]^n`.
pub fn evaluation_points(nvars: usize, extra: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut pts = vec![vec![0; nvars], vec![-1; nvars]];
    pts.extend(extra.iter().filter(|p| p.len() == nvars).cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(EVALUATION_SEED);
    for _ in 0..RANDOM_POINTS {
        pts.push((0..nvars).map(|_| rng.gen_range(-3..=3)).collect());
    }
    pts
}

/// `1 ∈ ⟨gens⟩` over `Z[X]`.
pub fn is_trivial(gens: &[Polynomial]) -> Result<bool> {
    is_trivial_with(gens, &TrivialityConfig::default()).map(|v| v.trivial)
}

/// Staged unit-ideal test: a unit generator, constants with gcd 1, integer
/// evaluations with a common divisor (a ring map onto a proper ideal of `Z`
/// proves the ideal proper), and finally a strong Gröbner basis.
pub fn is_trivial_with(gens: &[Polynomial], cfg: &TrivialityConfig) -> Result<Verdict> {
    let Some(ring) = common_ring(gens)? else {
        return Ok(Verdict {
            trivial: false,
            path: DecisionPath::Evaluation,
        });
    };
    if gens.iter().any(Polynomial::is_unit) {
        return Ok(Verdict {
            trivial: true,
            path: DecisionPath::UnitMinor,
        });
    }
    let g = gens
        .iter()
        .filter_map(Polynomial::as_constant)
        .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
    if g.is_one() {
        return Ok(Verdict {
            trivial: true,
            path: DecisionPath::ConstantGcd,
        });
    }
    if !cfg.skip_evaluation {
        for pt in evaluation_points(ring.nvars(), &cfg.extra_points) {
            let mut acc = g.clone();
            for p in gens {
                acc = acc.gcd(&p.evaluate_i64(&pt)?);
                if acc.is_one() {
                    break;
                }
            }
            if !acc.is_one() {
                return Ok(Verdict {
                    trivial: false,
                    path: DecisionPath::Evaluation,
                });
            }
        }
    }
    let gb = strong_groebner_with(gens, &cfg.gb)?;
    Ok(Verdict {
        trivial: gb.contains_unit(),
        path: DecisionPath::FullGb,
    })
}

/// Do `a` and `b` generate the same ideal?
pub fn ideal_equals(a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    ideal_equals_with(a, b, &GbConfig::default())
}

pub fn ideal_equals_with(a: &[Polynomial], b: &[Polynomial], cfg: &GbConfig) -> Result<bool> {
    let all: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    common_ring(&all)?;
    let ga = strong_groebner_with(a, cfg)?;
    let gb = strong_groebner_with(b, cfg)?;
    Ok(a.iter().all(|p| gb.contains(p)) && b.iter().all(|p| ga.contains(p)))
}

/// Sorts generators by (degree, term count) after dropping zeros and
/// sign-normalized duplicates.
pub fn preprocess(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = gens
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.normalize_sign())
        .collect();
    v.sort_by(|p, q| {
        (p.total_degree(), p.len())
            .cmp(&(q.total_degree(), q.len()))
            .then_with(|| compare_terms(p, q))
    });
    v.dedup();
    v
}

fn compare_terms(p: &Polynomial, q: &Polynomial) -> Ordering {
    let order = p.ring().order();
    for (a, b) in p.terms().iter().zip(q.terms()) {
        let c = order.cmp(&a.mon, &b.mon).then_with(|| a.coeff.cmp(&b.coeff));
        if c != Ordering::Equal {
            return c;
        }
    }
    p.len().cmp(&q.len())
}
