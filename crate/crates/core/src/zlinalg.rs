//! Exact integer matrices: Smith normal form, determinantal divisors and
//! critical groups of graph Laplacians.

use crate::error::{Error, Result};
use crate::graphs::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Misaligned {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != c) {
            return Err(Error::Misaligned {
                expected: c,
                got: bad.len(),
            });
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols: c,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        IntMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries: rows
                .iter()
                .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
                .map(|(r, c)| self.get(r, c).clone())
                .collect(),
        }
    }

    fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(ToPrimitive::to_i64).collect()
    }
}

/// Invariant factors `s_1 | s_2 | .. | s_rank` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

impl SnfResult {
    /// `Δ_i = s_1 ⋯ s_i` (1 for `i = 0`, 0 beyond the rank).
    pub fn divisor(&self, i: usize) -> BigInt {
        if i > self.rank {
            BigInt::zero()
        } else {
            self.factors[..i].iter().product()
        }
    }
}

/// The Laplacian `D_G - A_G`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for u in 0..n {
        m.set(u, u, BigInt::from(g.degree(u)));
        for v in g.neighbors(u).iter() {
            m.set(u, v, BigInt::from(-1));
        }
    }
    m
}

/// Smith normal form by Euclidean elimination. Runs in `i64` with checked
/// arithmetic and restarts in `BigInt` if anything overflows.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    if let Some(small) = m.to_i64() {
        if let Some(diag) = diagonalize(small, m.rows, m.cols) {
            return finish(diag.into_iter().map(BigInt::from).collect());
        }
    }
    let diag = diagonalize(m.entries.clone(), m.rows, m.cols).expect("BigInt never overflows");
    finish(diag)
}

/// [`smith_normal_form`] for a row-major `i64` matrix.
pub fn smith_normal_form_i64(entries: &[i64], rows: usize, cols: usize) -> SnfResult {
    assert_eq!(entries.len(), rows * cols);
    match diagonalize(entries.to_vec(), rows, cols) {
        Some(diag) => finish(diag.into_iter().map(BigInt::from).collect()),
        None => {
            let big = entries.iter().map(|&v| BigInt::from(v)).collect();
            finish(diagonalize(big, rows, cols).expect("BigInt never overflows"))
        }
    }
}

/// Gcd of all `i × i` minors; `Δ_0 = 1`.
pub fn determinantal_divisor(m: &IntMatrix, i: usize) -> Result<BigInt> {
    let max = m.rows.min(m.cols);
    if i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok(smith_normal_form(m).divisor(i))
}

// Reduces `a` to diagonal form; returns the nonzero diagonal, or None on
// overflow.
fn diagonalize<T: SnfInt>(mut a: Vec<T>, rows: usize, cols: usize) -> Option<Vec<T>> {
    if !a.iter().all(SnfInt::in_range) {
        return None;
    }
    let idx = |r: usize, c: usize| r * cols + c;
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                let v = &a[idx(r, c)];
                if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a[idx(br, bc)].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        swap_rows(&mut a, cols, t, pr);
        swap_cols(&mut a, cols, rows, t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a[idx(r, t)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&a[idx(r, t)], &a[idx(t, t)]);
                for c in t..cols {
                    let v = a[idx(r, c)].checked_sub(&q.checked_mul(&a[idx(t, c)])?)?;
                    if !v.in_range() {
                        return None;
                    }
                    a[idx(r, c)] = v;
                }
                dirty |= !a[idx(r, t)].is_zero();
            }
            for c in t + 1..cols {
                if a[idx(t, c)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&a[idx(t, c)], &a[idx(t, t)]);
                for r in t..rows {
                    let v = a[idx(r, c)].checked_sub(&q.checked_mul(&a[idx(r, t)])?)?;
                    if !v.in_range() {
                        return None;
                    }
                    a[idx(r, c)] = v;
                }
                dirty |= !a[idx(t, c)].is_zero();
            }
            if !dirty {
                break;
            }
            // a remainder is smaller than the pivot: move it into place
            let mut best = (t, t);
            for r in t + 1..rows {
                let v = &a[idx(r, t)];
                if !v.is_zero() && v.abs() < a[idx(best.0, best.1)].abs() {
                    best = (r, t);
                }
            }
            for c in t + 1..cols {
                let v = &a[idx(t, c)];
                if !v.is_zero() && v.abs() < a[idx(best.0, best.1)].abs() {
                    best = (t, c);
                }
            }
            swap_rows(&mut a, cols, t, best.0);
            swap_cols(&mut a, cols, rows, t, best.1);
        }
        diag.push(a[idx(t, t)].abs());
    }
    Some(diag)
}

trait SnfInt: Clone + Integer + Signed + CheckedMul + CheckedSub {
    fn in_range(&self) -> bool;
}

impl SnfInt for i64 {
    // keeps abs() and doubling overflow-free
    fn in_range(&self) -> bool {
        self.unsigned_abs() <= 1 << 61
    }
}

impl SnfInt for BigInt {
    fn in_range(&self) -> bool {
        true
    }
}

fn rounded_quotient<T: SnfInt>(a: &T, p: &T) -> T {
    let (q, r) = a.div_mod_floor(p);
    if r.abs() > p.abs() - r.abs() {
        q + T::one()
    } else {
        q
    }
}

fn swap_rows<T>(a: &mut [T], cols: usize, r1: usize, r2: usize) {
    if r1 != r2 {
        for c in 0..cols {
            a.swap(r1 * cols + c, r2 * cols + c);
        }
    }
}

fn swap_cols<T>(a: &mut [T], cols: usize, rows: usize, c1: usize, c2: usize) {
    if c1 != c2 {
        for r in 0..rows {
            a.swap(r * cols + c1, r * cols + c2);
        }
    }
}

// Turns a nonzero diagonal into the divisibility chain via
// diag(a, b) ~ diag(gcd, lcm).
fn finish(mut d: Vec<BigInt>) -> SnfResult {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if (&d[j] % &d[i]).is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    SnfResult {
        rank: d.len(),
        factors: d,
    }
}

/// `K(G) ≅ Z_{d_1} ⊕ .. ⊕ Z_{d_{n-1}}` for a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalGroup {
    /// All `n - 1` invariant factors, leading 1s included.
    pub factors: Vec<BigInt>,
    /// Number of factors equal to 1.
    pub f1: usize,
}

impl CriticalGroup {
    /// Product of the factors: the number of spanning trees.
    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    /// Factors greater than 1.
    pub fn torsion(&self) -> Vec<&BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).collect()
    }

    /// Number of invariant factors equal to `k`.
    pub fn count(&self, k: &BigInt) -> usize {
        self.factors.iter().filter(|d| *d == k).count()
    }
}

impl fmt::Display for CriticalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.torsion();
        if t.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = t.iter().map(|d| format!("Z_{d}")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

pub fn critical_group(g: &Graph) -> Result<CriticalGroup> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let snf = smith_normal_form(&laplacian(g));
    debug_assert_eq!(snf.rank, n.saturating_sub(1));
    let factors = snf.factors;
    let f1 = factors.iter().filter(|d| d.is_one()).count();
    Ok(CriticalGroup { factors, f1 })
}

pub fn f1(g: &Graph) -> Result<usize> {
    critical_group(g).map(|k| k.f1)
}
