use super::{Polynomial, Ring};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Dense row-major matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Misaligned {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Misaligned {
                expected: c,
                got: rows.iter().map(Vec::len).find(|&l| l != c).unwrap_or(0),
            });
        }
        PolyMatrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// Submatrix on the given (sorted) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        PolyMatrix {
            ring: self.ring,
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }
}

/// Determinant by Laplace expansion memoized over column subsets.
pub fn symbolic_determinant(m: &PolyMatrix) -> Result<Polynomial> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.cols > 64 {
        return Err(Error::Capacity {
            requested: m.cols,
            limit: 64,
        });
    }
    let rows: Vec<usize> = (0..m.rows).collect();
    let full = if m.cols == 64 { u64::MAX } else { (1u64 << m.cols) - 1 };
    Ok(minors_of_row_set(m, &rows, full)
        .into_iter()
        .next()
        .map(|(_, p)| p)
        .unwrap_or_else(|| m.ring.zero()))
}

/// All nonzero minors with row set `rows` (sorted) and a column set drawn
/// from `allowed` with `|rows|` elements. Returns `(column mask, minor)`
/// pairs in ascending mask order.
///
/// `D(S)` is the determinant of the last `|S|` rows of `rows` against the
/// columns `S`; expanding along its first row gives
/// `D(S) = sum_t (-1)^t M[row][c_t] D(S - c_t)` with `c_t` the `t`-th
/// smallest column of `S`.
pub fn minors_of_row_set(m: &PolyMatrix, rows: &[usize], allowed: u64) -> Vec<(u64, Polynomial)> {
    let k = rows.len();
    if k == 0 {
        return vec![(0, m.ring.one())];
    }
    let cols: Vec<usize> = (0..m.cols.min(64)).filter(|&c| allowed >> c & 1 == 1).collect();
    let mut level: HashMap<u64, Polynomial> = HashMap::new();
    level.insert(0, m.ring.one());
    for j in 1..=k {
        let row = rows[k - j];
        let mut next: HashMap<u64, Polynomial> = HashMap::new();
        for (&mask, sub) in &level {
            // extend S - c by a column c; sign is (-1)^(position of c in S)
            for &c in &cols {
                if mask >> c & 1 == 1 {
                    continue;
                }
                let entry = m.get(row, c);
                if entry.is_zero() {
                    continue;
                }
                let below = (mask & ((1u64 << c) - 1)).count_ones();
                let prod = entry.mul_unchecked(sub);
                let prod = if below % 2 == 1 { prod.neg() } else { prod };
                let key = mask | (1u64 << c);
                match next.get_mut(&key) {
                    Some(acc) => *acc = acc.combine(&prod, false),
                    None => {
                        next.insert(key, prod);
                    }
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        level = next;
    }
    let mut out: Vec<(u64, Polynomial)> = level.into_iter().collect();
    out.sort_by_key(|(mask, _)| *mask);
    out
}
