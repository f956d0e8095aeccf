//! Integer matrices: fraction-free determinants and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from nested rows of small integers. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(rows.iter().all(|r| r.as_ref().len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i].as_ref()[j]))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn diagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { BigInt::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * c;
            *self.get_mut(dst, j) -= v;
        }
    }

    /// col[dst] -= c * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * c;
            *self.get_mut(i, dst) -= v;
        }
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        IntMatrix::new(self.rows + other.rows, cols, entries)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every division in the elimination is exact, so the intermediates stay
/// integral and bounded by minors of the input.
pub fn bareiss_det(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let v = (&pivot * a.get(i, j) - &aik * a.get(k, j)) / &prev;
                *a.get_mut(i, j) = v;
            }
            *a.get_mut(i, k) = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { -det } else { det })
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix, `r = min(rows, cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }

    /// Product of the nonzero invariant factors.
    pub fn nonzero_product(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .product()
    }
}

/// Smith normal form by alternating row and column reduction.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let r = a.rows.min(a.cols);
    let mut factors = Vec::with_capacity(r);
    for t in 0..r {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
            factors.resize(r, BigInt::zero());
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                a.row_axpy(i, t, &q);
                if !a.get(i, t).is_zero() {
                    changed = true;
                }
            }
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                a.col_axpy(j, t, &q);
                if !a.get(t, j).is_zero() {
                    changed = true;
                }
            }
            if changed {
                let (pi, pj) = min_abs_nonzero_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // pivot must divide the rest of the block
            let pivot = a.get(t, t).clone();
            let bad = (t + 1..a.rows)
                .find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let one = -BigInt::one();
                    a.row_axpy(t, i, &one);
                }
                None => break,
            }
        }
        factors.push(a.get(t, t).abs());
    }
    SmithForm {
        invariant_factors: factors,
    }
}

fn min_abs_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry among row `t` and column `t`, from position `t` on.
fn min_abs_nonzero_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs: Option<BigInt> = None;
    let mut consider = |i: usize, j: usize| {
        let v = a.get(i, j);
        if !v.is_zero() && best_abs.as_ref().is_none_or(|b| &v.abs() < b) {
            best_abs = Some(v.abs());
            best = (i, j);
        }
    };
    for i in t..a.rows {
        consider(i, t);
    }
    for j in t + 1..a.cols {
        consider(t, j);
    }
    best
}
