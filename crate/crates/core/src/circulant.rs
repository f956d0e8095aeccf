//! Integer circulant matrices.
//!
//! Row `i` of the matrix is the first row rotated `i` places to the
//! right, so entry `(i, j)` is `a[(j - i) mod n]`. With the symbol
//! polynomial `f(x) = sum a_(i+1) x^i`, the vector `(1, w, ..., w^(n-1))`
//! is an eigenvector with eigenvalue `f(w)` for every `n`-th root of
//! unity `w`, hence
//!
//! ```text
//! det M = prod_{w^n = 1} f(w) = Res(x^n - 1, f) = f(1) * Res(Phi_n, f)   (n prime)
//! ```
//!
//! The three determinant routes in [`DetMethod`] are independent
//! computations of these three expressions and agree exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composition::Compositions;
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::exactmath::{
    bareiss_det, binomial, cyclotomic_poly, is_prime_u64, resultant, IntMatrix, IntPoly,
};

/// Largest dimension [`nonvanishing_scan`] will enumerate exhaustively.
pub const MAX_SCAN_DIMENSION: u64 = 11;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circulant {
    first_row: Vec<BigInt>,
}

impl Circulant {
    /// Panics on an empty row.
    pub fn new(first_row: Vec<BigInt>) -> Self {
        assert!(!first_row.is_empty(), "circulant needs at least one column");
        Circulant { first_row }
    }

    pub fn from_i64s(first_row: &[i64]) -> Self {
        Self::new(first_row.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn from_u32s(first_row: &[u32]) -> Self {
        Self::new(first_row.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn n(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[BigInt] {
        &self.first_row
    }

    pub fn row_sum(&self) -> BigInt {
        self.first_row.iter().sum()
    }

    pub fn symbol(&self) -> IntPoly {
        IntPoly::new(self.first_row.clone())
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let n = self.n();
        IntMatrix::from_fn(n, n, |i, j| self.first_row[(j + n - i) % n].clone())
    }

    /// `f(zeta_n^k)` for `k = 0, ..., n-1`, as canonical elements of `Z[zeta_n]`.
    pub fn eigenvalues(&self) -> Vec<CyclotomicInt> {
        let n = self.n();
        (0..n)
            .map(|k| {
                let mut raw = vec![BigInt::zero(); n];
                for (i, a) in self.first_row.iter().enumerate() {
                    raw[(i * k) % n] += a;
                }
                CyclotomicInt::new(n as u64, &raw)
            })
            .collect()
    }

    pub fn det(&self, method: DetMethod) -> Result<BigInt> {
        let n = self.n();
        match method {
            DetMethod::Elimination => bareiss_det(&self.to_matrix()),
            DetMethod::Eigenproduct => resultant(&IntPoly::x_pow_minus_one(n), &self.symbol()),
            DetMethod::NormFactored => {
                if !is_prime_u64(n as u64) {
                    return Err(Error::NotPrime(n as u64));
                }
                let primitive = resultant(&cyclotomic_poly(n as u64), &self.symbol())?;
                Ok(self.row_sum() * primitive)
            }
        }
    }
}

pub fn circ_eigenvalues(c: &Circulant) -> Vec<CyclotomicInt> {
    c.eigenvalues()
}

pub fn circ_det(c: &Circulant, method: DetMethod) -> Result<BigInt> {
    c.det(method)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetMethod {
    /// Bareiss elimination on the realized matrix.
    Elimination,
    /// `Res(x^n - 1, f)`.
    Eigenproduct,
    /// `f(1) * Res(Phi_n, f)`; prime `n` only.
    NormFactored,
}

impl DetMethod {
    pub const ALL: [DetMethod; 3] = [
        DetMethod::Elimination,
        DetMethod::Eigenproduct,
        DetMethod::NormFactored,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DetMethod::Elimination => "elimination",
            DetMethod::Eigenproduct => "eigenproduct",
            DetMethod::NormFactored => "norm_factored",
        }
    }
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DetMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        DetMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown determinant method `{s}`"))
    }
}

/// Outcome of scanning every nonnegative first row with `0 < sum < n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n: u64,
    pub rows_checked: u64,
    /// Rows whose determinant vanished, in enumeration order.
    pub zero_rows: Vec<Vec<u32>>,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub min_abs_det: BigInt,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub max_abs_det: BigInt,
    /// Rows with `|det| > (sum a_i)^n`; always empty for correct arithmetic.
    pub bound_violations: Vec<Vec<u32>>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.zero_rows.is_empty() && self.bound_violations.is_empty()
    }

    /// Number of rows the scan must visit: `sum_{d=1}^{n-1} C(d+n-1, n-1)`.
    pub fn expected_rows(n: u64) -> u128 {
        (1..n).map(|d| binomial(d + n - 1, n - 1)).sum()
    }
}

/// Checks that every circulant with nonnegative first row and
/// `0 < sum a_i < q` is nonsingular, for prime `q <= 11`.
pub fn nonvanishing_scan(q: u64) -> Result<ScanReport> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    scan(q, DetMethod::NormFactored)
}

/// Same enumeration for any `n <= 11`, prime or not. For composite `n`
/// the report typically lists singular rows.
pub fn nonvanishing_scan_permissive(n: u64) -> Result<ScanReport> {
    if n == 0 {
        return Err(Error::OrderTooSmall { min: 1, got: 0 });
    }
    scan(n, DetMethod::Eigenproduct)
}

fn scan(n: u64, method: DetMethod) -> Result<ScanReport> {
    if n > MAX_SCAN_DIMENSION {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: MAX_SCAN_DIMENSION,
        });
    }
    let rows: Vec<Vec<u32>> = (1..n as u32)
        .flat_map(|d| Compositions::new(n as usize, d))
        .collect();
    let dets = rows
        .par_iter()
        .map(|row| Circulant::from_u32s(row).det(method).map(|d| d.abs()))
        .collect::<Result<Vec<_>>>()?;

    let mut zero_rows = Vec::new();
    let mut bound_violations = Vec::new();
    let mut min_abs: Option<BigInt> = None;
    let mut max_abs = BigInt::zero();
    for (row, det) in rows.iter().zip(&dets) {
        let d: u64 = row.iter().map(|&a| a as u64).sum();
        if det.is_zero() {
            zero_rows.push(row.clone());
        }
        if *det > num_traits::pow(BigInt::from(d), n as usize) {
            bound_violations.push(row.clone());
        }
        if min_abs.as_ref().is_none_or(|m| det < m) {
            min_abs = Some(det.clone());
        }
        if *det > max_abs {
            max_abs = det.clone();
        }
    }
    Ok(ScanReport {
        n,
        rows_checked: rows.len() as u64,
        zero_rows,
        min_abs_det: min_abs.unwrap_or_default(),
        max_abs_det: max_abs,
        bound_violations,
    })
}
