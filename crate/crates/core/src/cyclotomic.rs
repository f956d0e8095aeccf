//! Exact arithmetic in the cyclotomic integers `Z[zeta_m]`, field norms, and
//! vanishing sums of roots of unity.
//!
//! Elements are stored as their canonical residue modulo `Phi_m`, a vector
//! of `phi(m)` integer coefficients. Two elements are equal exactly when
//! their coefficient vectors are, so testing for zero is a syntactic check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, cyclotomic_poly, resultant, totient, IntPoly};

/// Largest number of candidate multisets [`vanishing_sum_search`] will visit.
pub const SEARCH_BOUND: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// Reduces `sum raw[i] * zeta_m^i` to canonical form. `raw` may have any length.
    pub fn new(order: u64, raw: &[BigInt]) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_poly(order);
        let reduced = IntPoly::new(raw.to_vec()).rem_monic(&phi);
        Self::from_reduced(order, reduced)
    }

    pub fn from_i64s(order: u64, raw: &[i64]) -> Self {
        let raw: Vec<BigInt> = raw.iter().map(|&c| BigInt::from(c)).collect();
        Self::new(order, &raw)
    }

    fn from_reduced(order: u64, p: IntPoly) -> Self {
        let len = totient(order) as usize;
        let mut coeffs = p.into_coeffs();
        debug_assert!(coeffs.len() <= len);
        coeffs.resize(len, BigInt::zero());
        CyclotomicInt { order, coeffs }
    }

    pub fn zero(order: u64) -> Self {
        Self::from_reduced(order, IntPoly::zero())
    }

    pub fn from_integer(order: u64, c: BigInt) -> Self {
        Self::from_reduced(order, IntPoly::constant(c))
    }

    /// `zeta_m^k`
    pub fn zeta_pow(order: u64, k: u64) -> Self {
        let k = (k % order) as usize;
        Self::new(order, &IntPoly::monomial(BigInt::from(1), k).into_coeffs())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The element as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    /// The canonical representative as a polynomial of degree below `phi(m)`.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(CyclotomicInt {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let prod = &self.to_poly() * &other.to_poly();
        Ok(Self::from_reduced(
            self.order,
            prod.rem_monic(&cyclotomic_poly(self.order)),
        ))
    }

    /// Field norm from `Q(zeta_m)` down to `Q`, as `Res(Phi_m, rep(x))`.
    pub fn norm(&self) -> BigInt {
        resultant(&cyclotomic_poly(self.order), &self.to_poly())
            .expect("cyclotomic polynomials are nonzero")
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string().replace('x', &format!("ζ{}", self.order));
        write!(f, "{s}")
    }
}

pub fn cyc_make(order: u64, raw: &[BigInt]) -> CyclotomicInt {
    CyclotomicInt::new(order, raw)
}

pub fn cyc_mul(x: &CyclotomicInt, y: &CyclotomicInt) -> Result<CyclotomicInt> {
    x.mul(y)
}

pub fn cyc_norm(x: &CyclotomicInt) -> BigInt {
    x.norm()
}

/// Distinct prime divisors of `m`, ascending.
pub fn prime_divisors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Whether `n` roots of unity of order dividing `m` can sum to zero.
///
/// Decided as a coin problem: `n` must be a nonnegative integer
/// combination of the distinct primes dividing `m`.
pub fn w_membership(n: u64, m: u64) -> Result<bool> {
    if m < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: m });
    }
    let primes = prime_divisors(m);
    let n = n as usize;
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for i in 1..=n {
        reachable[i] = primes
            .iter()
            .any(|&p| (p as usize) <= i && reachable[i - p as usize]);
    }
    Ok(reachable[n])
}

/// A multiset of exponents whose `m`-th roots of unity sum to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingWitness {
    pub order: u64,
    /// Sorted ascending, each in `[0, order)`.
    pub exponents: Vec<u64>,
}

impl VanishingWitness {
    /// The sum of the roots, computed in `Z[zeta_m]`.
    pub fn sum(&self) -> CyclotomicInt {
        let mut raw = vec![BigInt::zero(); self.order as usize];
        for &e in &self.exponents {
            raw[e as usize] += 1;
        }
        CyclotomicInt::new(self.order, &raw)
    }
}

/// Exhaustive search over multisets of `n` exponents mod `m` for a
/// vanishing sum. Multisets are visited as nondecreasing sequences in
/// lexicographic order, so the first hit is the lexicographically least
/// witness.
pub fn vanishing_sum_search(n: u64, m: u64) -> Result<Option<VanishingWitness>> {
    if m < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: m });
    }
    let candidates = binomial(n + m - 1, n);
    if candidates > SEARCH_BOUND {
        return Err(Error::SearchBoundExceeded {
            candidates,
            bound: SEARCH_BOUND,
        });
    }
    // images of zeta^k in the power basis mod Phi_m, as machine integers
    let basis: Vec<Vec<i64>> = (0..m)
        .map(|k| {
            CyclotomicInt::zeta_pow(m, k)
                .coeffs()
                .iter()
                .map(|c| c.to_i64().expect("reduced powers of zeta have small coefficients"))
                .collect()
        })
        .collect();
    let width = totient(m) as usize;
    let mut acc = vec![0i64; width];
    let mut picked = Vec::with_capacity(n as usize);
    let found = search(&basis, n as usize, 0, &mut acc, &mut picked);
    Ok(found.then_some(VanishingWitness {
        order: m,
        exponents: picked,
    }))
}

fn search(
    basis: &[Vec<i64>],
    remaining: usize,
    start: usize,
    acc: &mut [i64],
    picked: &mut Vec<u64>,
) -> bool {
    if remaining == 0 {
        return acc.iter().all(|&c| c == 0);
    }
    for k in start..basis.len() {
        for (a, b) in acc.iter_mut().zip(&basis[k]) {
            *a += b;
        }
        picked.push(k as u64);
        if search(basis, remaining - 1, k, acc, picked) {
            return true;
        }
        picked.pop();
        for (a, b) in acc.iter_mut().zip(&basis[k]) {
            *a -= b;
        }
    }
    false
}
