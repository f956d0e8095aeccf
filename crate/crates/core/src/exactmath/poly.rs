//! Dense univariate polynomials over the integers.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The last stored coefficient is
/// never zero; the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(BigInt::one(), n);
        if n == 0 {
            return Self::zero();
        }
        p.coeffs[0] = -BigInt::one();
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Long division `self = q * divisor + r` over the integers.
    ///
    /// Returns `None` when some step needs a non-integral quotient
    /// coefficient (always succeeds for monic divisors).
    pub fn div_rem(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (c, r) = rem[k].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * dc;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        debug_assert!(modulus.leading_coeff().is_some_and(One::is_one));
        self.div_rem(modulus)
            .expect("division by a monic polynomial is exact")
            .1
    }

    /// Pseudo-remainder: the remainder of `lc(divisor)^(deg self - deg divisor + 1) * self`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo-division by zero");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        for top in (dd..=ds).rev() {
            let c = std::mem::take(&mut rem[top]);
            for r in rem.iter_mut().take(top) {
                *r *= lead;
            }
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (j, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[shift + j] -= &c * dc;
            }
        }
        rem.truncate(dd);
        Self::new(rem)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        poly_mul(self, rhs)
    }
}

pub fn poly_mul(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() || g.is_zero() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::zero(); f.coeffs.len() + g.coeffs.len() - 1];
    for (i, a) in f.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    IntPoly::new(out)
}

/// `Res(f, g) = lc(f)^deg(g) * prod g(alpha)` over the roots `alpha` of `f`.
///
/// Computed with the subresultant pseudo-remainder sequence, so every
/// intermediate stays integral. `Res(f, 0) = 0`; for constant `f = c`
/// the result is `c^deg(g)`.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    let Some(dg) = g.degree() else {
        return Ok(BigInt::zero());
    };
    if df == 0 {
        return Ok(num_traits::pow(f.coeffs[0].clone(), dg));
    }
    if dg == 0 {
        return Ok(num_traits::pow(g.coeffs[0].clone(), df));
    }

    let cf = f.content();
    let cg = g.content();
    let scale = num_traits::pow(cf.clone(), dg) * num_traits::pow(cg.clone(), df);
    let mut a = f.div_exact_scalar(&cf);
    let mut b = g.div_exact_scalar(&cg);
    let mut negate = false;
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            negate = true;
        }
    }

    let mut sg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &sg * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.div_exact_scalar(&divisor);
        sg = a.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            1 => sg.clone(),
            _ => num_traits::pow(sg.clone(), delta) / num_traits::pow(h, delta - 1),
        };
        if b.degree() == Some(0) {
            break;
        }
    }
    let da = a.degree().unwrap();
    let lb = b.leading_coeff().unwrap().clone();
    let tail = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
    let res = scale * tail;
    Ok(if negate { -res } else { res })
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `m`-th cyclotomic polynomial, by exact division of `x^m - 1` by
/// every `Phi_d` with `d | m`, `d < m`. Results are memoized.
///
/// Panics if `m == 0`.
pub fn cyclotomic_poly(m: u64) -> Arc<IntPoly> {
    assert!(m >= 1, "cyclotomic polynomial order must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return Arc::clone(p);
    }
    let mut num = IntPoly::x_pow_minus_one(m as usize);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi_d = cyclotomic_poly(d);
        let (q, r) = num.div_rem(&phi_d).expect("cyclotomic divisors are monic");
        debug_assert!(r.is_zero());
        num = q;
    }
    let p = Arc::new(num);
    cyclotomic_cache()
        .lock()
        .unwrap()
        .entry(m)
        .or_insert_with(|| Arc::clone(&p));
    p
}

/// Euler's totient, the degree of `Phi_m`.
pub fn totient(m: u64) -> u64 {
    let mut n = m;
    let mut out = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}
