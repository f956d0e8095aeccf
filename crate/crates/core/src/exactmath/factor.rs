//! Integer factorization: trial division, then Pollard–Brent rho on the
//! remaining cofactor, with Miller–Rabin certification of the prime parts.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Miller–Rabin with these bases is deterministic below 3.3 * 10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_EXTRA_BASES: [u64; 8] = [43, 47, 53, 59, 61, 67, 71, 73];

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pub pairs: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigUint {
        self.pairs
            .iter()
            .map(|(p, e)| num_traits::pow(p.clone(), *e as usize))
            .product()
    }

    pub fn is_unit(&self) -> bool {
        self.pairs.is_empty()
    }

    fn push(&mut self, p: BigUint) {
        match self.pairs.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => self.pairs.push((p, 1)),
        }
    }
}

impl fmt::Display for Factorization {
    /// `2^6·3^6`, `29·113`, or `1` for the empty factorization.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn factorize(n: &BigUint) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::FactorZero);
    }
    let mut out = Factorization::default();
    let mut rest = n.clone();

    if let Some(mut small) = rest.to_u64() {
        let mut p = 2u64;
        while p <= TRIAL_LIMIT && p * p <= small {
            while small % p == 0 {
                small /= p;
                out.push(BigUint::from(p));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        rest = BigUint::from(small);
    } else {
        let mut p = 2u64;
        while p <= TRIAL_LIMIT {
            let bp = BigUint::from(p);
            if &bp * &bp > rest {
                break;
            }
            while (&rest % p).is_zero() {
                rest /= p;
                out.push(bp.clone());
            }
            p += if p == 2 { 1 } else { 2 };
        }
    }

    if !rest.is_one() {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if is_probable_prime(&m) {
                out.push(m);
            } else {
                let d = pollard_brent(&m);
                stack.push(&m / &d);
                stack.push(d);
            }
        }
    }
    out.pairs.sort();
    debug_assert_eq!(&out.value(), n);
    Ok(out)
}

/// Miller–Rabin; deterministic below 3.3 * 10^24, which covers every value
/// this crate produces for q <= 13.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for p in MR_BASES {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    MR_BASES.iter().chain(MR_EXTRA_BASES.iter()).all(|&a| {
        let a = BigUint::from(a);
        if &a >= n {
            return true;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            return true;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_one {
                return true;
            }
        }
        false
    })
}

/// A nontrivial divisor of the composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let step = |x: &BigUint, c: &BigUint| (x * x + c) % n;
    for c in 1u64.. {
        let c = BigUint::from(c);
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BLOCK: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y, &c);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = step(&y, &c);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += BLOCK;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys, &c);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!()
}
