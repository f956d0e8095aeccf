//! Exact integer and integer-polynomial kernel.

mod factor;
mod matrix;
mod poly;

pub use factor::{factorize, is_probable_prime, Factorization};
pub use matrix::{bareiss_det, smith_normal_form, IntMatrix, SmithForm};
pub use poly::{cyclotomic_poly, poly_mul, resultant, totient, IntPoly};

/// Trial-division primality for word-sized inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// `C(n, k)` as a `u128`; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
