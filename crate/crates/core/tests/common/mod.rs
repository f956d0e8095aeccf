//! Reference implementations used as oracles. They share no code with the
//! library beyond the plain data types.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Determinant over the rationals by Gaussian elimination with explicit
/// fractions `(num, den)`.
pub fn fraction_det(m: &[Vec<BigInt>]) -> BigInt {
    use num_integer::Integer;
    let n = m.len();
    let mut a: Vec<Vec<(BigInt, BigInt)>> = m
        .iter()
        .map(|r| r.iter().map(|v| (v.clone(), BigInt::one())).collect())
        .collect();
    let mut det = (BigInt::one(), BigInt::one());
    let reduce = |(p, q): (BigInt, BigInt)| {
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q < BigInt::zero() {
            p = -p;
            q = -q;
        }
        (p, q)
    };
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].0.is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            det.0 = -det.0;
        }
        let (pn, pd) = a[k][k].clone();
        det = reduce((&det.0 * &pn, &det.1 * &pd));
        for i in k + 1..n {
            let (fnum, fden) = reduce((&a[i][k].0 * &pd, &a[i][k].1 * &pn));
            for j in k..n {
                let (xn, xd) = a[i][j].clone();
                let (yn, yd) = a[k][j].clone();
                // x - f*y
                let num = &xn * &fden * &yd - &fnum * &yn * &xd;
                let den = &xd * &fden * &yd;
                a[i][j] = reduce((num, den));
            }
        }
    }
    assert!(det.1.is_one());
    det.0
}

/// Sylvester matrix of `f` and `g`, given as low-to-high coefficient lists
/// with nonzero leading coefficients.
pub fn sylvester(f: &[BigInt], g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![BigInt::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            r[i + k] = c.clone();
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![BigInt::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            r[i + k] = c.clone();
        }
        rows.push(r);
    }
    rows
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(f: &[i64], g: &[i64]) -> BigInt {
    let trim = |v: &[i64]| {
        let mut v: Vec<BigInt> = v.iter().map(|&c| BigInt::from(c)).collect();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    };
    let (f, g) = (trim(f), trim(g));
    assert!(!f.is_empty() && !g.is_empty());
    if f.len() == 1 {
        return num_traits::pow(f[0].clone(), g.len() - 1);
    }
    if g.len() == 1 {
        return num_traits::pow(g[0].clone(), f.len() - 1);
    }
    fraction_det(&sylvester(&f, &g))
}

/// Product of `f(w)` over all complex `n`-th roots of unity, in floating
/// point. Good to a few ulps for the small inputs the tests use.
pub fn float_eigen_product(a: &[i64]) -> f64 {
    let n = a.len();
    let mut re = 1.0f64;
    let mut im = 0.0f64;
    for k in 0..n {
        let (mut sr, mut si) = (0.0, 0.0);
        for (j, &c) in a.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64;
            sr += c as f64 * t.cos();
            si += c as f64 * t.sin();
        }
        let (nr, ni) = (re * sr - im * si, re * si + im * sr);
        re = nr;
        im = ni;
    }
    re
}

/// Every weight-`d` composition of length `q`, in no particular order.
pub fn all_compositions(q: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(q: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == q {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=d {
            prefix.push(k);
            go(q, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if q > 0 {
        go(q, d, &mut Vec::new(), &mut out);
    }
    out
}

/// The circulant with first row `a`: entry `(i, j)` is `a[(j - i) mod n]`.
pub fn circulant_rows(a: &[i64]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[(j + n - i) % n]).collect())
        .collect()
}

/// Trial division.
pub fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
