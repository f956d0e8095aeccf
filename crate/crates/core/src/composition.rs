//! Exponent vectors `(a_1, ..., a_q)` of monomials `x_1^a_1 ... x_q^a_q`.
//!
//! The same vector doubles as the first row of a circulant matrix and as
//! the coefficient list of its symbol polynomial `f(x) = sum a_(i+1) x^i`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Rejects the all-zero vector (the constant monomial).
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().all(|&a| a == 0) {
            return Err(Error::EmptyComposition);
        }
        Ok(Composition { parts })
    }

    /// `(d, 0, ..., 0)`
    pub fn constant(q: usize, d: u32) -> Self {
        let mut parts = vec![0; q];
        parts[0] = d;
        Composition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&a| a as u64).sum()
    }

    /// Whether the exponent is concentrated in a single coordinate.
    pub fn is_constant(&self) -> bool {
        self.parts.iter().filter(|&&a| a != 0).count() == 1
    }

    /// Shift every coordinate `k` places to the left: entry `i` becomes `a_(i+k)`.
    pub fn rotate_left(&self, k: usize) -> Self {
        let mut parts = self.parts.clone();
        if !parts.is_empty() {
            let k = k % parts.len();
            parts.rotate_left(k);
        }
        Composition { parts }
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn rotations(&self) -> impl Iterator<Item = Composition> + '_ {
        (0..self.parts.len()).map(move |k| self.rotate_left(k))
    }

    /// True when no rotation is lexicographically greater.
    pub fn is_necklace_representative(&self) -> bool {
        is_max_rotation(&self.parts)
    }

    /// The lexicographically greatest rotation.
    pub fn necklace_representative(&self) -> Self {
        self.rotations().max().expect("nonempty composition")
    }

    /// `f(x) = sum a_(i+1) x^i`
    pub fn symbol(&self) -> IntPoly {
        IntPoly::new(self.parts.iter().map(|&a| BigInt::from(a)).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn is_max_rotation(parts: &[u32]) -> bool {
    let n = parts.len();
    let Some(&first) = parts.first() else {
        return true;
    };
    for k in 1..n {
        if parts[k] < first {
            continue;
        }
        let rotated = parts[k..].iter().chain(&parts[..k]);
        if rotated.cmp(parts.iter()) == std::cmp::Ordering::Greater {
            return false;
        }
    }
    true
}

/// All length-`q` compositions of `d` (zero parts allowed), in
/// descending lexicographic order starting from `(d, 0, ..., 0)`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

impl Compositions {
    pub fn new(q: usize, d: u32) -> Self {
        let current = (q > 0).then(|| {
            let mut v = vec![0; q];
            v[0] = d;
            v
        });
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let q = out.len();
        if q >= 2 {
            if let Some(i) = (0..q - 1).rev().find(|&i| out[i] > 0) {
                let mut next = out.clone();
                let tail: u32 = next[i + 1..].iter().sum();
                next[i] -= 1;
                next[i + 1] = tail + 1;
                for x in &mut next[i + 2..] {
                    *x = 0;
                }
                self.current = Some(next);
            }
        }
        Some(out)
    }
}
