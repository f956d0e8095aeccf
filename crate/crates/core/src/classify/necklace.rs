use serde::Serialize;

use crate::composition::{is_max_rotation, Composition, Compositions};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, is_prime_u64};

/// One rotation class of weight-`d` compositions of length `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecklaceClass {
    /// Lexicographically greatest member of the class.
    pub representative: Composition,
    pub weight: u64,
    pub class_size: usize,
}

/// `C(d+q-1, q-1) / q`, the class count when rotation acts freely.
pub fn necklace_count(q: u64, d: u64) -> u128 {
    binomial(d + q - 1, q - 1) / q as u128
}

/// Rotation classes of weight-`d` compositions of length `q`, for prime
/// `q` and `0 < d < q`. Classes come out in descending lexicographic
/// order of their representatives.
pub fn necklaces(q: u64, d: u64) -> Result<Necklaces> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    if d == 0 || d >= q {
        return Err(Error::DegreeOutOfRange { degree: d, q });
    }
    Ok(Necklaces {
        inner: Compositions::new(q as usize, d as u32),
        q: q as usize,
        weight: d,
    })
}

#[derive(Debug, Clone)]
pub struct Necklaces {
    inner: Compositions,
    q: usize,
    weight: u64,
}

impl Iterator for Necklaces {
    type Item = NecklaceClass;

    fn next(&mut self) -> Option<NecklaceClass> {
        // a representative starts with its largest part
        let q = self.q;
        let weight = self.weight;
        self.inner
            .by_ref()
            .find(|a| a.iter().all(|&x| x <= a[0]) && is_max_rotation(a))
            .map(|a| NecklaceClass {
                representative: Composition::from_parts_unchecked(a),
                weight,
                class_size: q,
            })
    }
}
