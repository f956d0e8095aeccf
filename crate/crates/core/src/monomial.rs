//! Finite monomial groups `G = D ⋊ C_q` inside `SL(q, C)`.
//!
//! The diagonal part `D` is stored as a subgroup of `(Z/m)^q`: the exponent
//! vector `b` stands for `diag(zeta_m^b_1, ..., zeta_m^b_q)`. The cyclic
//! part is always the standard shift `e_i -> e_(i+1)`, which conjugates a
//! diagonal element by rotating its exponent vector one place to the
//! right. Scalar matrices are constant exponent vectors.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{is_prime_u64, smith_normal_form, IntMatrix};

/// Groups up to this order are checked for rotation closure by listing
/// their elements; larger ones by lattice membership.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("dimension {0} is not prime")]
    NotPrime(u64),
    #[error("dimension 2 is even; the shift has determinant -1")]
    EvenDimension,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("generator {index} has length {len}, expected {expected}")]
    WrongLength {
        index: usize,
        len: usize,
        expected: usize,
    },
    #[error("generator {index} has residue {residue} outside [0, {modulus})")]
    ResidueOutOfRange {
        index: usize,
        residue: u64,
        modulus: u64,
    },
    #[error("generator {index} has exponent sum {sum}, not divisible by {modulus}")]
    SlViolation { index: usize, sum: u64, modulus: u64 },
    #[error("rotation {witness:?} of a generator lies outside the group")]
    NotRotationClosed { witness: Vec<u64> },
}

/// A finite diagonal subgroup of `SL(q, C)` given by generator exponent
/// vectors over a common modulus `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalGroup {
    pub q: u64,
    pub m: u64,
    pub generators: Vec<Vec<u64>>,
}

impl DiagonalGroup {
    pub fn new(q: u64, m: u64, generators: Vec<Vec<u64>>) -> Self {
        DiagonalGroup { q, m, generators }
    }

    /// Generators given over different moduli, lifted to their lcm.
    /// Each entry is `(modulus, exponents)`; exponents are reduced.
    pub fn from_mixed(q: u64, gens: &[(u64, Vec<u64>)]) -> Result<Self, GroupError> {
        let m = gens.iter().try_fold(1u64, |acc, (mi, _)| {
            if *mi == 0 {
                Err(GroupError::ZeroModulus)
            } else {
                Ok(acc.lcm(mi))
            }
        })?;
        let generators = gens
            .iter()
            .map(|(mi, v)| v.iter().map(|&b| (b % mi) * (m / mi)).collect())
            .collect();
        Ok(DiagonalGroup { q, m, generators })
    }

    /// Structural checks shared by every operation: positive modulus,
    /// vector lengths, reduced residues and the determinant-one condition.
    pub fn check_entries(&self) -> Result<(), GroupError> {
        if self.m == 0 {
            return Err(GroupError::ZeroModulus);
        }
        for (index, g) in self.generators.iter().enumerate() {
            if g.len() as u64 != self.q {
                return Err(GroupError::WrongLength {
                    index,
                    len: g.len(),
                    expected: self.q as usize,
                });
            }
            if let Some(&residue) = g.iter().find(|&&b| b >= self.m) {
                return Err(GroupError::ResidueOutOfRange {
                    index,
                    residue,
                    modulus: self.m,
                });
            }
            let sum = g.iter().fold(0u64, |acc, &b| (acc + b) % self.m);
            if sum != 0 {
                return Err(GroupError::SlViolation {
                    index,
                    sum: g.iter().sum(),
                    modulus: self.m,
                });
            }
        }
        Ok(())
    }

    /// Order of the subgroup of `(Z/m)^q` spanned by the generators.
    pub fn order(&self) -> Result<BigInt, GroupError> {
        self.check_entries()?;
        let index = self.lattice_index();
        Ok(num_traits::pow(BigInt::from(self.m), self.q as usize) / index)
    }

    /// Index of the lattice `<generators, m Z^q>` in `Z^q`.
    fn lattice_index(&self) -> BigInt {
        let snf = smith_normal_form(&self.lattice_matrix(None));
        snf.invariant_factors.iter().product()
    }

    fn lattice_matrix(&self, extra: Option<&[u64]>) -> IntMatrix {
        let q = self.q as usize;
        let k = self.generators.len();
        let extra_rows = usize::from(extra.is_some());
        IntMatrix::from_fn(k + extra_rows + q, q, |i, j| {
            if i < k {
                BigInt::from(self.generators[i][j])
            } else if i < k + extra_rows {
                BigInt::from(extra.unwrap()[j])
            } else if i - k - extra_rows == j {
                BigInt::from(self.m)
            } else {
                BigInt::zero()
            }
        })
    }

    /// Lattice membership: `v` lies in the group iff adjoining it leaves
    /// the index of `<generators, m Z^q>` unchanged.
    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() as u64 != self.q {
            return false;
        }
        let reduced: Vec<u64> = v.iter().map(|&b| b % self.m).collect();
        let snf = smith_normal_form(&self.lattice_matrix(Some(&reduced)));
        let bigger: BigInt = snf.invariant_factors.iter().product();
        bigger == self.lattice_index()
    }

    /// Every element, by breadth-first closure over the generators.
    /// Returns `None` once more than `limit` elements have been found.
    pub fn elements(&self, limit: u64) -> Option<HashSet<Vec<u64>>> {
        let zero = vec![0u64; self.q as usize];
        let mut seen = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y: Vec<u64> = x.iter().zip(g).map(|(a, b)| (a + b) % self.m).collect();
                if seen.insert(y.clone()) {
                    if seen.len() as u64 > limit {
                        return None;
                    }
                    queue.push_back(y);
                }
            }
        }
        Some(seen)
    }

    /// Least `n >= 1` such that `n * beta` is constant mod `m`, i.e. the
    /// least power of the element that is a scalar matrix.
    pub fn element_cycle_order(&self, beta: &[u64]) -> u64 {
        let Some(&first) = beta.first() else {
            return 1;
        };
        let g = beta.iter().fold(self.m, |acc, &b| {
            let diff = (b % self.m + self.m - first % self.m) % self.m;
            acc.gcd(&diff)
        });
        self.m / g
    }

    /// Order of `beta` as an element of `(Z/m)^q`.
    pub fn element_order(&self, beta: &[u64]) -> u64 {
        let g = beta.iter().fold(self.m, |acc, &b| acc.gcd(&(b % self.m)));
        self.m / g
    }

    /// The smallest rotation-invariant group containing this one: the
    /// generators together with all their cyclic rotations.
    pub fn rotation_closure(&self) -> Result<DiagonalGroup, GroupError> {
        self.check_entries()?;
        let mut seen = HashSet::new();
        let mut generators = Vec::new();
        for g in &self.generators {
            for k in 0..g.len() {
                let mut r = g.clone();
                r.rotate_right(k);
                if seen.insert(r.clone()) {
                    generators.push(r);
                }
            }
        }
        Ok(DiagonalGroup {
            q: self.q,
            m: self.m,
            generators,
        })
    }

    /// Whether every generator of `self` lies in `other` (same `q`; moduli may differ
    /// as long as `self.m` divides `other.m`).
    pub fn is_subgroup_of(&self, other: &DiagonalGroup) -> bool {
        if self.q != other.q || !other.m.is_multiple_of(self.m) {
            return false;
        }
        let lift = other.m / self.m;
        self.generators.iter().all(|g| {
            let lifted: Vec<u64> = g.iter().map(|&b| b * lift).collect();
            other.contains(&lifted)
        })
    }

    fn first_unclosed_rotation(&self) -> Option<Vec<u64>> {
        let rotated = |g: &Vec<u64>| {
            let mut r = g.clone();
            r.rotate_right(1);
            r
        };
        let small = self
            .order()
            .ok()
            .is_some_and(|o| o <= BigInt::from(ENUMERATION_LIMIT));
        if small {
            if let Some(elems) = self.elements(ENUMERATION_LIMIT) {
                return self
                    .generators
                    .iter()
                    .map(rotated)
                    .find(|r| !elems.contains(r));
            }
        }
        self.generators
            .iter()
            .map(rotated)
            .find(|r| !self.contains(r))
    }
}

/// A validated `D ⋊ C_q`: `q` an odd prime, `D` diagonal in `SL(q, C)` and
/// normalized by the cyclic shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialGroup {
    diagonal: DiagonalGroup,
}

impl MonomialGroup {
    pub fn diagonal(&self) -> &DiagonalGroup {
        &self.diagonal
    }

    pub fn q(&self) -> u64 {
        self.diagonal.q
    }

    pub fn m(&self) -> u64 {
        self.diagonal.m
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.diagonal.generators
    }

    pub fn diagonal_order(&self) -> BigInt {
        self.diagonal.order().expect("validated")
    }

    /// `|G| = q |D|`
    pub fn order(&self) -> BigInt {
        self.diagonal_order() * BigInt::from(self.q())
    }
}

impl TryFrom<DiagonalGroup> for MonomialGroup {
    type Error = GroupError;

    fn try_from(d: DiagonalGroup) -> Result<Self, GroupError> {
        group_validate(d)
    }
}

pub fn group_validate(candidate: DiagonalGroup) -> Result<MonomialGroup, GroupError> {
    let q = candidate.q;
    if !is_prime_u64(q) {
        return Err(GroupError::NotPrime(q));
    }
    if q == 2 {
        return Err(GroupError::EvenDimension);
    }
    candidate.check_entries()?;
    if let Some(witness) = candidate.first_unclosed_rotation() {
        return Err(GroupError::NotRotationClosed { witness });
    }
    Ok(MonomialGroup {
        diagonal: candidate,
    })
}

pub fn group_order(d: &DiagonalGroup) -> Result<BigInt, GroupError> {
    d.order()
}

pub fn element_cycle_order(d: &DiagonalGroup, beta: &[u64]) -> u64 {
    d.element_cycle_order(beta)
}

pub fn rotation_closure(d: &DiagonalGroup) -> Result<DiagonalGroup, GroupError> {
    d.rotation_closure()
}

/// `(q-1)!`, the bound on `|Γ| / |G|` for a monomial supergroup `Γ` of `G`.
pub fn supergroup_index_bound(q: u64) -> BigInt {
    (1..q).map(BigInt::from).fold(BigInt::one(), |a, b| a * b)
}
