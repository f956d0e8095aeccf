//! Semi-invariants of `D ⋊ C_q` and the weak-exceptionality verdict.
//!
//! A semi-invariant of degree `d < q` can be taken to be an orbit sum
//! `m + λ τ(m) + ... + λ^(q-1) τ^(q-1)(m)` for a monomial `m` with
//! exponent vector `a`. Such a sum is a semi-invariant for every `λ` with
//! `λ^q = 1` exactly when each generator `b` of `D` scales all `q`
//! monomials of the orbit by the same root of unity, i.e. when the
//! residues `a · shift_i(b) mod m` agree for `i = 0, ..., q-1`. The
//! quotient singularity `C^q / G` fails to be weakly-exceptional iff some
//! orbit of degree below `q` passes that test.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::necklaces;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::monomial::{group_validate, supergroup_index_bound, DiagonalGroup, MonomialGroup};

/// Character exponents of the orbit monomials: for each generator `b`,
/// entry `i` is `sum_j a_j * b_((j+i) mod q) mod m`.
pub fn orbit_characters(d: &DiagonalGroup, a: &Composition) -> Result<Vec<Vec<u64>>> {
    check_dim(d, a)?;
    Ok(d.generators
        .iter()
        .map(|beta| characters_for(d.m, beta, a.parts()))
        .collect())
}

fn characters_for(m: u64, beta: &[u64], a: &[u32]) -> Vec<u64> {
    let q = beta.len();
    (0..q)
        .map(|i| {
            let s: u128 = a
                .iter()
                .enumerate()
                .map(|(j, &aj)| aj as u128 * beta[(j + i) % q] as u128)
                .sum();
            (s % m as u128) as u64
        })
        .collect()
}

fn orbit_is_constant(m: u64, generators: &[Vec<u64>], a: &[u32]) -> Option<Vec<u64>> {
    generators
        .iter()
        .map(|beta| {
            let chars = characters_for(m, beta, a);
            chars.iter().all(|&c| c == chars[0]).then(|| chars[0])
        })
        .collect()
}

fn check_dim(d: &DiagonalGroup, a: &Composition) -> Result<()> {
    if a.len() as u64 != d.q {
        return Err(Error::DimensionMismatch {
            expected: d.q as usize,
            got: a.len(),
        });
    }
    Ok(())
}

pub fn is_semi_invariant_orbit(d: &DiagonalGroup, a: &Composition) -> Result<bool> {
    check_dim(d, a)?;
    Ok(orbit_is_constant(d.m, &d.generators, a.parts()).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiInvariantWitness {
    pub composition: Composition,
    pub degree: u64,
    /// Per generator, the common residue `C` with `a · shift_i(b) ≡ C (mod m)`.
    pub character: Vec<u64>,
}

/// Scans rotation classes of weight `1..=max_degree` in order (weight
/// ascending, then representatives in descending lexicographic order) and
/// returns the first orbit with constant characters.
pub fn find_semi_invariant(
    g: &MonomialGroup,
    max_degree: u64,
) -> Result<Option<SemiInvariantWitness>> {
    let q = g.q();
    if max_degree >= q {
        return Err(Error::DegreeOutOfRange {
            degree: max_degree,
            q,
        });
    }
    let d = g.diagonal();
    for degree in 1..=max_degree {
        let reps: Vec<Composition> = necklaces(q, degree)?.map(|c| c.representative).collect();
        let hit = reps.par_iter().find_map_first(|a| {
            // all-equal exponents would need weight divisible by q
            debug_assert!(a.parts().windows(2).any(|w| w[0] != w[1]));
            orbit_is_constant(d.m, &d.generators, a.parts()).map(|character| {
                SemiInvariantWitness {
                    composition: a.clone(),
                    degree,
                    character,
                }
            })
        });
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    WeaklyExceptional,
    NotWeaklyExceptional { witness: SemiInvariantWitness },
}

impl Verdict {
    pub fn is_weakly_exceptional(&self) -> bool {
        matches!(self, Verdict::WeaklyExceptional)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub q: u64,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub diagonal_order: BigInt,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub group_order: BigInt,
    /// `(q-1)! |G|`, the largest possible order of a monomial group
    /// containing `G` with the same diagonal part.
    #[serde(serialize_with = "crate::serde_decimal")]
    pub supergroup_bound: BigInt,
}

pub fn weak_exceptionality_verdict(g: &MonomialGroup) -> Result<VerdictReport> {
    let q = g.q();
    let verdict = match find_semi_invariant(g, q - 1)? {
        Some(witness) => Verdict::NotWeaklyExceptional { witness },
        None => Verdict::WeaklyExceptional,
    };
    let group_order = g.order();
    Ok(VerdictReport {
        q,
        verdict,
        diagonal_order: g.diagonal_order(),
        supergroup_bound: supergroup_index_bound(q) * &group_order,
        group_order,
    })
}

/// Validates the diagonal data, then decides.
pub fn verdict_for(d: DiagonalGroup) -> Result<VerdictReport> {
    let g = group_validate(d)?;
    weak_exceptionality_verdict(&g)
}
