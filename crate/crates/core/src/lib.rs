//! Exact computations around monomial subgroups `G = D ⋊ C_q` of
//! `SL(q, C)` for prime `q`.
//!
//! * [`exactmath`]: integer polynomials, resultants, Bareiss determinants,
//!   Smith normal form, factorization, cyclotomic polynomials.
//! * [`cyclotomic`]: the ring `Z[zeta_m]`, norms, vanishing sums of roots of unity.
//! * [`circulant`]: circulant determinants by three independent routes.
//! * [`monomial`]: diagonal exponent lattices and the cyclic shift.
//! * [`semiinv`]: semi-invariant orbits and the weak-exceptionality verdict.
//! * [`classify`]: necklace enumeration and the table of candidate orders.
//!
//! ```
//! use weakexc::classify::classification_table;
//!
//! let table = classification_table(7).unwrap();
//! let row: Vec<String> = table.row(3).iter().map(|e| e.factorization.to_string()).collect();
//! assert_eq!(row, ["2^3", "43", "3^6"]);
//! ```

pub mod circulant;
pub mod classify;
pub mod composition;
pub mod cyclotomic;
mod error;
pub mod exactmath;
pub mod monomial;
pub mod semiinv;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};

use num_bigint::{BigInt, BigUint};
use serde::Serializer;

pub(crate) fn serde_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn serde_decimal_unsigned<S: Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
