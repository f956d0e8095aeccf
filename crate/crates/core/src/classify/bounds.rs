use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::classify::table::ClassificationTable;
use crate::monomial::supergroup_index_bound;

/// One table entry checked against the cycle-order bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryBound {
    pub d: u64,
    #[serde(serialize_with = "crate::serde_decimal_unsigned")]
    pub n: BigUint,
    /// `n <= d^(q-1)`: every primitive eigenvalue has modulus at most `d`.
    pub within_eigenvalue_bound: bool,
    /// `n == d^(q-1)`.
    pub attains_eigenvalue_bound: bool,
    /// `d^2 n < q^(2q+1)`.
    pub within_cycle_bound: bool,
    /// `q d^2 n <= q^(2q+2)`.
    pub within_order_bound: bool,
    pub witness_is_constant: bool,
}

impl EntryBound {
    pub fn ok(&self) -> bool {
        self.within_eigenvalue_bound && self.within_cycle_bound && self.within_order_bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub q: u64,
    /// `q^(2q+1)`, bound on the scalar-cycle order of an element of `D`.
    #[serde(serialize_with = "crate::serde_decimal_unsigned")]
    pub cycle_bound: BigUint,
    /// `q^(2q+2)`, bound on the order of a cyclic subgroup of `D`.
    #[serde(serialize_with = "crate::serde_decimal_unsigned")]
    pub order_bound: BigUint,
    /// `(q-1)!`
    #[serde(serialize_with = "crate::serde_decimal")]
    pub supergroup_index: BigInt,
    pub entries: Vec<EntryBound>,
}

impl BoundReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(EntryBound::ok)
    }

    /// Equality `n = d^(q-1)` happens exactly for constant witnesses.
    pub fn equality_only_at_constants(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.attains_eigenvalue_bound == e.witness_is_constant)
    }
}

pub fn bound_report(table: &ClassificationTable) -> BoundReport {
    let q = table.q;
    let qb = BigUint::from(q);
    let cycle_bound = num_traits::pow(qb.clone(), (2 * q + 1) as usize);
    let order_bound = &cycle_bound * &qb;
    let entries = table
        .entries()
        .map(|(d, e)| {
            let db = BigUint::from(d);
            let eigen = num_traits::pow(db.clone(), (q - 1) as usize);
            let d2n = &db * &db * &e.n;
            EntryBound {
                d,
                n: e.n.clone(),
                within_eigenvalue_bound: e.n <= eigen,
                attains_eigenvalue_bound: e.n == eigen,
                within_cycle_bound: d2n < cycle_bound,
                within_order_bound: &qb * &d2n <= order_bound,
                witness_is_constant: e.witness.is_constant(),
            }
        })
        .collect();
    BoundReport {
        q,
        cycle_bound,
        order_bound,
        supergroup_index: supergroup_index_bound(q),
        entries,
    }
}
