//! Candidate diagonal-group orders for a prime `q`.
//!
//! For a non-weakly-exceptional `D ⋊ C_q` with a semi-invariant orbit of
//! exponent vector `a` and degree `d`, every element of `D` has its
//! scalar-cycle order dividing `d · det M`, where `M` is the circulant
//! with first row `a`. Since `det M = d · Res(Phi_q, f_a)`, each orbit
//! contributes the candidate `n = |Res(Phi_q, f_a)|`, and
//! `D ⊆ C_q × (C_(n d))^(q-1)`. The table lists, per degree, the values of
//! `n` that are not implied by another value of the same degree.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::classify::necklace::{necklace_count, necklaces};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::exactmath::{cyclotomic_poly, factorize, is_prime_u64, resultant, Factorization, IntPoly};

/// Default cap on the number of rotation classes a table may enumerate.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// `|Res(Phi_q, f_a)|`, the norm of `f_a(zeta_q)`; equals `|det M| / d`.
pub fn norm_of_composition(q: u64, a: &Composition) -> Result<BigUint> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    if a.len() as u64 != q {
        return Err(Error::DimensionMismatch {
            expected: q as usize,
            got: a.len(),
        });
    }
    let d = a.weight();
    if d == 0 || d >= q {
        return Err(Error::DegreeOutOfRange { degree: d, q });
    }
    let phi = cyclotomic_poly(q);
    norm_with(&phi, a)
}

fn norm_with(phi: &IntPoly, a: &Composition) -> Result<BigUint> {
    Ok(resultant(phi, &a.symbol())?.abs().magnitude().clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub n: BigUint,
    pub factorization: Factorization,
    pub witness: Composition,
}

impl Serialize for TableEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let factors: Vec<(serde_json_number::Prime, u32)> = self
            .factorization
            .pairs
            .iter()
            .map(|(p, e)| (serde_json_number::Prime(p.clone()), *e))
            .collect();
        let mut st = s.serialize_struct("TableEntry", 3)?;
        st.serialize_field("n", &self.n.to_string())?;
        st.serialize_field("factors", &factors)?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

mod serde_json_number {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Serialize, Serializer};

    /// A prime written as a bare number when it fits in 64 bits, else as a string.
    pub struct Prime(pub BigUint);

    impl Serialize for Prime {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self.0.to_u64() {
                Some(p) => s.serialize_u64(p),
                None => s.serialize_str(&self.0.to_string()),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationTable {
    pub q: u64,
    /// Degree `d` to entries sorted by ascending `n`.
    pub rows: BTreeMap<u64, Vec<TableEntry>>,
}

impl Serialize for ClassificationTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Rows<'a>(&'a BTreeMap<u64, Vec<TableEntry>>);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (d, entries) in self.0 {
                    map.serialize_entry(&d.to_string(), entries)?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("ClassificationTable", 2)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("rows", &Rows(&self.rows))?;
        st.end()
    }
}

impl ClassificationTable {
    pub fn row(&self, d: u64) -> &[TableEntry] {
        self.rows.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, &TableEntry)> {
        self.rows
            .iter()
            .flat_map(|(&d, es)| es.iter().map(move |e| (d, e)))
    }
}

impl fmt::Display for ClassificationTable {
    /// One line per degree: `d=3  n is one of 2^3, 43, 3^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "q={q}: D ⊆ C_{q} × (C_(n·d))^{}",
            self.q - 1,
            q = self.q
        )?;
        for (d, entries) in &self.rows {
            let list: Vec<String> = entries.iter().map(|e| e.factorization.to_string()).collect();
            match list.len() {
                0 => writeln!(f, "d={d}\t(none)")?,
                1 => writeln!(f, "d={d}\tn={}", list[0])?,
                _ => writeln!(f, "d={d}\tn is one of {}", list.join(", "))?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableOptions {
    /// Highest degree to tabulate; `None` means `q - 1`.
    pub max_d: Option<u64>,
    pub budget: u128,
    pub parallel: bool,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            max_d: None,
            budget: DEFAULT_BUDGET,
            parallel: true,
        }
    }
}

pub fn classification_table(q: u64) -> Result<ClassificationTable> {
    classification_table_with(q, TableOptions::default())
}

pub fn classification_table_with(q: u64, opts: TableOptions) -> Result<ClassificationTable> {
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(q));
    }
    if q == 2 {
        return Err(Error::DegreeOutOfRange { degree: 2, q });
    }
    let top = opts.max_d.unwrap_or(q - 1).min(q - 1);
    let mut spent = 0u128;
    for d in 2..=top {
        spent += necklace_count(q, d);
        if spent > opts.budget {
            return Err(Error::BudgetExceeded {
                degree: d,
                classes: spent,
                budget: opts.budget,
            });
        }
    }

    let phi = cyclotomic_poly(q);
    let mut rows = BTreeMap::new();
    for d in 2..=top {
        let reps: Vec<Composition> = necklaces(q, d)?.map(|c| c.representative).collect();
        let norms: Vec<BigUint> = if opts.parallel {
            reps.par_iter()
                .map(|a| norm_with(&phi, a))
                .collect::<Result<_>>()?
        } else {
            reps.iter().map(|a| norm_with(&phi, a)).collect::<Result<_>>()?
        };

        // first witness in enumeration order for each value
        let mut first: HashMap<BigUint, usize> = HashMap::new();
        for (i, n) in norms.into_iter().enumerate() {
            if !n.is_one() {
                first.entry(n).or_insert(i);
            }
        }
        let values: Vec<BigUint> = first.keys().cloned().collect();
        let kept = maximal_under_divisibility(values);

        let factored = |n: BigUint| -> Result<TableEntry> {
            Ok(TableEntry {
                factorization: factorize(&n)?,
                witness: reps[first[&n]].clone(),
                n,
            })
        };
        let mut entries: Vec<TableEntry> = if opts.parallel {
            kept.into_par_iter().map(factored).collect::<Result<_>>()?
        } else {
            kept.into_iter().map(factored).collect::<Result<_>>()?
        };
        entries.sort_by(|a, b| a.n.cmp(&b.n));
        rows.insert(d, entries);
    }
    Ok(ClassificationTable { q, rows })
}

/// Values that divide no other value of the set.
fn maximal_under_divisibility(mut values: Vec<BigUint>) -> Vec<BigUint> {
    values.sort();
    values.dedup();
    if let Some(small) = values.iter().map(|v| v.to_u64()).collect::<Option<Vec<u64>>>() {
        return maximal_u64(&small).into_iter().map(BigUint::from).collect();
    }
    values
        .iter()
        .enumerate()
        .filter(|(i, v)| !values[i + 1..].iter().any(|w| (w % *v) == BigUint::ZERO))
        .map(|(_, v)| v.clone())
        .collect()
}

/// `sorted` is ascending and duplicate-free. For each value either probe
/// its multiples up to the maximum or scan the larger values, whichever
/// is fewer steps.
fn maximal_u64(sorted: &[u64]) -> Vec<u64> {
    let Some(&max) = sorted.last() else {
        return Vec::new();
    };
    let set: HashSet<u64> = sorted.iter().copied().collect();
    sorted
        .iter()
        .enumerate()
        .filter(|&(i, &v)| {
            let larger = &sorted[i + 1..];
            let multiples = max / v;
            let divides_another = if multiples < larger.len() as u64 {
                (2..=multiples).any(|k| set.contains(&(k * v)))
            } else {
                larger.iter().any(|w| w % v == 0)
            };
            !divides_another
        })
        .map(|(_, &v)| v)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(a: &[u32]) -> Composition {
        Composition::new(a.to_vec()).unwrap()
    }

    #[test]
    fn norm_examples() {
        assert_eq!(
            norm_of_composition(7, &comp(&[2, 0, 0, 0, 0, 0, 0])).unwrap(),
            BigUint::from(64u32)
        );
        assert_eq!(
            norm_of_composition(7, &comp(&[1, 1, 0, 0, 0, 0, 0])).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            norm_of_composition(7, &comp(&[1, 2, 0, 0, 0, 0, 0])).unwrap(),
            BigUint::from(43u32)
        );
    }

    #[test]
    fn norm_rejects_bad_input() {
        assert_eq!(
            norm_of_composition(6, &comp(&[1, 0, 0, 0, 0, 0])),
            Err(Error::NotPrime(6))
        );
        assert!(matches!(
            norm_of_composition(3, &comp(&[2, 1, 0])),
            Err(Error::DegreeOutOfRange { degree: 3, q: 3 })
        ));
        assert!(matches!(
            norm_of_composition(3, &comp(&[1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn q3_table() {
        let t = classification_table(3).unwrap();
        assert_eq!(t.rows.len(), 1);
        let row = t.row(2);
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].n, BigUint::from(4u32));
        assert_eq!(row[0].witness.parts(), &[2, 0, 0]);
    }

    #[test]
    fn q5_spot_value() {
        let t = classification_table(5).unwrap();
        assert_eq!(t.rows.keys().copied().collect::<Vec<_>>(), vec![2, 3, 4]);
        assert!(t.row(2).iter().any(|e| e.n == BigUint::from(16u32)));
    }

    #[test]
    fn divisibility_reduction() {
        let v = |xs: &[u64]| xs.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(maximal_under_divisibility(v(&[4, 2, 3, 12, 5])), v(&[5, 12]));
        assert_eq!(maximal_under_divisibility(v(&[7])), v(&[7]));
        assert_eq!(maximal_u64(&[2, 3, 5, 7, 11, 13, 17, 19, 23, 1000]), vec![3, 7, 11, 13, 17, 19, 23, 1000]);
        let big = BigUint::from(u64::MAX) * BigUint::from(3u32);
        assert_eq!(
            maximal_under_divisibility(vec![BigUint::from(3u32), big.clone(), BigUint::from(7u32)]),
            vec![BigUint::from(7u32), big]
        );
    }

    #[test]
    fn budget_guard() {
        let opts = TableOptions {
            budget: 10,
            ..TableOptions::default()
        };
        assert_eq!(
            classification_table_with(7, opts),
            Err(Error::BudgetExceeded {
                degree: 3,
                classes: 4 + 12,
                budget: 10
            })
        );
        assert_eq!(classification_table(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn max_d_truncates() {
        let opts = TableOptions {
            max_d: Some(3),
            ..TableOptions::default()
        };
        let t = classification_table_with(7, opts).unwrap();
        assert_eq!(t.rows.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn json_shape() {
        let opts = TableOptions {
            max_d: Some(2),
            ..TableOptions::default()
        };
        let t = classification_table_with(7, opts).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"q":7,"rows":{"2":[{"n":"64","factors":[[2,6]],"witness":[2,0,0,0,0,0,0]}]}}"#
        );
    }
}
