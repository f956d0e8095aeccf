//! The guide in `book/src`, compiled so its snippets run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/cyclotomic.md")]
mod cyclotomic {}
#[doc = include_str!("../../../book/src/circulants.md")]
mod circulants {}
#[doc = include_str!("../../../book/src/monomial-groups.md")]
mod monomial_groups {}
#[doc = include_str!("../../../book/src/semi-invariants.md")]
mod semi_invariants {}
#[doc = include_str!("../../../book/src/classification-table.md")]
mod classification_table {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
