//! Enumeration of semi-invariant orbit shapes and the per-prime table of
//! candidate diagonal-group orders.

mod bounds;
mod necklace;
mod table;

pub use bounds::{bound_report, BoundReport, EntryBound};
pub use necklace::{necklace_count, necklaces, NecklaceClass, Necklaces};
pub use table::{
    classification_table, classification_table_with, norm_of_composition, ClassificationTable,
    TableEntry, TableOptions, DEFAULT_BUDGET,
};
