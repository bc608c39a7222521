//! Character tables and the representation ring.

mod class_function;
mod table;
mod virtual_rep;

pub use class_function::ClassFunction;
pub use table::{CharacterTable, ConjugacyClass, Irreducible, TableViolation};
pub use virtual_rep::VirtualRep;

use crate::scalar::Scalar;

/// Free-function form of [`CharacterTable::validate`].
pub fn validate_table<Q: Scalar>(table: &CharacterTable<Q>) -> Vec<TableViolation> {
    table.validate()
}
