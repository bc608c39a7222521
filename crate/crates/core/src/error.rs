use thiserror::Error;

use crate::cover::CoverViolation;
use crate::reptheory::TableViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid cyclotomic order {0}: the order must be positive")]
    InvalidOrder(usize),

    #[error("cyclotomic number {0} is not rational")]
    NotRational(String),

    #[error("cannot express an element of the order-{from} field in the order-{to} field")]
    IncompatibleOrder { from: usize, to: usize },

    #[error("class function does not belong to this character table: {0}")]
    TableMismatch(String),

    #[error("malformed character table: {0}")]
    MalformedTable(String),

    #[error("character table failed validation: {}", join(.0))]
    InvalidTable(Vec<TableViolation>),

    #[error("not a virtual character: {0}")]
    NotAVirtualCharacter(String),

    #[error("inconsistent character table: {0}")]
    InconsistentTable(String),

    #[error("cover data failed validation: {}", join(.0))]
    InvalidCover(Vec<CoverViolation>),

    #[error("inconsistent cover: {0}")]
    InconsistentCover(String),

    #[error("inconsistent local data: {0}")]
    InconsistentData(String),

    #[error("inconsistent bundle descriptor: {0}")]
    InconsistentDescriptor(String),

    #[error("not a representation: {0}")]
    NotARepresentation(String),

    #[error("{name} = {value} is outside the supported range {range}")]
    Domain {
        name: &'static str,
        value: i64,
        range: String,
    },

    #[error("{name} = {value} is not supported: {reason}")]
    UnsupportedRange {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: i64, range: impl Into<String>) -> Self {
        Error::Domain {
            name,
            value,
            range: range.into(),
        }
    }
}
