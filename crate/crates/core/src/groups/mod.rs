//! Explicit finite groups realized as permutation groups.

mod catalog;
mod group;
mod permutation;

use thiserror::Error;

pub use catalog::{
    load_catalog, parse_catalog_file, validate_catalog, CatalogEntry, CatalogFile, CatalogReport,
    EntryReport, GroupCatalog,
};
pub use group::{ElemId, FiniteGroup, DEFAULT_ORDER_CAP};
pub use permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),
    #[error("closure of `{name}` exceeds the order cap of {cap} elements")]
    OrderCapExceeded { name: String, cap: usize },
    #[error(
        "group `{name}` declares order {declared} but its generators close to order {computed}"
    )]
    OrderMismatch {
        name: String,
        declared: u64,
        computed: u64,
    },
    #[error("duplicate group name `{name}` for order {order}")]
    DuplicateName { name: String, order: u64 },
    #[error("{element} is not an element of `{group}`")]
    NotInGroup { group: String, element: String },
    #[error("catalog schema violation: {0}")]
    Schema(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}
