//! Potential and actual signatures of finite group actions on closed
//! Riemann surfaces.
//!
//! * [`signature`]: the characteristic `h - 1 + ½ Σ (1 - 1/m_i)`, the order it
//!   forces, and the potential-signature predicate.
//! * [`enumeration`]: every potential signature of a genus.
//! * [`lattice`]: the divisibility order on potential sets and its empirical
//!   check.
//! * [`groups`]: explicit permutation groups and catalogs of them.
//! * [`genvec`]: generating vectors: verification, search, and explicit
//!   families.
//! * [`realization`]: actual signatures relative to a catalog.

pub mod enumeration;
pub mod genvec;
pub mod groups;
pub mod lattice;
pub mod rational;
pub mod realization;
pub mod signature;

pub use enumeration::{enumerate_potential, intersect_sets, PotentialSignatureSet};
pub use groups::{FiniteGroup, GroupCatalog, Permutation};
pub use rational::ExactRational;
pub use signature::{format_signature, parse_signature, Genus, Signature, SignatureError};
