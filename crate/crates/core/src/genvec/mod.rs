//! Generating vectors `(a_1, b_1, ..., a_h, b_h, c_1, ..., c_r)`.
//!
//! A vector is a witness for signature `(h; m_1, ..., m_r)` in `G` when it
//! generates `G`, each `c_i` has order `m_i`, and
//! `[a_1,b_1]···[a_h,b_h]·c_1···c_r = 1` with `[a,b] = a b a⁻¹ b⁻¹`, read
//! left to right.

mod constructions;
mod search;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{ElemId, FiniteGroup, Permutation};
use crate::signature::Signature;

pub use constructions::{
    construction_breuer_abelian, construction_kulkarni, constructions_omnipersistent, Construction,
};
pub use search::{
    search, search_with, SearchOptions, SearchOutcome, SearchResult, DEFAULT_NODE_LIMIT,
};
pub use verify::{verify, Verification};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VectorError {
    #[error("vector has {got_pairs} pairs and {got_elliptic} elliptic entries, signature needs {want_pairs} and {want_elliptic}")]
    ShapeMismatch {
        want_pairs: usize,
        want_elliptic: usize,
        got_pairs: usize,
        got_elliptic: usize,
    },
    #[error("entry {position} is not an element of `{group}`")]
    ForeignElement { group: String, position: usize },
    #[error("witness is for group `{witness}`, not `{group}`")]
    GroupMismatch { witness: String, group: String },
    #[error("search for {signature} in `{group}` was inconclusive after {nodes} nodes")]
    Inconclusive {
        group: String,
        signature: String,
        nodes: u64,
    },
    #[error("{signature} has no generating vector in `{group}`")]
    Absent { group: String, signature: String },
}

/// Hyperbolic pairs `(a_i, b_i)` followed by elliptic elements `c_j`, as
/// element ids of one group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratingVector {
    pub pairs: Vec<(ElemId, ElemId)>,
    pub elliptic: Vec<ElemId>,
}

impl GeneratingVector {
    pub fn new(pairs: Vec<(ElemId, ElemId)>, elliptic: Vec<ElemId>) -> Self {
        Self { pairs, elliptic }
    }

    /// Entries in written order `a_1, b_1, ..., c_r`.
    pub fn entries(&self) -> Vec<ElemId> {
        self.pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(self.elliptic.iter().copied())
            .collect()
    }

    /// Rebuilds a vector of the given shape from a flat entry list.
    pub fn from_entries(sig: &Signature, entries: &[ElemId]) -> Self {
        let h = sig.orbit_genus() as usize;
        assert_eq!(entries.len(), 2 * h + sig.len());
        let pairs = entries[..2 * h].chunks(2).map(|p| (p[0], p[1])).collect();
        Self::new(pairs, entries[2 * h..].to_vec())
    }

    /// Every entry replaced by `by · entry · by⁻¹`.
    pub fn conjugated(&self, group: &FiniteGroup, by: ElemId) -> Self {
        let c = |x| group.conjugate(x, by);
        Self {
            pairs: self.pairs.iter().map(|&(a, b)| (c(a), c(b))).collect(),
            elliptic: self.elliptic.iter().map(|&x| c(x)).collect(),
        }
    }
}

/// Serializable witness with permutations as 1-indexed image arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub group: String,
    pub signature: Signature,
    pub vector: WitnessVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessVector {
    pub pairs: Vec<[Vec<u32>; 2]>,
    pub elliptic: Vec<Vec<u32>>,
}

impl Witness {
    pub fn new(group: &FiniteGroup, signature: &Signature, vector: &GeneratingVector) -> Self {
        let img = |id: ElemId| group.element(id).to_one_based();
        Self {
            group: group.name().to_string(),
            signature: signature.clone(),
            vector: WitnessVector {
                pairs: vector
                    .pairs
                    .iter()
                    .map(|&(a, b)| [img(a), img(b)])
                    .collect(),
                elliptic: vector.elliptic.iter().map(|&c| img(c)).collect(),
            },
        }
    }

    /// Maps the stored permutations back to element ids of `group`.
    pub fn to_vector(&self, group: &FiniteGroup) -> Result<GeneratingVector, VectorError> {
        if self.group != group.name() {
            return Err(VectorError::GroupMismatch {
                witness: self.group.clone(),
                group: group.name().to_string(),
            });
        }
        let mut position = 0;
        let mut lookup = |images: &Vec<u32>| {
            let id = Permutation::from_one_based(images)
                .ok()
                .and_then(|p| group.index_of(&p))
                .ok_or_else(|| VectorError::ForeignElement {
                    group: group.name().to_string(),
                    position,
                });
            position += 1;
            id
        };
        let mut pairs = Vec::new();
        for [a, b] in &self.vector.pairs {
            let a = lookup(a)?;
            let b = lookup(b)?;
            pairs.push((a, b));
        }
        let elliptic = self
            .vector
            .elliptic
            .iter()
            .map(&mut lookup)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GeneratingVector::new(pairs, elliptic))
    }
}
