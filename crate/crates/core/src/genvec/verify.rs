use std::collections::HashSet;
use std::fmt;

use super::{GeneratingVector, VectorError};
use crate::groups::{FiniteGroup, Permutation};
use crate::signature::Signature;

/// Result of checking the three generating-vector conditions in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Pass,
    /// Condition 1: the entries generate a proper subgroup.
    NotGenerating {
        subgroup_order: usize,
    },
    /// Condition 2: `c_{position}` (1-based) has the wrong order.
    WrongOrder {
        position: usize,
        expected: u64,
        actual: u64,
    },
    /// Condition 3: the commutator-product is not the identity.
    ProductNotIdentity {
        product: Permutation,
    },
}

impl Verification {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verification::Pass)
    }

    /// The failing condition number, or `None` on success.
    pub fn failed_condition(&self) -> Option<u8> {
        match self {
            Verification::Pass => None,
            Verification::NotGenerating { .. } => Some(1),
            Verification::WrongOrder { .. } => Some(2),
            Verification::ProductNotIdentity { .. } => Some(3),
        }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verification::Pass => f.write_str("pass"),
            Verification::NotGenerating { subgroup_order } => write!(
                f,
                "condition 1 failed: entries generate a proper subgroup of order {subgroup_order}"
            ),
            Verification::WrongOrder {
                position,
                expected,
                actual,
            } => write!(
                f,
                "condition 2 failed: c_{position} has order {actual}, expected {expected}"
            ),
            Verification::ProductNotIdentity { product } => {
                write!(
                    f,
                    "condition 3 failed: product is {product}, not the identity"
                )
            }
        }
    }
}

/// Closure of a set of permutations, computed directly on permutations.
fn generated_order(degree: usize, gens: &[&Permutation]) -> usize {
    let identity = Permutation::identity(degree);
    let mut seen = HashSet::from([identity.clone()]);
    let mut stack = vec![identity];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

/// Checks `vec` against `sig` in `group`.
///
/// Works on the permutations themselves rather than the group's
/// multiplication table, so it can serve as an oracle for the search.
pub fn verify(
    group: &FiniteGroup,
    vec: &GeneratingVector,
    sig: &Signature,
) -> Result<Verification, VectorError> {
    let want_pairs = sig.orbit_genus() as usize;
    if vec.pairs.len() != want_pairs || vec.elliptic.len() != sig.len() {
        return Err(VectorError::ShapeMismatch {
            want_pairs,
            want_elliptic: sig.len(),
            got_pairs: vec.pairs.len(),
            got_elliptic: vec.elliptic.len(),
        });
    }
    let entries = vec.entries();
    if let Some(position) = entries.iter().position(|&id| !group.contains_id(id)) {
        return Err(VectorError::ForeignElement {
            group: group.name().to_string(),
            position,
        });
    }
    let perms: Vec<&Permutation> = entries.iter().map(|&id| group.element(id)).collect();

    let subgroup_order = generated_order(group.degree(), &perms);
    if subgroup_order != group.order() {
        return Ok(Verification::NotGenerating { subgroup_order });
    }

    for (i, (&c, &m)) in vec.elliptic.iter().zip(sig.periods()).enumerate() {
        let actual = group.element(c).order();
        if actual != m {
            return Ok(Verification::WrongOrder {
                position: i + 1,
                expected: m,
                actual,
            });
        }
    }

    let mut product = Permutation::identity(group.degree());
    for &(a, b) in &vec.pairs {
        let (a, b) = (group.element(a), group.element(b));
        product = product
            .then(a)
            .then(b)
            .then(&a.inverse())
            .then(&b.inverse());
    }
    for &c in &vec.elliptic {
        product = product.then(group.element(c));
    }
    if !product.is_identity() {
        return Ok(Verification::ProductNotIdentity { product });
    }
    Ok(Verification::Pass)
}
