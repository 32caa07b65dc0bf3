//! The divisibility order on potential-signature sets.
//!
//! Genus-level operations are pure gcd/lcm arithmetic on `σ-1`. The
//! set-level checks in [`verify_lattice`] re-derive the same facts from full
//! enumerations.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumeration::{enumerate_potential, intersect_sets, union_sets, PotentialSignatureSet};
use crate::signature::{Genus, Signature};

/// Default ceiling for [`verify_lattice`].
pub const DEFAULT_MAX_VERIFY_GENUS: u64 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("max genus {requested} exceeds the verification limit {limit}")]
    GuardExceeded { requested: u64, limit: u64 },
    #[error("max genus must be at least 2, got {0}")]
    TooSmall(u64),
    #[error("join of genera {0} and {1} overflows")]
    Overflow(u64, u64),
}

/// `P_σ ⊆ P_σ'` exactly when `(σ-1) | (σ'-1)`.
pub fn contains_genus(sigma: Genus, sigma_prime: Genus) -> bool {
    sigma_prime
        .euler_excess()
        .is_multiple_of(sigma.euler_excess())
}

/// The genus whose potential set is `P_σ ∩ P_σ'`.
pub fn meet_genus(sigma: Genus, sigma_prime: Genus) -> Genus {
    let g = sigma.euler_excess().gcd(&sigma_prime.euler_excess());
    Genus::new(g + 1).expect("gcd is at least 1")
}

/// The least genus whose potential set contains both `P_σ` and `P_σ'`.
pub fn join_genus(sigma: Genus, sigma_prime: Genus) -> Result<Genus, LatticeError> {
    let (a, b) = (sigma.euler_excess(), sigma_prime.euler_excess());
    (a / a.gcd(&b))
        .checked_mul(b)
        .and_then(|l| l.checked_add(1))
        .map(|v| Genus::new(v).expect("lcm is at least 1"))
        .ok_or(LatticeError::Overflow(sigma.value(), sigma_prime.value()))
}

/// `(0; 2, 2σ+1, 4σ+2)`: potential at `σ`, and potential at `σ'` only when
/// `(σ-1) | (σ'-1)`.
pub fn witness_non_containment(sigma: Genus) -> Signature {
    let s = sigma.value();
    Signature::new(0, vec![2, 2 * s + 1, 4 * s + 2]).expect("periods are at least 2")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Containment,
    Meet,
    Join,
    ConsecutiveIntersection,
}

/// Outcome of one empirical check. `matches` is true exactly when
/// `counterexamples` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub kind: ClaimKind,
    pub genera: (u64, u64),
    /// For containment: `σ'` when containment is predicted, otherwise absent.
    pub predicted_genus: Option<u64>,
    pub matches: bool,
    pub counterexamples: Vec<Signature>,
}

impl LatticeReport {
    fn new(
        kind: ClaimKind,
        genera: (Genus, Genus),
        predicted_genus: Option<Genus>,
        counterexamples: Vec<Signature>,
    ) -> Self {
        Self {
            kind,
            genera: (genera.0.value(), genera.1.value()),
            predicted_genus: predicted_genus.map(Genus::value),
            matches: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

fn symmetric_difference(a: &[Signature], b: &[Signature]) -> Vec<Signature> {
    let a: BTreeSet<&Signature> = a.iter().collect();
    let b: BTreeSet<&Signature> = b.iter().collect();
    a.symmetric_difference(&b).map(|s| (*s).clone()).collect()
}

fn check_containment(p: &PotentialSignatureSet, q: &PotentialSignatureSet) -> LatticeReport {
    let (s, t) = (p.genus(), q.genus());
    if contains_genus(s, t) {
        let missing = p.iter().filter(|x| !q.contains(x)).cloned().collect();
        LatticeReport::new(ClaimKind::Containment, (s, t), Some(t), missing)
    } else {
        // the witness must separate the two sets
        let w = witness_non_containment(s);
        let bad = if p.contains(&w) && !q.contains(&w) {
            Vec::new()
        } else {
            vec![w]
        };
        LatticeReport::new(ClaimKind::Containment, (s, t), None, bad)
    }
}

fn check_meet(
    p: &PotentialSignatureSet,
    q: &PotentialSignatureSet,
    meet: &PotentialSignatureSet,
    kind: ClaimKind,
) -> LatticeReport {
    let both = intersect_sets(&[p, q]);
    let diff = symmetric_difference(&both, meet.signatures());
    LatticeReport::new(kind, (p.genus(), q.genus()), Some(meet.genus()), diff)
}

fn check_join(p: &PotentialSignatureSet, q: &PotentialSignatureSet, join: Genus) -> LatticeReport {
    let missing = union_sets(&[p, q])
        .into_iter()
        .filter(|s| !s.is_potential(join))
        .collect();
    LatticeReport::new(ClaimKind::Join, (p.genus(), q.genus()), Some(join), missing)
}

/// Checks every lattice claim for all pairs `2 ≤ σ, σ' ≤ max_genus` by full
/// enumeration, refusing above [`DEFAULT_MAX_VERIFY_GENUS`].
pub fn verify_lattice(max_genus: u64) -> Result<Vec<LatticeReport>, LatticeError> {
    verify_lattice_with_limit(max_genus, DEFAULT_MAX_VERIFY_GENUS)
}

/// [`verify_lattice`] with an explicit guard.
///
/// Reports come out grouped by kind: ordered-pair containment, unordered
/// meet, unordered join, then consecutive pairs `(n, n+1)`. Join genera may
/// lie beyond `max_genus`, so union members are tested against the join
/// genus with the potential predicate instead of a second enumeration.
pub fn verify_lattice_with_limit(
    max_genus: u64,
    limit: u64,
) -> Result<Vec<LatticeReport>, LatticeError> {
    if max_genus < 2 {
        return Err(LatticeError::TooSmall(max_genus));
    }
    if max_genus > limit {
        return Err(LatticeError::GuardExceeded {
            requested: max_genus,
            limit,
        });
    }
    let genera: Vec<Genus> = (2..=max_genus).map(|v| Genus::new(v).unwrap()).collect();

    for &a in &genera {
        for &b in &genera {
            join_genus(a, b)?;
        }
    }
    let sets: BTreeMap<Genus, PotentialSignatureSet> = genera
        .par_iter()
        .copied()
        .map(|g| (g, enumerate_potential(g)))
        .collect();

    let pairs: Vec<(Genus, Genus)> = genera
        .iter()
        .flat_map(|&a| genera.iter().map(move |&b| (a, b)))
        .collect();

    let mut reports: Vec<LatticeReport> = pairs
        .par_iter()
        .map(|&(a, b)| check_containment(&sets[&a], &sets[&b]))
        .collect();
    let unordered: Vec<(Genus, Genus)> = pairs.iter().copied().filter(|(a, b)| a <= b).collect();
    reports.extend(
        unordered
            .par_iter()
            .map(|&(a, b)| {
                check_meet(
                    &sets[&a],
                    &sets[&b],
                    &sets[&meet_genus(a, b)],
                    ClaimKind::Meet,
                )
            })
            .collect::<Vec<_>>(),
    );
    reports.extend(
        unordered
            .par_iter()
            .map(|&(a, b)| {
                let j = join_genus(a, b).expect("checked above");
                check_join(&sets[&a], &sets[&b], j)
            })
            .collect::<Vec<_>>(),
    );
    let bottom = Genus::new(2).unwrap();
    reports.extend(genera.windows(2).map(|w| {
        check_meet(
            &sets[&w[0]],
            &sets[&w[1]],
            &sets[&bottom],
            ClaimKind::ConsecutiveIntersection,
        )
    }));
    Ok(reports)
}
