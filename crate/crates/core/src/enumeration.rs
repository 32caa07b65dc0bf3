//! Exhaustive enumeration of the potential signatures of a genus.
//!
//! Candidates are organized by the group order `N`. Every period divides `N`,
//! so after scaling the Riemann-Hurwitz relation by `N` the search becomes an
//! integer subset-sum over the divisors of `N`:
//!
//! ```text
//! Σ (N - N/m_i) = 2(σ-1) - 2(h-1)N
//! ```
//!
//! Each term lies in `[N/2, N-1]`, which bounds both the number of periods and
//! the backtracking depth.

use std::collections::BTreeSet;
use std::io;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::signature::{Genus, Signature, SignatureError};

/// The full set of potential signatures for one genus, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialSignatureSet {
    genus: Genus,
    signatures: Vec<Signature>,
}

impl PotentialSignatureSet {
    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn signatures(&self) -> &[Signature] {
        &self.signatures
    }

    pub fn len(&self) -> usize {
        self.signatures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signatures.is_empty()
    }

    pub fn contains(&self, sig: &Signature) -> bool {
        self.signatures.binary_search(sig).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Signature> {
        self.signatures.iter()
    }

    /// Whether every member of `self` is also a member of `other`.
    pub fn is_subset(&self, other: &PotentialSignatureSet) -> bool {
        self.signatures.iter().all(|s| other.contains(s))
    }

    /// Export rows carrying the required group order of each member.
    pub fn records(&self) -> Vec<SignatureRecord> {
        self.signatures
            .iter()
            .map(|s| SignatureRecord {
                h: s.orbit_genus(),
                periods: s.periods().to_vec(),
                required_order: s
                    .required_group_order(self.genus)
                    .expect("member of a potential set has an order"),
            })
            .collect()
    }

    /// One signature per line in the signature text grammar.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.signatures {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records()).expect("records serialize")
    }

    /// CSV with header `h,r,periods,required_order`; periods are
    /// semicolon-joined.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(["h", "r", "periods", "required_order"])?;
        for rec in self.records() {
            let periods = rec
                .periods
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(";");
            writer.write_record([
                rec.h.to_string(),
                rec.periods.len().to_string(),
                periods,
                rec.required_order.to_string(),
            ])?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is ascii")
    }
}

impl<'a> IntoIterator for &'a PotentialSignatureSet {
    type Item = &'a Signature;
    type IntoIter = std::slice::Iter<'a, Signature>;
    fn into_iter(self) -> Self::IntoIter {
        self.signatures.iter()
    }
}

/// One row of the JSON export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureRecord {
    pub h: u64,
    pub periods: Vec<u64>,
    pub required_order: u64,
}

impl SignatureRecord {
    pub fn signature(&self) -> Result<Signature, SignatureError> {
        Signature::new(self.h, self.periods.clone())
    }
}

/// Parses the JSON array written by [`PotentialSignatureSet::to_json`].
pub fn parse_json_records(text: &str) -> serde_json::Result<Vec<SignatureRecord>> {
    serde_json::from_str(text)
}

fn divisors_from_two(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small.retain(|&d| d >= 2);
    small
}

/// All signatures with required order exactly `order` at genus `genus`.
fn signatures_of_order(genus: Genus, order: u64) -> Vec<Signature> {
    let excess = genus.euler_excess();
    let divisors = divisors_from_two(order);
    let mut found = Vec::new();
    let mut h = 0u64;
    // N(h-1) <= σ-1
    while h <= 1 || order * (h - 1) <= excess {
        // integer target 2(σ-1) - 2(h-1)N, computed without going negative
        let target = if h == 0 {
            Some(2 * excess + 2 * order)
        } else {
            (2 * excess).checked_sub(2 * (h - 1) * order)
        };
        match target {
            Some(0) => {
                if h >= 2 {
                    found.push(Signature::from_sorted(h, Vec::new()));
                }
            }
            Some(t) => {
                let mut current = Vec::new();
                fill_periods(order, &divisors, 0, t, &mut current, &mut |periods| {
                    found.push(Signature::from_sorted(h, periods.to_vec()));
                });
            }
            None => break,
        }
        h += 1;
    }
    found
}

/// Backtracks over non-decreasing divisor multisets whose terms `N - N/m`
/// sum exactly to `remaining`.
fn fill_periods(
    order: u64,
    divisors: &[u64],
    start: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for (i, &m) in divisors.iter().enumerate().skip(start) {
        let term = order - order / m;
        if term > remaining {
            // terms grow with m
            break;
        }
        let max_term = order - order / divisors[divisors.len() - 1];
        // the rest is k more terms, each in [term, max_term]
        let k_min = remaining.div_ceil(max_term);
        let k_max = remaining / term;
        if k_min > k_max {
            continue;
        }
        current.push(m);
        fill_periods(order, divisors, i, remaining - term, current, emit);
        current.pop();
    }
}

/// Enumerates every potential signature of `genus`.
///
/// Orders `N = 1..=84(σ-1)` are searched independently and merged, so the
/// result does not depend on scheduling.
///
/// # Panics
///
/// If `genus` exceeds [`crate::signature::MAX_GENUS`].
pub fn enumerate_potential(genus: Genus) -> PotentialSignatureSet {
    assert!(
        genus.value() <= crate::signature::MAX_GENUS,
        "genus {genus} above supported maximum"
    );
    let per_order: Vec<Vec<Signature>> = (1..=genus.hurwitz_bound())
        .into_par_iter()
        .map(|n| signatures_of_order(genus, n))
        .collect();
    let mut signatures: Vec<Signature> = per_order.into_iter().flatten().collect();
    signatures.sort_unstable();
    // the order is determined by (signature, σ), so no signature can come
    // out of two different order buckets
    assert!(
        signatures.windows(2).all(|w| w[0] != w[1]),
        "signature emitted for two different group orders"
    );
    PotentialSignatureSet { genus, signatures }
}

/// Multiway intersection of potential sets, in canonical order.
///
/// # Panics
///
/// If `sets` is empty.
pub fn intersect_sets(sets: &[&PotentialSignatureSet]) -> Vec<Signature> {
    let (first, rest) = sets.split_first().expect("at least one set");
    first
        .iter()
        .filter(|s| rest.iter().all(|set| set.contains(s)))
        .cloned()
        .collect()
}

/// Union of potential sets as an ordered set.
pub fn union_sets(sets: &[&PotentialSignatureSet]) -> BTreeSet<Signature> {
    sets.iter().flat_map(|set| set.iter().cloned()).collect()
}
