//! Slow reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use omnisig::genvec::{verify, GeneratingVector, Verification};
use omnisig::groups::{ElemId, FiniteGroup};
use omnisig::{enumerate_potential, ExactRational, Genus, GroupCatalog, Signature};

/// Contribution of a period to `χ`: `(1 - 1/m)/2`.
fn period_term(m: u64) -> ExactRational {
    ExactRational::new(m as i64 - 1, 2 * m as i64).unwrap()
}

/// Potential signatures of genus `sigma` by a sweep over orbit genus, length
/// and non-decreasing periods, without going through group orders.
///
/// Bounds used: `χ ≤ σ-1` and each period adds at least `1/4`, so
/// `h ≤ σ` and `r ≤ 4(σ-h)`. Once the smallest possible final `χ` is
/// positive, every period is bounded by `(σ-1)/χ`, since it must divide the
/// order. Before that, periods are bounded by `84(σ-1)`.
pub fn oracle_potential(sigma: u64) -> BTreeSet<Signature> {
    let excess = ExactRational::from_integer(sigma as i64 - 1);
    let cap = 84 * (sigma - 1);
    let mut out = BTreeSet::new();
    for h in 0..=sigma {
        for r in 0..=4 * (sigma - h) as usize {
            let base = ExactRational::from_integer(h as i64 - 1);
            let mut periods = Vec::with_capacity(r);
            sweep(sigma, &excess, cap, h, r, base, &mut periods, &mut out);
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    sigma: u64,
    excess: &ExactRational,
    cap: u64,
    h: u64,
    r: usize,
    chi: ExactRational,
    periods: &mut Vec<u64>,
    out: &mut BTreeSet<Signature>,
) {
    if periods.len() == r {
        if !chi.is_positive() {
            return;
        }
        let Some(n) = excess.checked_div(&chi) else {
            return;
        };
        if !n.is_integer() {
            return;
        }
        let n = n.to_u64().unwrap();
        if periods.iter().all(|m| n % m == 0) {
            let sig = Signature::new(h, periods.clone()).unwrap();
            assert!(sig.is_potential(Genus::new(sigma).unwrap()));
            out.insert(sig);
        }
        return;
    }
    let start = periods.last().copied().unwrap_or(2);
    let remaining = (r - periods.len() - 1) as i64;
    for m in start..=cap {
        let next = chi.clone() + period_term(m);
        let floor = next.clone() + period_term(m) * ExactRational::from_integer(remaining);
        if floor > *excess {
            break;
        }
        if floor.is_positive() {
            let bound = excess.checked_div(&floor).unwrap();
            if ExactRational::from_integer(m as i64) > bound {
                break;
            }
        }
        periods.push(m);
        sweep(sigma, excess, cap, h, r, next, periods, out);
        periods.pop();
    }
}

/// Every tuple of group elements of the right length, checked with
/// [`verify`]. Returns the first passing vector in lexicographic order.
pub fn naive_search(group: &FiniteGroup, sig: &Signature) -> Option<GeneratingVector> {
    let len = 2 * sig.orbit_genus() as usize + sig.len();
    let ids: Vec<ElemId> = group.ids().collect();
    let n = ids.len();
    let mut digits = vec![0usize; len];
    loop {
        let entries: Vec<ElemId> = digits.iter().map(|&d| ids[d]).collect();
        let v = GeneratingVector::from_entries(sig, &entries);
        if verify(group, &v, sig) == Ok(Verification::Pass) {
            return Some(v);
        }
        let mut i = len;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// `(group, signature)` pairs with `|G| ≤ 16` and `σ ≤ 4` where the
/// signature forces exactly the group's order.
pub fn order_compatible() -> Vec<(String, Signature)> {
    let catalog = GroupCatalog::builtin();
    let mut cases = Vec::new();
    for sigma in 2..=4 {
        let genus = Genus::new(sigma).unwrap();
        for sig in enumerate_potential(genus).iter() {
            let n = sig.required_group_order(genus).unwrap();
            if n > 16 {
                continue;
            }
            for g in catalog.groups_of_order(n) {
                cases.push((g.name().to_string(), sig.clone()));
            }
        }
    }
    cases
}

/// `|G|^len`, the size of the naive search space.
pub fn naive_space(group: &FiniteGroup, sig: &Signature) -> u128 {
    let len = 2 * sig.orbit_genus() as u32 + sig.len() as u32;
    (group.order() as u128).pow(len)
}

/// The genus-2 potential signatures, written out by hand.
pub fn genus_two_list() -> Vec<Signature> {
    GENUS_TWO
        .iter()
        .map(|t| t.parse().expect("list entries parse"))
        .collect()
}

pub const GENUS_TWO: [&str; 34] = [
    "(0; 2,3,7)",
    "(0; 2,3,8)",
    "(0; 2,3,9)",
    "(0; 2,3,10)",
    "(0; 2,3,12)",
    "(0; 2,3,18)",
    "(0; 2,4,5)",
    "(0; 2,4,6)",
    "(0; 2,4,8)",
    "(0; 2,4,12)",
    "(0; 2,5,5)",
    "(0; 2,5,10)",
    "(0; 2,6,6)",
    "(0; 2,8,8)",
    "(0; 3,3,4)",
    "(0; 3,3,5)",
    "(0; 3,3,6)",
    "(0; 3,3,9)",
    "(0; 3,4,4)",
    "(0; 3,6,6)",
    "(0; 4,4,4)",
    "(0; 5,5,5)",
    "(0; 2,2,2,3)",
    "(0; 2,2,2,4)",
    "(0; 2,2,2,6)",
    "(0; 2,2,3,3)",
    "(0; 2,2,4,4)",
    "(0; 3,3,3,3)",
    "(0; 2,2,2,2,2)",
    "(0; 2,2,2,2,2,2)",
    "(1; 2)",
    "(1; 2,2)",
    "(1; 3)",
    "(2; -)",
];
