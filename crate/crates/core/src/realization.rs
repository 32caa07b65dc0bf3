//! Actual signatures relative to a group catalog.
//!
//! A signature counts as realized only with a verified generating vector in
//! a catalog group of the required order. A failed search is reported as
//! absent from the catalog; it becomes "not realizable" only when the caller
//! asserts the catalog is complete for that order.

use std::collections::BTreeSet;
use std::io;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::enumerate_potential;
use crate::genvec::{
    constructions_omnipersistent, search_with, verify, Construction, SearchOptions, SearchOutcome,
    Verification, Witness,
};
use crate::groups::GroupCatalog;
use crate::signature::{Genus, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RealizationStatus {
    Realized,
    AbsentInCatalog,
    /// Every group of the order failed and the catalog was asserted complete
    /// for that order.
    NotRealizable,
    Inconclusive,
}

impl RealizationStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RealizationStatus::Realized => "realized",
            RealizationStatus::AbsentInCatalog => "absent-in-catalog",
            RealizationStatus::NotRealizable => "not-realizable",
            RealizationStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationRecord {
    pub signature: Signature,
    pub genus: Genus,
    pub required_order: u64,
    pub status: RealizationStatus,
    pub witness: Option<Witness>,
    pub groups_examined: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct RealizeOptions {
    /// Orders for which the caller asserts the catalog lists every group.
    pub complete_orders: BTreeSet<u64>,
    pub search: SearchOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationReport {
    pub genus: Genus,
    pub catalog_sources: Vec<String>,
    pub complete_orders: Vec<u64>,
    pub records: Vec<RealizationRecord>,
}

impl RealizationReport {
    pub fn realized(&self) -> impl Iterator<Item = &RealizationRecord> {
        self.records
            .iter()
            .filter(|r| r.status == RealizationStatus::Realized)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Columns `signature,status,group,order`; `group` is empty unless
    /// realized.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(["signature", "status", "group", "order"])?;
        for r in &self.records {
            let group = r.witness.as_ref().map(|w| w.group.as_str()).unwrap_or("");
            writer.write_record([
                r.signature.to_string().as_str(),
                r.status.as_str(),
                group,
                r.required_order.to_string().as_str(),
            ])?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// Searches every catalog group of order `order` for a witness of `sig`.
pub fn realize_in_order(
    sig: &Signature,
    genus: Genus,
    order: u64,
    catalog: &GroupCatalog,
    options: &RealizeOptions,
) -> RealizationRecord {
    let groups = catalog.groups_of_order(order);
    let mut examined = Vec::new();
    let mut inconclusive = false;
    for group in groups {
        examined.push(group.name().to_string());
        let result = search_with(group, sig, options.search);
        match result.outcome {
            SearchOutcome::Found(vector) => {
                assert_eq!(
                    verify(group, &vector, sig),
                    Ok(Verification::Pass),
                    "search returned an invalid vector for {sig} in {}",
                    group.name()
                );
                return RealizationRecord {
                    signature: sig.clone(),
                    genus,
                    required_order: order,
                    status: RealizationStatus::Realized,
                    witness: Some(Witness::new(group, sig, &vector)),
                    groups_examined: examined,
                };
            }
            SearchOutcome::Inconclusive => inconclusive = true,
            SearchOutcome::Absent => {}
        }
    }
    let status = if inconclusive {
        RealizationStatus::Inconclusive
    } else if options.complete_orders.contains(&order) {
        RealizationStatus::NotRealizable
    } else {
        RealizationStatus::AbsentInCatalog
    };
    RealizationRecord {
        signature: sig.clone(),
        genus,
        required_order: order,
        status,
        witness: None,
        groups_examined: examined,
    }
}

/// One record per potential signature of `genus`, in canonical order.
///
/// # Panics
///
/// If a realized signature is not potential, or its witness fails to
/// verify. Both would mean a bug, never bad input.
pub fn actual_relative(
    genus: Genus,
    catalog: &GroupCatalog,
    options: &RealizeOptions,
) -> RealizationReport {
    let potential = enumerate_potential(genus);
    let records: Vec<RealizationRecord> = potential
        .signatures()
        .par_iter()
        .map(|sig| {
            let order = sig
                .required_group_order(genus)
                .expect("potential signature has an order");
            realize_in_order(sig, genus, order, catalog, options)
        })
        .collect();

    for r in records
        .iter()
        .filter(|r| r.status == RealizationStatus::Realized)
    {
        assert!(
            potential.contains(&r.signature) && r.signature.is_potential(genus),
            "realized {} is not potential in genus {genus}",
            r.signature
        );
        let witness = r.witness.as_ref().expect("realized record has a witness");
        let group = catalog
            .groups_of_order(r.required_order)
            .iter()
            .find(|g| g.name() == witness.group)
            .expect("witness group is in the catalog");
        assert_eq!(group.order() as u64, r.required_order);
        let vector = witness.to_vector(group).expect("witness round-trips");
        assert!(verify(group, &vector, &r.signature)
            .map(|v| v.is_pass())
            .unwrap_or(false));
    }

    RealizationReport {
        genus,
        catalog_sources: catalog.sources().to_vec(),
        complete_orders: options.complete_orders.iter().copied().collect(),
        records,
    }
}

/// Verification of one construction at one genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionCheck {
    pub signature: Signature,
    pub group: String,
    pub group_order: u64,
    pub required_order: Option<u64>,
    /// `pass`, or the failing condition.
    pub verification: String,
    pub pass: bool,
}

/// Passes when the vector verifies and the group has the order forced by
/// the signature at `genus`.
pub fn check_construction(c: &Construction, genus: Genus) -> ConstructionCheck {
    let required_order = c.signature.required_group_order(genus);
    let group_order = c.group.order() as u64;
    let verification = match verify(&c.group, &c.vector, &c.signature) {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    };
    let pass = verification == "pass" && required_order == Some(group_order);
    let verification = if verification == "pass" && !pass {
        format!(
            "group order {group_order} differs from required order {}",
            required_order.map_or("none".to_string(), |n| n.to_string())
        )
    } else {
        verification
    };
    ConstructionCheck {
        signature: c.signature.clone(),
        group: c.group.name().to_string(),
        group_order,
        required_order,
        verification,
        pass,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusCheck {
    pub genus: Genus,
    pub checks: Vec<ConstructionCheck>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmnipersistentReport {
    pub genera: Vec<GenusCheck>,
    pub pass: bool,
}

/// Verifies the four every-genus constructions for each `σ` in
/// `min..=max`.
pub fn verify_omnipersistent_actual(min: Genus, max: Genus) -> OmnipersistentReport {
    let genera: Vec<GenusCheck> = (min.value()..=max.value())
        .into_par_iter()
        .map(|s| {
            let genus = Genus::new(s).expect("range starts at a valid genus");
            let checks: Vec<ConstructionCheck> = constructions_omnipersistent(genus)
                .iter()
                .map(|c| check_construction(c, genus))
                .collect();
            let pass = checks.iter().all(|c| c.pass);
            GenusCheck {
                genus,
                checks,
                pass,
            }
        })
        .collect();
    let pass = genera.iter().all(|g| g.pass);
    OmnipersistentReport { genera, pass }
}

/// The genus-2 actual signatures with their tabulated orders as multiples
/// of `σ-1`.
pub const GENUS_TWO_TABLE: [(&str, u64); 20] = [
    ("(2; -)", 1),
    ("(1; 2,2)", 2),
    ("(0; 2,3,8)", 48),
    ("(0; 2,4,6)", 24),
    ("(0; 3,3,4)", 24),
    ("(0; 2,4,8)", 16),
    ("(0; 2,2,2,3)", 12),
    ("(0; 2,6,6)", 12),
    ("(0; 3,4,4)", 12),
    ("(0; 2,5,10)", 10),
    ("(0; 2,2,2,4)", 8),
    ("(0; 2,8,8)", 8),
    ("(0; 4,4,4)", 8),
    ("(0; 2,2,3,3)", 6),
    ("(0; 3,6,6)", 6),
    ("(0; 5,5,5)", 5),
    ("(0; 2,2,2,2,2)", 4),
    ("(0; 2,2,4,4)", 4),
    ("(0; 3,3,3,3)", 3),
    ("(0; 2,2,2,2,2,2)", 2),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub tabulated_order: u64,
    /// Whether the tabulated order equals the order forced at genus 2.
    pub order_consistent: bool,
    pub potential: bool,
    pub record: RealizationRecord,
}

/// Attempts each genus-2 table entry over catalog groups of its tabulated
/// order.
pub fn table2_genus2_check(catalog: &GroupCatalog, options: &RealizeOptions) -> Vec<TableEntry> {
    let genus = Genus::new(2).expect("2 is a genus");
    GENUS_TWO_TABLE
        .par_iter()
        .map(|&(text, multiple)| {
            let sig: Signature = text.parse().expect("table signatures parse");
            let tabulated_order = multiple * genus.euler_excess();
            let record = realize_in_order(&sig, genus, tabulated_order, catalog, options);
            TableEntry {
                tabulated_order,
                order_consistent: sig.required_group_order(genus) == Some(tabulated_order),
                potential: sig.is_potential(genus),
                record,
            }
        })
        .collect()
}
