//! Group catalogs: collections of explicit groups keyed by order, either
//! built in or loaded from JSON files of generators.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use super::permutation::Permutation;
use super::GroupError;

const NAMED_GROUPS: &str = include_str!("../../data/named_groups.json");

/// On-disk catalog: `{"groups": [{"name", "order", "degree", "generators"}]}`
/// with 1-indexed image arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub groups: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub order: u64,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl CatalogEntry {
    /// Builds the group by closure and checks the declared order.
    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup, GroupError> {
        let generators = self
            .generators
            .iter()
            .map(|images| {
                if images.len() != self.degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "generator {images:?} of `{}` has length {}, expected degree {}",
                        self.name,
                        images.len(),
                        self.degree
                    )));
                }
                Permutation::from_one_based(images)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let group = FiniteGroup::from_generators(&self.name, self.degree, &generators, order_cap)?;
        if group.order() as u64 != self.order {
            return Err(GroupError::OrderMismatch {
                name: self.name.clone(),
                declared: self.order,
                computed: group.order() as u64,
            });
        }
        Ok(group)
    }
}

pub fn parse_catalog_file(text: &str) -> Result<CatalogFile, GroupError> {
    serde_json::from_str(text).map_err(|e| GroupError::Schema(e.to_string()))
}

/// Per-entry outcome of [`validate_catalog`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub declared_order: u64,
    pub computed_order: Option<u64>,
    pub error: Option<String>,
}

impl EntryReport {
    pub fn ok(&self) -> bool {
        self.error.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    pub fn is_valid(&self) -> bool {
        self.entries.iter().all(EntryReport::ok)
    }
}

/// Builds every entry and reports declared against computed order, without
/// stopping at the first failure. Duplicate names within one order are
/// reported as errors.
pub fn validate_catalog(file: &CatalogFile) -> CatalogReport {
    let mut names: BTreeMap<u64, Vec<&str>> = BTreeMap::new();
    let entries = file
        .groups
        .iter()
        .map(|entry| {
            let built = entry.build(DEFAULT_ORDER_CAP);
            let computed_order = match &built {
                Ok(g) => Some(g.order() as u64),
                Err(GroupError::OrderMismatch { computed, .. }) => Some(*computed),
                Err(_) => None,
            };
            let mut error = built.err().map(|e| e.to_string());
            let seen = names.entry(entry.order).or_default();
            if error.is_none() && seen.contains(&entry.name.as_str()) {
                error = Some(format!(
                    "duplicate group name `{}` for order {}",
                    entry.name, entry.order
                ));
            }
            seen.push(&entry.name);
            EntryReport {
                name: entry.name.clone(),
                declared_order: entry.order,
                computed_order,
                error,
            }
        })
        .collect();
    CatalogReport { entries }
}

/// Groups keyed by order, with the source each one came from.
#[derive(Clone, Debug, Default)]
pub struct GroupCatalog {
    by_order: BTreeMap<u64, Vec<Arc<FiniteGroup>>>,
    sources: Vec<String>,
}

impl GroupCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a group under its true order. Names must be unique per order.
    pub fn insert(&mut self, group: FiniteGroup) -> Result<(), GroupError> {
        let order = group.order() as u64;
        let bucket = self.by_order.entry(order).or_default();
        if bucket.iter().any(|g| g.name() == group.name()) {
            return Err(GroupError::DuplicateName {
                name: group.name().to_string(),
                order,
            });
        }
        bucket.push(Arc::new(group));
        Ok(())
    }

    /// Adds every group of `other`, keeping its sources.
    pub fn merge(&mut self, other: &GroupCatalog) -> Result<(), GroupError> {
        for groups in other.by_order.values() {
            for g in groups {
                let order = g.order() as u64;
                let bucket = self.by_order.entry(order).or_default();
                if bucket.iter().any(|h| h.name() == g.name()) {
                    return Err(GroupError::DuplicateName {
                        name: g.name().to_string(),
                        order,
                    });
                }
                bucket.push(Arc::clone(g));
            }
        }
        self.sources.extend(other.sources.iter().cloned());
        Ok(())
    }

    pub fn add_source(&mut self, source: impl Into<String>) {
        self.sources.push(source.into());
    }

    pub fn sources(&self) -> &[String] {
        &self.sources
    }

    pub fn groups_of_order(&self, order: u64) -> &[Arc<FiniteGroup>] {
        self.by_order.get(&order).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.by_order.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<FiniteGroup>> {
        self.by_order.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_order.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_order.is_empty()
    }

    pub fn find(&self, name: &str) -> Option<&Arc<FiniteGroup>> {
        self.iter().find(|g| g.name() == name)
    }

    pub fn from_file(file: &CatalogFile, source: impl Into<String>) -> Result<Self, GroupError> {
        let mut catalog = Self::new();
        for entry in &file.groups {
            catalog.insert(entry.build(DEFAULT_ORDER_CAP)?)?;
        }
        catalog.add_source(source);
        Ok(catalog)
    }

    /// The bundled named permutation groups: S4, A5 and PSL(2,7).
    pub fn named() -> Self {
        let file = parse_catalog_file(NAMED_GROUPS).expect("bundled catalog parses");
        Self::from_file(&file, "built-in: named permutation groups")
            .expect("bundled catalog is valid")
    }

    /// Cyclic `C_n` for `n ≤ 100`, dihedral `D_n` for `n ≤ 50`, `C_2 × C_n`
    /// for `n ≤ 50`, and the [named](Self::named) groups.
    pub fn builtin() -> Self {
        static BUILTIN: OnceLock<GroupCatalog> = OnceLock::new();
        BUILTIN
            .get_or_init(|| {
                let mut catalog = Self::new();
                let c2 = FiniteGroup::cyclic(2).expect("n >= 1");
                for n in 1..=100 {
                    catalog
                        .insert(FiniteGroup::cyclic(n).expect("n >= 1"))
                        .expect("unique");
                }
                for n in 1..=50 {
                    catalog
                        .insert(FiniteGroup::dihedral(n).expect("n >= 1"))
                        .expect("unique");
                }
                for n in 1..=50 {
                    let cn = FiniteGroup::cyclic(n).expect("n >= 1");
                    catalog
                        .insert(FiniteGroup::direct_product(&c2, &cn).expect("small product"))
                        .expect("unique");
                }
                catalog.add_source("built-in: C_n (n <= 100), D_n (n <= 50), C_2 x C_n (n <= 50)");
                catalog.merge(&Self::named()).expect("names unique");
                catalog
            })
            .clone()
    }
}

/// Reads and fully validates a catalog file; any invalid entry is an error.
pub fn load_catalog(path: impl AsRef<Path>) -> Result<GroupCatalog, GroupError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let file = parse_catalog_file(&text)?;
    GroupCatalog::from_file(&file, path.display().to_string())
}
