use std::fmt;
use std::str::FromStr;

use omnisig::groups::{load_catalog, FiniteGroup, GroupError};

/// `C:n`, `D:n`, `P:left,right` or `file:path#name`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    File { path: String, name: String },
}

fn positive(text: &str, kind: &str) -> Result<u64, String> {
    match text.trim().parse::<u64>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("{kind} needs a positive integer, got `{text}`")),
    }
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let text = text.trim();
        let (kind, rest) = text.split_once(':').ok_or_else(|| {
            format!("`{text}` is not a group spec (expected C:n, D:n, P:a,b or file:path#name)")
        })?;
        match kind {
            "C" => positive(rest, "C:n").map(GroupSpec::Cyclic),
            "D" => positive(rest, "D:n").map(GroupSpec::Dihedral),
            "P" => rest
                .match_indices(',')
                .find_map(|(i, _)| {
                    let left = rest[..i].parse().ok()?;
                    let right = rest[i + 1..].parse().ok()?;
                    Some(GroupSpec::Product(Box::new(left), Box::new(right)))
                })
                .ok_or_else(|| format!("`{rest}` is not a pair of group specs")),
            "file" => {
                let (path, name) = rest
                    .rsplit_once('#')
                    .filter(|(p, n)| !p.is_empty() && !n.is_empty())
                    .ok_or_else(|| format!("`{rest}` is not of the form path#name"))?;
                Ok(GroupSpec::File {
                    path: path.to_string(),
                    name: name.to_string(),
                })
            }
            other => Err(format!(
                "unknown group kind `{other}` (expected C, D, P or file)"
            )),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Product(a, b) => write!(f, "P:{a},{b}"),
            GroupSpec::File { path, name } => write!(f, "file:{path}#{name}"),
        }
    }
}

impl GroupSpec {
    /// Builds the group; only `file:` specs touch the filesystem.
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Product(a, b) => FiniteGroup::direct_product(&a.build()?, &b.build()?),
            GroupSpec::File { path, name } => {
                let catalog = load_catalog(path)?;
                catalog
                    .find(name)
                    .map(|g| g.as_ref().clone())
                    .ok_or_else(|| GroupError::Schema(format!("no group named `{name}` in {path}")))
            }
        }
    }
}
