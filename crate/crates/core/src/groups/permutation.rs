use std::fmt;

use super::GroupError;

/// A bijection on `0..degree`, stored as its image sequence.
///
/// Composition reads left to right: `a.then(b)` applies `a` first.
/// Externally (files, JSON) points are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// From 0-indexed images.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::InvalidPermutation(format!(
                    "{:?} is not a permutation of 0..{n}",
                    images
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// From 1-indexed images, as stored in catalog files.
    pub fn from_one_based(images: &[u32]) -> Result<Self, GroupError> {
        let shifted = images
            .iter()
            .map(|&i| {
                i.checked_sub(1).ok_or_else(|| {
                    GroupError::InvalidPermutation(format!("{images:?} contains point 0"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(shifted).map_err(|_| {
            GroupError::InvalidPermutation(format!(
                "{images:?} is not a permutation of 1..{}",
                images.len()
            ))
        })
    }

    /// From disjoint cycles on 1-indexed points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p == 0 || p as usize > degree || q == 0 || q as usize > degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "cycle {cycle:?} leaves 1..{degree}"
                    )));
                }
                images[p as usize - 1] = q - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn to_one_based(&self) -> Vec<u32> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, exp: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// Concatenates `self` on the first points with `other` shifted after it.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + shift));
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-indexed points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p] as usize;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}
