use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::permutation::Permutation;
use super::GroupError;

/// Default limit on the number of elements a generator closure may produce.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// Index of an element in its group's canonical element list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemId(u32);

impl ElemId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct CayleyTable {
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// An explicit permutation group with its full element list.
///
/// Elements are sorted lexicographically by image sequence, so `ElemId(0)`
/// is always the identity. The multiplication table is built on first use.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    degree: usize,
    elements: Vec<Permutation>,
    orders: Vec<u64>,
    generators: Vec<ElemId>,
    table: OnceLock<CayleyTable>,
}

impl FiniteGroup {
    /// Closes `generators` under composition. Fails once the closure grows
    /// beyond `order_cap` elements.
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: &[Permutation],
        order_cap: usize,
    ) -> Result<Self, GroupError> {
        let name = name.into();
        if order_cap == 0 {
            return Err(GroupError::OrderCapExceeded { name, cap: 0 });
        }
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "generator {g} has degree {} in group `{name}` of degree {degree}",
                    g.degree()
                )));
            }
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= order_cap {
                        return Err(GroupError::OrderCapExceeded {
                            name,
                            cap: order_cap,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }

        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        let orders = elements.iter().map(Permutation::order).collect();
        let mut group = Self {
            name,
            degree,
            elements,
            orders,
            generators: Vec::new(),
            table: OnceLock::new(),
        };
        group.generators = generators
            .iter()
            .map(|g| group.index_of(g).expect("generator lies in its closure"))
            .collect();
        Ok(group)
    }

    /// `C_n` acting regularly on `n` points (one point when `n = 1`).
    pub fn cyclic(n: u64) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter(
                "cyclic group needs n >= 1".into(),
            ));
        }
        let n = n as usize;
        let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        let g = Permutation::from_images(images)?;
        Self::from_generators(format!("C{n}"), n, &[g], n)
    }

    /// The dihedral group of order `2n` with generators `[x, y]` satisfying
    /// `x^n = y^2 = (yx)^2 = 1`.
    ///
    /// For `n ≥ 3` it acts on the vertices of an `n`-gon. `D1` is `C2` on two
    /// points (with `x` the identity) and `D2` is the Klein group on four
    /// points.
    pub fn dihedral(n: u64) -> Result<Self, GroupError> {
        let (degree, x, y) = match n {
            0 => {
                return Err(GroupError::InvalidParameter(
                    "dihedral group needs n >= 1".into(),
                ))
            }
            1 => (
                2,
                Permutation::identity(2),
                Permutation::from_cycles(2, &[&[1, 2]])?,
            ),
            2 => (
                4,
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]])?,
                Permutation::from_cycles(4, &[&[1, 3], &[2, 4]])?,
            ),
            _ => {
                let m = n as u32;
                let rotation = (0..m).map(|i| (i + 1) % m).collect();
                let reflection = (0..m).map(|i| (m - i) % m).collect();
                (
                    n as usize,
                    Permutation::from_images(rotation)?,
                    Permutation::from_images(reflection)?,
                )
            }
        };
        Self::from_generators(format!("D{n}"), degree, &[x, y], 2 * n as usize)
    }

    /// `G × H` on the disjoint union of the two point sets. Generators are
    /// those of `G` followed by those of `H`.
    pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Result<Self, GroupError> {
        let id_left = Permutation::identity(left.degree);
        let id_right = Permutation::identity(right.degree);
        let generators: Vec<Permutation> = left
            .generators
            .iter()
            .map(|&g| left.element(g).direct_sum(&id_right))
            .chain(
                right
                    .generators
                    .iter()
                    .map(|&h| id_left.direct_sum(right.element(h))),
            )
            .collect();
        let order = left.order().saturating_mul(right.order());
        Self::from_generators(
            format!("{}x{}", left.name, right.name),
            left.degree + right.degree,
            &generators,
            order,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemId {
        ElemId(0)
    }

    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        (0..self.elements.len() as u32).map(ElemId)
    }

    pub fn element(&self, id: ElemId) -> &Permutation {
        &self.elements[id.index()]
    }

    pub fn contains_id(&self, id: ElemId) -> bool {
        id.index() < self.elements.len()
    }

    pub fn index_of(&self, perm: &Permutation) -> Option<ElemId> {
        if perm.degree() != self.degree {
            return None;
        }
        self.elements
            .binary_search(perm)
            .ok()
            .map(|i| ElemId(i as u32))
    }

    /// The precomputed order of a member element.
    pub fn order_of(&self, id: ElemId) -> u64 {
        self.orders[id.index()]
    }

    /// Order of an arbitrary permutation, which must belong to the group.
    pub fn element_order(&self, perm: &Permutation) -> Result<u64, GroupError> {
        self.index_of(perm)
            .map(|id| self.order_of(id))
            .ok_or_else(|| GroupError::NotInGroup {
                group: self.name.clone(),
                element: perm.to_string(),
            })
    }

    fn table(&self) -> &CayleyTable {
        self.table.get_or_init(|| {
            let n = self.elements.len();
            let mut mul = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    let id = self.index_of(&a.then(b)).expect("group is closed");
                    mul.push(id.0);
                }
            }
            let inv = self
                .elements
                .iter()
                .map(|a| self.index_of(&a.inverse()).expect("group has inverses").0)
                .collect();
            CayleyTable { mul, inv }
        })
    }

    /// Builds the multiplication table now rather than on first product.
    pub fn prepare(&self) {
        self.table();
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let n = self.elements.len();
        ElemId(self.table().mul[a.index() * n + b.index()])
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        ElemId(self.table().inv[a.index()])
    }

    pub fn pow(&self, a: ElemId, exp: u64) -> ElemId {
        let mut result = self.identity();
        let mut base = a;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: ElemId, b: ElemId) -> ElemId {
        let ab = self.mul(a, b);
        let ab_ainv = self.mul(ab, self.inv(a));
        self.mul(ab_ainv, self.inv(b))
    }

    /// `h g h⁻¹`.
    pub fn conjugate(&self, g: ElemId, by: ElemId) -> ElemId {
        self.mul(self.mul(by, g), self.inv(by))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Order of the subgroup generated by `subset`.
    pub fn subgroup_order(&self, subset: &[ElemId]) -> usize {
        self.closure_size(subset, usize::MAX)
    }

    /// Closure size, stopping as soon as it exceeds `stop_above`.
    fn closure_size(&self, subset: &[ElemId], stop_above: usize) -> usize {
        let n = self.elements.len();
        let mut seen = vec![false; n];
        seen[self.identity().index()] = true;
        let mut count = 1;
        let mut queue = vec![self.identity()];
        while let Some(x) = queue.pop() {
            for &g in subset {
                let y = self.mul(x, g);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    count += 1;
                    if count > stop_above {
                        return count;
                    }
                    queue.push(y);
                }
            }
        }
        count
    }

    /// Whether `subset` generates the whole group. A generated subgroup with
    /// more than half the elements is the whole group, so the closure stops
    /// there.
    pub fn generates(&self, subset: &[ElemId]) -> bool {
        let n = self.elements.len();
        n == 1 || self.closure_size(subset, n / 2) > n / 2
    }

    /// The least element (in canonical order) of each conjugacy class.
    pub fn conjugacy_class_representatives(&self) -> Vec<ElemId> {
        let n = self.elements.len();
        let mut assigned = vec![false; n];
        let mut reps = Vec::new();
        for start in self.ids() {
            if assigned[start.index()] {
                continue;
            }
            reps.push(start);
            assigned[start.index()] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &g in &self.generators {
                    let y = self.conjugate(x, g);
                    if !assigned[y.index()] {
                        assigned[y.index()] = true;
                        stack.push(y);
                    }
                }
            }
        }
        reps
    }

    /// Element ids grouped by element order.
    pub fn elements_of_order(&self, order: u64) -> Vec<ElemId> {
        self.ids()
            .filter(|&id| self.order_of(id) == order)
            .collect()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}
