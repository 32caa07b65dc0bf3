//! Backtracking search for generating vectors.
//!
//! Conjugating a whole vector preserves all three conditions, so the first
//! entry only ranges over conjugacy-class representatives. Elliptic entries
//! range over elements of the prescribed order. When the vector ends in an
//! elliptic entry it is forced by the product relation; generation is
//! checked last, at the leaves.

use super::GeneratingVector;
use crate::groups::{ElemId, FiniteGroup};
use crate::signature::Signature;

/// Default node budget before a search reports itself inconclusive.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_limit: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(GeneratingVector),
    /// The search space was exhausted without a solution.
    Absent,
    /// The node budget ran out first.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

impl SearchResult {
    pub fn found(&self) -> Option<&GeneratingVector> {
        match &self.outcome {
            SearchOutcome::Found(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    PairFirst,
    PairSecond,
    Elliptic(u64),
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

struct Searcher<'a> {
    group: &'a FiniteGroup,
    slots: Vec<Slot>,
    candidates: Vec<Vec<ElemId>>,
    chosen: Vec<ElemId>,
    nodes: u64,
    limit: u64,
}

impl Searcher<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.limit
    }

    fn accept_leaf(&self) -> bool {
        self.group.generates(&self.chosen)
    }

    /// `prefix` is the product of every completed commutator and elliptic
    /// entry before `depth`.
    fn descend(&mut self, depth: usize, prefix: ElemId) -> Step {
        let g = self.group;
        let len = self.slots.len();
        if depth == len {
            return if prefix == g.identity() && self.accept_leaf() {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        let slot = self.slots[depth];
        if depth + 1 == len {
            if let Slot::Elliptic(m) = slot {
                if !self.tick() {
                    return Step::Aborted;
                }
                let forced = g.inv(prefix);
                if g.order_of(forced) != m {
                    return Step::Exhausted;
                }
                self.chosen.push(forced);
                let ok = self.accept_leaf();
                if !ok {
                    self.chosen.pop();
                }
                return if ok { Step::Found } else { Step::Exhausted };
            }
        }
        for k in 0..self.candidates[depth].len() {
            if !self.tick() {
                return Step::Aborted;
            }
            let x = self.candidates[depth][k];
            let next = match slot {
                Slot::PairFirst => prefix,
                Slot::PairSecond => {
                    let a = *self.chosen.last().expect("pair has a first entry");
                    g.mul(prefix, g.commutator(a, x))
                }
                Slot::Elliptic(_) => g.mul(prefix, x),
            };
            self.chosen.push(x);
            match self.descend(depth + 1, next) {
                Step::Found => return Step::Found,
                Step::Aborted => return Step::Aborted,
                Step::Exhausted => {}
            }
            self.chosen.pop();
        }
        Step::Exhausted
    }
}

/// [`search_with`] under the default node budget.
pub fn search(group: &FiniteGroup, sig: &Signature) -> SearchResult {
    search_with(group, sig, SearchOptions::default())
}

/// Looks for an `(h; m_1, ..., m_r)`-generating vector of `group`.
///
/// Returns the first solution in canonical search order, definitive absence
/// once the space is exhausted, or inconclusive when the node budget runs
/// out.
pub fn search_with(group: &FiniteGroup, sig: &Signature, options: SearchOptions) -> SearchResult {
    let order = group.order() as u64;
    if sig.periods().iter().any(|&m| !order.is_multiple_of(m)) {
        return SearchResult {
            outcome: SearchOutcome::Absent,
            nodes: 0,
        };
    }
    group.prepare();

    let h = sig.orbit_genus() as usize;
    let mut slots = Vec::with_capacity(2 * h + sig.len());
    for _ in 0..h {
        slots.push(Slot::PairFirst);
        slots.push(Slot::PairSecond);
    }
    slots.extend(sig.periods().iter().map(|&m| Slot::Elliptic(m)));

    let all: Vec<ElemId> = group.ids().collect();
    let reps = group.conjugacy_class_representatives();
    let candidates = slots
        .iter()
        .enumerate()
        .map(|(i, slot)| {
            let pool = if i == 0 { &reps } else { &all };
            match *slot {
                Slot::Elliptic(m) => pool
                    .iter()
                    .copied()
                    .filter(|&x| group.order_of(x) == m)
                    .collect(),
                _ => pool.clone(),
            }
        })
        .collect();

    let mut searcher = Searcher {
        group,
        slots,
        candidates,
        chosen: Vec::new(),
        nodes: 0,
        limit: options.node_limit,
    };
    let outcome = match searcher.descend(0, group.identity()) {
        Step::Found => SearchOutcome::Found(GeneratingVector::from_entries(sig, &searcher.chosen)),
        Step::Exhausted => SearchOutcome::Absent,
        Step::Aborted => SearchOutcome::Inconclusive,
    };
    SearchResult {
        outcome,
        nodes: searcher.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genvec::{verify, Verification};
    use crate::groups::GroupCatalog;

    fn sig(text: &str) -> Signature {
        text.parse().unwrap()
    }

    fn assert_found(group: &FiniteGroup, s: &Signature) {
        let result = search(group, s);
        let v = result
            .found()
            .unwrap_or_else(|| panic!("{s} in {}: {:?}", group.name(), result.outcome));
        assert_eq!(verify(group, v, s), Ok(Verification::Pass));
    }

    #[test]
    fn kulkarni_family_found() {
        for genus in 2..=30u64 {
            let c = FiniteGroup::cyclic(4 * genus + 2).unwrap();
            let s = Signature::new(0, vec![2, 2 * genus + 1, 4 * genus + 2]).unwrap();
            assert_found(&c, &s);
        }
    }

    #[test]
    fn dihedral_six_has_no_266() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let result = search(&d6, &sig("(0; 2,6,6)"));
        assert_eq!(result.outcome, SearchOutcome::Absent);
    }

    #[test]
    fn cyclic_ten() {
        assert_found(&FiniteGroup::cyclic(10).unwrap(), &sig("(0; 2,5,10)"));
    }

    #[test]
    fn hurwitz_group() {
        let psl = GroupCatalog::named().find("PSL(2,7)").unwrap().clone();
        assert_found(&psl, &sig("(0; 2,3,7)"));
    }

    #[test]
    fn genus_two_cases() {
        assert_found(&FiniteGroup::cyclic(1).unwrap(), &sig("(2; -)"));
        assert_found(&FiniteGroup::cyclic(3).unwrap(), &sig("(2; -)"));
        assert_found(&FiniteGroup::dihedral(3).unwrap(), &sig("(1; 2,2)"));
    }

    #[test]
    fn indivisible_period_is_absent_without_search() {
        let result = search(&FiniteGroup::cyclic(12).unwrap(), &sig("(0; 2,5,10)"));
        assert_eq!(
            result,
            SearchResult {
                outcome: SearchOutcome::Absent,
                nodes: 0
            }
        );
    }

    #[test]
    fn node_limit_gives_inconclusive() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let result = search_with(&d6, &sig("(0; 2,6,6)"), SearchOptions { node_limit: 3 });
        assert_eq!(result.outcome, SearchOutcome::Inconclusive);
        let full = search(&d6, &sig("(0; 2,6,6)"));
        assert!(full.nodes > 3);
    }

    #[test]
    fn deterministic() {
        let g = FiniteGroup::dihedral(8).unwrap();
        let s = sig("(0; 2,2,2,4)");
        assert_eq!(search(&g, &s), search(&g, &s));
    }
}
