//! Explicit generating vectors for infinite families of actions.

use super::search::{search, SearchOutcome};
use super::{GeneratingVector, VectorError};
use crate::groups::FiniteGroup;
use crate::signature::{Genus, Signature};

/// A group with a signature and a vector claimed to realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub group: FiniteGroup,
    pub signature: Signature,
    pub vector: GeneratingVector,
}

fn sig(h: u64, periods: Vec<u64>) -> Signature {
    Signature::new(h, periods).expect("periods are at least 2")
}

/// `C_{4σ+2} = ⟨g⟩` with `(0; 2, 2σ+1, 4σ+2)` and `(g^{2σ+1}, g^{2σ}, g)`.
pub fn construction_kulkarni(genus: Genus) -> Construction {
    let s = genus.value();
    let group = FiniteGroup::cyclic(4 * s + 2).expect("order is positive");
    let g = group.generators()[0];
    let vector = GeneratingVector::new(
        vec![],
        vec![group.pow(g, 2 * s + 1), group.pow(g, 2 * s), g],
    );
    Construction {
        signature: sig(0, vec![2, 2 * s + 1, 4 * s + 2]),
        vector,
        group,
    }
}

/// `C_2 × C_{2σ+2}` with `(0; 2, 2σ+2, 2σ+2)`; the vector comes from search.
pub fn construction_breuer_abelian(genus: Genus) -> Result<Construction, VectorError> {
    let s = genus.value();
    let c2 = FiniteGroup::cyclic(2).expect("order is positive");
    let cn = FiniteGroup::cyclic(2 * s + 2).expect("order is positive");
    let group = FiniteGroup::direct_product(&c2, &cn).expect("product of small cyclic groups");
    let signature = sig(0, vec![2, 2 * s + 2, 2 * s + 2]);
    let result = search(&group, &signature);
    match result.outcome {
        SearchOutcome::Found(vector) => Ok(Construction {
            group,
            signature,
            vector,
        }),
        SearchOutcome::Absent => Err(VectorError::Absent {
            group: group.name().to_string(),
            signature: signature.to_string(),
        }),
        SearchOutcome::Inconclusive => Err(VectorError::Inconclusive {
            group: group.name().to_string(),
            signature: signature.to_string(),
            nodes: result.nodes,
        }),
    }
}

/// The four actions present in every genus, with `D_n = ⟨x, y⟩`:
///
/// | group          | signature            | vector                              |
/// |----------------|----------------------|-------------------------------------|
/// | `C_{σ-1}`      | `(2; -)`             | `(x, e, x, e)`                      |
/// | `D_{σ-1}`      | `(1; 2,2)`           | `(x, e, y, y)`                      |
/// | `D_{σ-1}`      | `(0; 2,2,2,2,2,2)`   | `(y, y, xy, xy, y, y)`              |
/// | `D_{2(σ-1)}`   | `(0; 2,2,2,2,2)`     | `(xy, xy, y, y x^{σ-1}, x^{σ-1})`   |
pub fn constructions_omnipersistent(genus: Genus) -> [Construction; 4] {
    let n = genus.euler_excess();

    let cyclic = FiniteGroup::cyclic(n).expect("σ-1 >= 1");
    let x = cyclic.generators()[0];
    let e = cyclic.identity();
    let genus_two = Construction {
        vector: GeneratingVector::new(vec![(x, e), (x, e)], vec![]),
        signature: sig(2, vec![]),
        group: cyclic,
    };

    let dihedral = FiniteGroup::dihedral(n).expect("σ-1 >= 1");
    let (x, y) = (dihedral.generators()[0], dihedral.generators()[1]);
    let e = dihedral.identity();
    let xy = dihedral.mul(x, y);
    let torus = Construction {
        vector: GeneratingVector::new(vec![(x, e)], vec![y, y]),
        signature: sig(1, vec![2, 2]),
        group: dihedral.clone(),
    };
    let six = Construction {
        vector: GeneratingVector::new(vec![], vec![y, y, xy, xy, y, y]),
        signature: sig(0, vec![2; 6]),
        group: dihedral,
    };

    let big = FiniteGroup::dihedral(2 * n).expect("2(σ-1) >= 2");
    let (x, y) = (big.generators()[0], big.generators()[1]);
    let xy = big.mul(x, y);
    let half_turn = big.pow(x, n);
    let five = Construction {
        vector: GeneratingVector::new(vec![], vec![xy, xy, y, big.mul(y, half_turn), half_turn]),
        signature: sig(0, vec![2; 5]),
        group: big,
    };

    [genus_two, torus, six, five]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genvec::{verify, Verification};

    fn genus(v: u64) -> Genus {
        Genus::new(v).unwrap()
    }

    #[test]
    fn kulkarni_small_cases() {
        let c = construction_kulkarni(genus(2));
        assert_eq!(c.group.name(), "C10");
        assert_eq!(c.signature.to_string(), "(0; 2,5,10)");
        let g = c.group.generators()[0];
        assert_eq!(
            c.vector.elliptic,
            vec![c.group.pow(g, 5), c.group.pow(g, 4), g]
        );
        let c3 = construction_kulkarni(genus(3));
        assert_eq!(c3.group.order(), 14);
        assert_eq!(c3.signature.to_string(), "(0; 2,7,14)");
    }

    #[test]
    fn kulkarni_verifies() {
        for s in 2..=100 {
            let c = construction_kulkarni(genus(s));
            assert_eq!(
                verify(&c.group, &c.vector, &c.signature),
                Ok(Verification::Pass)
            );
            assert_eq!(
                c.signature.required_group_order(genus(s)),
                Some(c.group.order() as u64)
            );
        }
    }

    #[test]
    fn breuer_verifies() {
        for s in 2..=30 {
            let c = construction_breuer_abelian(genus(s)).unwrap();
            assert_eq!(c.group.order() as u64, 4 * s + 4);
            assert_eq!(
                verify(&c.group, &c.vector, &c.signature),
                Ok(Verification::Pass)
            );
        }
        let c = construction_breuer_abelian(genus(3)).unwrap();
        assert_eq!(c.signature.to_string(), "(0; 2,8,8)");
        assert_eq!(c.group.order(), 16);
    }

    #[test]
    fn omnipersistent_orders() {
        let orders = |s| constructions_omnipersistent(genus(s)).map(|c| c.group.order());
        assert_eq!(orders(2), [1, 2, 2, 4]);
        assert_eq!(orders(7), [6, 12, 12, 24]);
    }

    #[test]
    fn omnipersistent_verify() {
        for s in 2..=40 {
            for c in constructions_omnipersistent(genus(s)) {
                assert_eq!(
                    verify(&c.group, &c.vector, &c.signature),
                    Ok(Verification::Pass),
                    "{} in {} at σ = {s}",
                    c.signature,
                    c.group.name()
                );
                assert_eq!(
                    c.signature.required_group_order(genus(s)),
                    Some(c.group.order() as u64)
                );
            }
        }
    }
}
