use std::collections::HashSet;

use proptest::prelude::*;

use omnisig::groups::{parse_catalog_file, validate_catalog, FiniteGroup, Permutation};
use omnisig::GroupCatalog;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn composition_is_associative(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
    }

    #[test]
    fn inverse_and_order(a in perm(9)) {
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
        for k in 1..a.order() {
            prop_assert!(!a.pow(k).is_identity());
        }
    }

    #[test]
    fn one_based_round_trip(a in perm(6)) {
        prop_assert_eq!(Permutation::from_one_based(&a.to_one_based()).unwrap(), a);
    }
}

#[test]
fn named_group_orders() {
    let named = GroupCatalog::named();
    let order = |n: &str| named.find(n).unwrap().order();
    assert_eq!(order("S4"), 24);
    assert_eq!(order("A5"), 60);
    assert_eq!(order("PSL(2,7)"), 168);
}

#[test]
fn builtin_family_orders() {
    let catalog = GroupCatalog::builtin();
    for n in 1..=50u64 {
        assert_eq!(catalog.find(&format!("C{n}")).unwrap().order() as u64, n);
        assert_eq!(
            catalog.find(&format!("D{n}")).unwrap().order() as u64,
            2 * n
        );
        assert_eq!(
            catalog.find(&format!("C2xC{n}")).unwrap().order() as u64,
            2 * n
        );
    }
}

#[test]
fn table_agrees_with_permutations() {
    for g in [
        FiniteGroup::dihedral(5).unwrap(),
        GroupCatalog::named().find("S4").unwrap().as_ref().clone(),
    ] {
        let closure: HashSet<&Permutation> = g.elements().iter().collect();
        assert_eq!(closure.len(), g.order());
        for a in g.ids() {
            for b in g.ids() {
                let p = g.element(a).then(g.element(b));
                assert_eq!(g.element(g.mul(a, b)), &p);
            }
            assert_eq!(g.element(g.inv(a)), &g.element(a).inverse());
        }
    }
}

#[test]
fn class_representatives_cover_classes() {
    let s4 = GroupCatalog::named().find("S4").unwrap().clone();
    assert_eq!(s4.conjugacy_class_representatives().len(), 5);
    let a5 = GroupCatalog::named().find("A5").unwrap().clone();
    assert_eq!(a5.conjugacy_class_representatives().len(), 5);
    let psl = GroupCatalog::named().find("PSL(2,7)").unwrap().clone();
    assert_eq!(psl.conjugacy_class_representatives().len(), 6);
    assert_eq!(
        FiniteGroup::dihedral(6)
            .unwrap()
            .conjugacy_class_representatives()
            .len(),
        6
    );
}

#[test]
fn catalog_file_validation() {
    let text = r#"{"groups": [
        {"name": "V4", "order": 4, "degree": 4, "generators": [[2,1,4,3],[3,4,1,2]]},
        {"name": "bad", "order": 5, "degree": 3, "generators": [[2,3,1]]}
    ]}"#;
    let file = parse_catalog_file(text).unwrap();
    let report = validate_catalog(&file);
    assert!(!report.is_valid());
    assert!(report.entries[0].ok());
    assert!(!report.entries[1].ok());
    assert!(parse_catalog_file(r#"{"groups": [], "extra": 1}"#).is_err());
}
