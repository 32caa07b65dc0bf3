mod common;

use std::collections::BTreeSet;

use omnisig::{enumerate_potential, Genus, Signature};

#[test]
fn genus_two_matches_hand_list() {
    let got: Vec<Signature> = enumerate_potential(Genus::new(2).unwrap())
        .signatures()
        .to_vec();
    let mut want = common::genus_two_list();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn enumerator_matches_sweep() {
    for sigma in 2..=6 {
        let fast: BTreeSet<Signature> = enumerate_potential(Genus::new(sigma).unwrap())
            .iter()
            .cloned()
            .collect();
        let slow = common::oracle_potential(sigma);
        let missing: Vec<_> = slow.difference(&fast).collect();
        let extra: Vec<_> = fast.difference(&slow).collect();
        assert!(
            missing.is_empty() && extra.is_empty(),
            "σ = {sigma}: missing {missing:?}, extra {extra:?}"
        );
    }
}

#[test]
fn enumeration_is_canonically_sorted_without_duplicates() {
    for sigma in [2, 3, 7, 13] {
        let set = enumerate_potential(Genus::new(sigma).unwrap());
        assert!(set.signatures().windows(2).all(|w| w[0] < w[1]));
    }
}
