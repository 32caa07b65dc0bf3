mod common;

use rayon::prelude::*;

use omnisig::genvec::{search, verify, SearchOutcome, Verification};
use omnisig::GroupCatalog;

#[test]
fn pruned_search_agrees_with_naive() {
    let catalog = GroupCatalog::builtin();
    let cases = common::order_compatible();
    assert!(cases.len() > 50);
    cases.par_iter().for_each(|(name, sig)| {
        let group = catalog.find(name).unwrap();
        let fast = search(group, sig);
        let slow = common::naive_search(group, sig);
        match (&fast.outcome, &slow) {
            (SearchOutcome::Found(v), Some(_)) => {
                assert_eq!(
                    verify(group, v, sig),
                    Ok(Verification::Pass),
                    "{sig} in {name}"
                )
            }
            (SearchOutcome::Absent, None) => {}
            (outcome, naive) => panic!("{sig} in {name}: search {outcome:?}, naive {naive:?}"),
        }
    });
}
