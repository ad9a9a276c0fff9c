mod common;

use kzmc_core::tournament::{delete_team, enumerate_families, insert_team, segments};
use kzmc_core::LabelSet;

#[test]
fn enumeration_matches_exhaustive_search() {
    for n in 2..=5 {
        let mut listed: Vec<Vec<LabelSet>> = enumerate_families(LabelSet::range(n))
            .unwrap()
            .iter()
            .map(|f| {
                let mut m = f.members().to_vec();
                m.sort();
                m
            })
            .collect();
        listed.sort();
        let brute: Vec<_> = common::brute_force_families(n).into_iter().collect();
        assert_eq!(listed, brute, "n = {n}");
    }
}

#[test]
fn deletion_inverts_insertion() {
    for f in enumerate_families(LabelSet::range(5)).unwrap() {
        for seg in segments(&f) {
            let ins = insert_team(&f, 5, seg).unwrap();
            let (back, where_) = delete_team(&ins.family, 5).unwrap();
            assert_eq!((back, where_), (f.clone(), seg));
        }
    }
}

#[test]
fn counts_and_insertions() {
    assert!(common::criterion_1().is_ok());
    common::criterion_3().unwrap();
    common::criterion_9().unwrap();
}
