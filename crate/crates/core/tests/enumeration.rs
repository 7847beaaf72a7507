mod common;

use std::collections::BTreeSet;

use clique_immersion::harness::canon::canonical_code;
use clique_immersion::harness::family::{
    enumerate_all, enumerate_alpha_eq3, enumerate_alpha_le2, enumerate_triangle_free,
};

#[test]
fn all_graphs_match_the_atlas() {
    let atlas = common::atlas();
    for n in 0..=7 {
        let expected: BTreeSet<u64> = atlas.iter().filter(|g| g.n() == n).map(canonical_code).collect();
        let ours: Vec<u64> = enumerate_all(n).unwrap().iter().map(canonical_code).collect();
        assert_eq!(ours.len(), expected.len(), "n = {n}");
        assert_eq!(ours.iter().copied().collect::<BTreeSet<_>>(), expected, "n = {n}");
    }
    assert_eq!(enumerate_all(8).unwrap().len(), 12346);
}

#[test]
fn triangle_free_counts() {
    let counts: Vec<usize> = (1..=9).map(|n| enumerate_triangle_free(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 3, 7, 14, 38, 107, 410, 1897]);
}

#[test]
fn alpha_families_against_the_atlas() {
    let atlas = common::atlas();
    for n in 1..=7 {
        let le2 = enumerate_alpha_le2(n).unwrap();
        assert!(le2.iter().all(|g| g.independence_number() <= 2));
        let expected = atlas.iter().filter(|g| g.n() == n && g.independence_number() <= 2).count();
        assert_eq!(le2.len(), expected, "n = {n}");
        let eq3 = enumerate_alpha_eq3(n).unwrap();
        let expected = atlas.iter().filter(|g| g.n() == n && g.independence_number() == 3).count();
        assert_eq!(eq3.len(), expected, "n = {n}");
    }
}
