use std::collections::BTreeSet;

use quartets_core::oracle::is_verified;
use quartets_core::*;

fn quadrant(d: i64) -> Vec<WaveVector> {
    (0..=d)
        .flat_map(|m| (0..=d).map(move |n| WaveVector::new(m, n)))
        .filter(|v| !v.is_zero())
        .collect()
}

/// Every ordered quadruple, verified one by one.
fn full_scan(d: i64) -> BTreeSet<Quartet> {
    let vs = quadrant(d);
    let mut out = BTreeSet::new();
    for &a in &vs {
        for &b in &vs {
            for &c in &vs {
                for &e in &vs {
                    if let Ok(q) = Quartet::new(a, b, c, e) {
                        out.insert(canonicalize_quartet(&q));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn oracle_matches_full_scan_at_d4() {
    let scanned = full_scan(4);
    let oracle: BTreeSet<Quartet> = brute_force_quartets(4, KindFilter::ALL).unwrap().into_iter().collect();
    assert!(!scanned.is_empty());
    assert_eq!(oracle, scanned);
}

#[test]
fn oracle_and_class_search_agree_on_single_class_quartets() {
    for d in [4u64, 8, 16] {
        let oracle = brute_force_quartets(d, KindFilter::ALL).unwrap();
        let (case1, case2): (Vec<Quartet>, Vec<Quartet>) = oracle.iter().partition(|q| q.class_index().is_some());
        let fast = find_case1_quartets(&build_class_table(d).unwrap(), KindFilter::ALL);
        assert_eq!(fast, case1, "d = {d}");
        assert!(case2.iter().all(|q| q.kind() != ResonanceKind::Asymmetric), "d = {d}");
        assert!(oracle.iter().all(is_verified));
    }
}

#[test]
fn oracle_output_is_sorted_and_unique() {
    let out = brute_force_quartets(8, KindFilter::ALL).unwrap();
    assert!(out.windows(2).all(|w| w[0] < w[1]));
    assert!(out.iter().all(|q| canonicalize_quartet(q) == *q));
}

#[test]
fn oracle_kind_filter() {
    let all = brute_force_quartets(10, KindFilter::ALL).unwrap();
    let sym_only = KindFilter {
        trivial: false,
        symmetric: true,
        asymmetric: false,
    };
    let sym = brute_force_quartets(10, sym_only).unwrap();
    let expected: Vec<Quartet> = all
        .into_iter()
        .filter(|q| q.kind() == ResonanceKind::Symmetric)
        .collect();
    assert_eq!(sym, expected);
}
