use proptest::prelude::*;
use quartets_core::*;

/// Largest `g` with `g⁴ | n`, by direct search.
fn largest_fourth_root_divisor(n: u64) -> u64 {
    let mut best = 1;
    let mut g = 1u64;
    while g.pow(4) <= n {
        if n % g.pow(4) == 0 {
            best = g;
        }
        g += 1;
    }
    best
}

fn reps_by_scan(n: u64) -> Vec<TwoSquareRep> {
    let mut out = Vec::new();
    let mut a = 0u64;
    while 2 * a * a <= n {
        let mut b = a;
        while a * a + b * b < n {
            b += 1;
        }
        if a * a + b * b == n {
            out.push(TwoSquareRep { a, b });
        }
        a += 1;
    }
    out
}

/// The eight images of a quartet under swaps within and between pairs.
fn symmetry_images(q: &Quartet) -> Vec<[WaveVector; 4]> {
    let [a, b, c, d] = q.vectors();
    let mut out = Vec::new();
    for (x, y) in [(a, b), (b, a)] {
        for (z, w) in [(c, d), (d, c)] {
            out.push([x, y, z, w]);
            out.push([z, w, x, y]);
        }
    }
    out
}

proptest! {
    #[test]
    fn decomposition_round_trips(n in 1u64..2_000_000_000_000) {
        let iw = fourth_free_decompose(n).unwrap();
        prop_assert_eq!(iw.value(), n);
        prop_assert!(factorize(iw.q).is_fourth_power_free());
    }

    #[test]
    fn decomposition_weight_is_largest_fourth_root_divisor(n in 1u64..5_000_000) {
        prop_assert_eq!(fourth_free_decompose(n).unwrap().gamma, largest_fourth_root_divisor(n));
    }

    #[test]
    fn decomposition_scales_with_fourth_powers(n in 1u64..1_000_000, t in 1u64..40) {
        let base = fourth_free_decompose(n).unwrap();
        let scaled = fourth_free_decompose(n * t.pow(4)).unwrap();
        prop_assert_eq!(scaled.q, base.q);
        prop_assert_eq!(scaled.gamma, base.gamma * t);
    }

    #[test]
    fn factorization_reconstructs(n in 1u64..10_000_000_000) {
        let f = factorize(n);
        prop_assert_eq!(f.value(), n);
        prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert!(f.factors().iter().all(|&(p, e)| e >= 1 && factorize(p).factors() == [(p, 1)]));
    }

    #[test]
    fn two_square_reps_agree_with_scan_and_criterion(n in 1u64..200_000) {
        let reps = two_square_reps(n);
        prop_assert_eq!(&reps, &reps_by_scan(n));
        prop_assert_eq!(!reps.is_empty(), is_two_square_representable(n));
        let from_reps: u64 = reps.iter().map(TwoSquareRep::signed_multiplicity).sum();
        prop_assert_eq!(two_square_count_signed(n), from_reps);
    }

    #[test]
    fn verifier_invariant_under_reflection(
        coords in prop::array::uniform8(-60i64..60),
    ) {
        let v: Vec<WaveVector> = coords.chunks(2).map(|c| WaveVector::new(c[0], c[1])).collect();
        prop_assume!(v.iter().all(|x| !x.is_zero()));
        let r = verify_quartet(v[0], v[1], v[2], v[3]).unwrap();
        let flip = |x: WaveVector| WaveVector::new(-x.m, x.n);
        let f = verify_quartet(flip(v[0]), flip(v[1]), flip(v[2]), flip(v[3])).unwrap();
        prop_assert_eq!(r.resonance_ok, f.resonance_ok);
        prop_assert_eq!(r.momentum_ok, f.momentum_ok);
        prop_assert_eq!(r.kind, f.kind);
    }

    #[test]
    fn classification_is_exclusive_on_tridents(s in 1u64..30, t in 1u64..30) {
        let q = trident(s, t).unwrap();
        prop_assert_eq!(classify_quartet(&q), Ok(q.kind()));
        let c = canonicalize_quartet(&q);
        for image in symmetry_images(&q) {
            let [a, b, x, y] = image;
            prop_assert_eq!(canonicalize_quartet(&Quartet::new(a, b, x, y).unwrap()), c);
        }
    }
}

#[test]
fn two_square_criterion_exhaustive_to_100k() {
    for n in 1..=100_000u64 {
        assert_eq!(
            !two_square_reps(n).is_empty(),
            is_two_square_representable(n),
            "n = {n}"
        );
    }
}

#[test]
fn class_table_invariants() {
    for d in [1u64, 2, 3, 7, 25, 60] {
        let table = build_class_table(d).unwrap();
        assert_eq!(table.vector_count() as u64, (d + 1) * (d + 1) - 1, "d = {d}");
        let bound = weight_bound(d);
        let mut seen = std::collections::BTreeSet::new();
        for (iw, v) in table.iter() {
            assert!(seen.insert(v), "{v} stored twice");
            assert_eq!(classify_vector(v).unwrap().index_weight, iw);
            assert!(iw.gamma <= bound);
            let mirrored = WaveVector::new(v.n, v.m);
            assert!(table.cell(iw.q, iw.gamma).contains(&mirrored));
        }
        for (_, cells) in table.classes() {
            for vs in cells.values() {
                assert!(vs.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}

#[test]
fn scaling_by_square_multiplies_weight() {
    let d = 80i64;
    for m in 0..=20 {
        for n in 0..=20 {
            if m == 0 && n == 0 {
                continue;
            }
            let base = classify_vector(WaveVector::new(m, n)).unwrap().index_weight;
            for t in 1..=4i64 {
                if t * t * m > d || t * t * n > d {
                    continue;
                }
                let scaled = classify_vector(WaveVector::new(t * t * m, t * t * n))
                    .unwrap()
                    .index_weight;
                assert_eq!(
                    scaled,
                    IndexWeight {
                        q: base.q,
                        gamma: base.gamma * t as u64
                    }
                );
            }
        }
    }
}

#[test]
fn search_is_sound_up_to_200() {
    let table = build_class_table(200).unwrap();
    let all = find_case1_quartets(&table, KindFilter::ALL);
    assert!(!all.is_empty());
    for q in &all {
        let [a, b, c, d] = q.vectors();
        let r = verify_quartet(a, b, c, d).unwrap();
        assert!(r.resonance_ok && r.momentum_ok, "{q}");
        assert_eq!(r.kind, Some(q.kind()));
        let w = q.weights();
        assert_eq!(w[0] + w[1], w[2] + w[3]);
        assert!(q.class_index().is_some());
        if q.kind() == ResonanceKind::Trivial {
            let n = q.index_weights().map(|iw| iw.value());
            assert_eq!(n[0].min(n[1]), n[2].min(n[3]));
            assert_eq!(n[0].max(n[1]), n[2].max(n[3]));
        }
    }
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn canonical_form_fixed_under_symmetries() {
    let table = build_class_table(64).unwrap();
    let all = find_case1_quartets(&table, KindFilter::ALL);
    for q in all.iter().step_by(97) {
        for [a, b, c, d] in symmetry_images(q) {
            assert_eq!(canonicalize_quartet(&Quartet::new(a, b, c, d).unwrap()), *q);
        }
    }
}

#[test]
fn tridents_verify_for_small_parameters() {
    for s in 1..=20u64 {
        let quartets = generate_tridents(s..=s, 1..=s).unwrap();
        for (t, q) in (1..=s).zip(&quartets) {
            let [a, b, c, d] = q.vectors();
            let r = verify_quartet(a, b, c, d).unwrap();
            assert!(r.resonance_ok && r.momentum_ok);
            assert_eq!(q.class_index(), Some(1));
            let base = s * s + t * t;
            assert_eq!(q.weights(), [base + s * t, base - s * t, base, base]);
        }
    }
}
