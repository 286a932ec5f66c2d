//! Known non-trident asymmetric quartets of the quadrant `0 ≤ m, n ≤ 1000`.
//!
//! All five share the weights `(15, 8, 13, 10)`; they lie in the classes
//! 5, 10, 13, 17 and 20.

use quartets_core::{canonicalize_quartet, Quartet, WaveVector};

/// Domain bound at which the reference quartets were reported.
pub const REFERENCE_BOUND: u64 = 1000;

/// `(k1, k2, k3, k4)`, class index.
pub const REFERENCE_QUARTETS: [([(i64, i64); 4], u64); 5] = [
    ([(495, 90), (64, 128), (359, 118), (200, 100)], 5),
    ([(675, 225), (64, 192), (479, 237), (260, 180)], 10),
    ([(810, 45), (128, 192), (598, 117), (340, 120)], 13),
    ([(855, 360), (64, 256), (599, 356), (320, 260)], 17),
    ([(990, 180), (128, 256), (718, 236), (400, 200)], 20),
];

/// Weights `(γ1, γ2, γ3, γ4)` of every reference quartet in the order listed.
pub const REFERENCE_WEIGHTS: [u64; 4] = [15, 8, 13, 10];

/// Reference quartets, verified and in canonical form, sorted.
pub fn reference_quartets() -> Vec<Quartet> {
    let mut out: Vec<Quartet> = REFERENCE_QUARTETS
        .iter()
        .map(|(vs, _)| {
            let [a, b, c, d] = vs.map(|(m, n)| WaveVector::new(m, n));
            canonicalize_quartet(&Quartet::new(a, b, c, d).expect("reference quartet is resonant"))
        })
        .collect();
    out.sort_unstable();
    out
}
