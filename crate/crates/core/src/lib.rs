//! Exact enumeration of resonant quartets of two-dimensional gravity waves.
//!
//! A quartet of integer wave vectors `k1, k2, k3, k4` is resonant when
//!
//! ```text
//! |k1|^(1/2) + |k2|^(1/2) = |k3|^(1/2) + |k4|^(1/2)
//! k1 + k2 = k3 + k4
//! ```
//!
//! Every nonzero vector `(m, n)` has a unique decomposition
//! `m² + n² = γ⁴ q` with `q` fourth-power-free. The index `q` fixes the
//! irrational part of the frequency `(m² + n²)^(1/4) = γ q^(1/4)` and the
//! weight `γ` its rational multiplier, so all arithmetic here is integer
//! arithmetic: no floating point is used to decide resonance.
//!
//! The crate is `no_std` and only needs `alloc`. IO, parallel drivers and
//! file formats live in the `quartets` companion crate.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;

mod error;
pub use error::Error;

pub mod classes;
pub mod numtheory;
pub mod oracle;
pub mod search;

pub use classes::{
    build_class_table, class_stats, classify_row, classify_vector, weight_bound, within_index_bound, ClassCells,
    ClassStats, ClassTable, ClassedVector, WaveVector,
};
pub use numtheory::{
    factorize, fourth_free_decompose, is_two_square_representable, sieve_primes, two_square_count_from,
    two_square_count_signed, two_square_reps, Factorization, IndexWeight, PrimeTable, TwoSquareRep,
};
pub use oracle::brute_force_quartets;
pub use search::{
    canonicalize_quartet, class_quartets, classify_quartet, find_case1_quartets, find_case1_quartets_bounded,
    generate_tridents, trident, verify_quartet, weight_equation_solutions, KindFilter, PairBucketKey, Quartet,
    RadicalSum, ResonanceKind, Verification,
};

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
