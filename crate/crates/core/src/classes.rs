//! Wave vectors, their classes, and the per-class lookup table.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::numtheory::{fourth_free_decompose, IndexWeight};
use crate::{Error, Result};

/// Integer wave vector `(m, n)`.
///
/// Ordered lexicographically by `(m, n)`. Norms are computed in `u64`, so
/// coordinates must stay below `2³¹` in absolute value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WaveVector {
    /// first component
    pub m: i64,
    /// second component
    pub n: i64,
}

impl WaveVector {
    /// Vector `(m, n)`.
    pub const fn new(m: i64, n: i64) -> Self {
        WaveVector { m, n }
    }

    /// `m² + n²`, the square of the Euclidean length.
    pub fn norm_sq(&self) -> u64 {
        let m = self.m.unsigned_abs();
        let n = self.n.unsigned_abs();
        m * m + n * n
    }

    /// Whether this is `(0, 0)`.
    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.n == 0
    }
}

impl From<(i64, i64)> for WaveVector {
    fn from((m, n): (i64, i64)) -> Self {
        WaveVector { m, n }
    }
}

impl core::ops::Add for WaveVector {
    type Output = WaveVector;
    fn add(self, rhs: WaveVector) -> WaveVector {
        WaveVector::new(self.m + rhs.m, self.n + rhs.n)
    }
}

impl fmt::Display for WaveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A wave vector together with its norm and class coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassedVector {
    /// the vector itself
    pub vector: WaveVector,
    /// `m² + n²`
    pub norm_sq: u64,
    /// `(q, γ)` with `γ⁴ q = norm_sq`
    pub index_weight: IndexWeight,
}

/// Assign a nonzero vector to its class.
pub fn classify_vector(v: WaveVector) -> Result<ClassedVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let norm_sq = v.norm_sq();
    let index_weight = fourth_free_decompose(norm_sq)?;
    Ok(ClassedVector {
        vector: v,
        norm_sq,
        index_weight,
    })
}

/// Vectors of one class, grouped by weight `γ`.
pub type ClassCells = BTreeMap<u64, Vec<WaveVector>>;

/// All nonzero vectors of the quadrant `0 ≤ m, n ≤ d`, grouped by index
/// and then by weight. Cells hold vectors in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    domain_bound: u64,
    classes: BTreeMap<u64, ClassCells>,
}

impl ClassTable {
    /// Assemble a table from already classified vectors, in any order.
    pub fn from_classified<I>(domain_bound: u64, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = ClassedVector>,
    {
        if domain_bound == 0 {
            return Err(Error::EmptyDomain);
        }
        let mut classes: BTreeMap<u64, ClassCells> = BTreeMap::new();
        for cv in vectors {
            let IndexWeight { q, gamma } = cv.index_weight;
            classes.entry(q).or_default().entry(gamma).or_default().push(cv.vector);
        }
        for cells in classes.values_mut() {
            for cell in cells.values_mut() {
                cell.sort_unstable();
                cell.dedup();
            }
        }
        Ok(ClassTable { domain_bound, classes })
    }

    /// The bound `d` of the quadrant.
    pub fn domain_bound(&self) -> u64 {
        self.domain_bound
    }

    /// Classes in increasing index order.
    pub fn classes(&self) -> impl Iterator<Item = (u64, &ClassCells)> + '_ {
        self.classes.iter().map(|(&q, cells)| (q, cells))
    }

    /// Cells of the class with index `q`.
    pub fn class(&self, q: u64) -> Option<&ClassCells> {
        self.classes.get(&q)
    }

    /// Vectors of index `q` and weight `gamma`; empty if absent.
    pub fn cell(&self, q: u64, gamma: u64) -> &[WaveVector] {
        self.classes
            .get(&q)
            .and_then(|c| c.get(&gamma))
            .map_or(&[], Vec::as_slice)
    }

    /// Number of distinct indexes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Total number of stored vectors.
    pub fn vector_count(&self) -> usize {
        self.classes.values().flat_map(|c| c.values()).map(Vec::len).sum()
    }

    /// Every stored vector with its cell coordinates, in `(q, γ, vector)` order.
    pub fn iter(&self) -> impl Iterator<Item = (IndexWeight, WaveVector)> + '_ {
        self.classes.iter().flat_map(|(&q, cells)| {
            cells
                .iter()
                .flat_map(move |(&gamma, vs)| vs.iter().map(move |&v| (IndexWeight { q, gamma }, v)))
        })
    }
}

/// Classify every vector of one row `m` of the quadrant, `n = 0..=d`.
pub fn classify_row(m: u64, d: u64) -> Vec<ClassedVector> {
    (0..=d)
        .filter(|&n| m != 0 || n != 0)
        .map(|n| classify_vector(WaveVector::new(m as i64, n as i64)).expect("nonzero by construction"))
        .collect()
}

/// Build the class table of the quadrant `0 ≤ m, n ≤ d` without `(0, 0)`.
pub fn build_class_table(d: u64) -> Result<ClassTable> {
    if d == 0 {
        return Err(Error::EmptyDomain);
    }
    ClassTable::from_classified(d, (0..=d).flat_map(|m| classify_row(m, d)))
}

/// Smallest `g` with `g⁴ ≥ 2d²`; no domain vector has weight above it.
pub fn weight_bound(d: u64) -> u64 {
    let target = 2 * (d as u128) * (d as u128);
    let g = target.isqrt().isqrt();
    if g.pow(4) < target {
        (g + 1) as u64
    } else {
        g as u64
    }
}

/// Whether `q ≤ 2^(1/4)·√d`, decided exactly as `q⁴ ≤ 2d²`.
///
/// This is the optional restriction on searched classes; it is not a bound
/// on the indexes that occur in the domain.
pub fn within_index_bound(q: u64, d: u64) -> bool {
    (q as u128).pow(4) <= 2 * (d as u128) * (d as u128)
}

/// Summary of a class table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassStats {
    /// number of distinct indexes
    pub class_count: usize,
    /// number of vectors in the most populated class
    pub largest_class_size: usize,
    /// index of the most populated class (smallest on ties)
    pub largest_class_index: u64,
    /// total number of vectors
    pub vector_count: usize,
    /// weight γ → number of vectors with that weight
    pub weight_histogram: BTreeMap<u64, usize>,
}

/// Class count, largest class and weight histogram of a table.
pub fn class_stats(table: &ClassTable) -> ClassStats {
    let mut largest_class_size = 0;
    let mut largest_class_index = 0;
    let mut vector_count = 0;
    let mut weight_histogram = BTreeMap::new();
    for (q, cells) in table.classes() {
        let size: usize = cells.values().map(Vec::len).sum();
        if size > largest_class_size {
            largest_class_size = size;
            largest_class_index = q;
        }
        vector_count += size;
        for (&gamma, vs) in cells {
            *weight_histogram.entry(gamma).or_insert(0) += vs.len();
        }
    }
    ClassStats {
        class_count: table.class_count(),
        largest_class_size,
        largest_class_index,
        vector_count,
        weight_histogram,
    }
}
