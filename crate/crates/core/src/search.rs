//! Resonant quartets: exact verification, classification, canonical form,
//! the per-class pair-bucket search, and the trident family.
//!
//! Frequencies are `ω(k) = (m² + n²)^(1/4) = γ q^(1/4)`. Fourth roots of
//! distinct fourth-power-free integers are linearly independent over ℚ,
//! so a sum `Σ γᵢ qᵢ^(1/4)` is determined by its coefficient map `q → Σγ`.
//! Two sides of the resonance condition are equal exactly when those maps
//! coincide; this is the only equality test used anywhere in the crate.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::RangeInclusive;

use crate::classes::{within_index_bound, ClassCells, ClassTable, WaveVector};
use crate::numtheory::{fourth_free_decompose, IndexWeight};
use crate::{Error, Result};

/// Role of a resonance in energy transfer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResonanceKind {
    /// `{k1, k2} = {k3, k4}`: nothing is exchanged.
    Trivial,
    /// `{|k1|, |k2|} = {|k3|, |k4|}`: no new wavelengths.
    Symmetric,
    /// Norms change: energy moves across scales.
    Asymmetric,
}

impl ResonanceKind {
    /// Lower-case label used in output files.
    pub fn as_str(&self) -> &'static str {
        match self {
            ResonanceKind::Trivial => "trivial",
            ResonanceKind::Symmetric => "symmetric",
            ResonanceKind::Asymmetric => "asymmetric",
        }
    }
}

impl fmt::Display for ResonanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for ResonanceKind {
    type Err = ();
    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "trivial" => Ok(ResonanceKind::Trivial),
            "symmetric" => Ok(ResonanceKind::Symmetric),
            "asymmetric" => Ok(ResonanceKind::Asymmetric),
            _ => Err(()),
        }
    }
}

/// Set of resonance kinds to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KindFilter {
    /// keep trivial quartets
    pub trivial: bool,
    /// keep symmetric quartets
    pub symmetric: bool,
    /// keep asymmetric quartets
    pub asymmetric: bool,
}

impl KindFilter {
    /// Every kind.
    pub const ALL: KindFilter = KindFilter {
        trivial: true,
        symmetric: true,
        asymmetric: true,
    };
    /// Asymmetric quartets only.
    pub const ASYMMETRIC: KindFilter = KindFilter {
        trivial: false,
        symmetric: false,
        asymmetric: true,
    };

    /// Whether `kind` passes.
    pub fn contains(&self, kind: ResonanceKind) -> bool {
        match kind {
            ResonanceKind::Trivial => self.trivial,
            ResonanceKind::Symmetric => self.symmetric,
            ResonanceKind::Asymmetric => self.asymmetric,
        }
    }
}

/// Exact value of `ω(k) + ω(k')` as a coefficient map `q → Σγ`.
///
/// At most two indexes occur; entries are kept sorted by index and merged
/// when the indexes agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: [(u64, u64); 2],
    len: u8,
}

impl RadicalSum {
    /// Sum of the frequencies of two vectors with the given decompositions.
    pub fn of_pair(a: IndexWeight, b: IndexWeight) -> Self {
        match a.q.cmp(&b.q) {
            Ordering::Equal => RadicalSum {
                terms: [(a.q, a.gamma + b.gamma), (0, 0)],
                len: 1,
            },
            Ordering::Less => RadicalSum {
                terms: [(a.q, a.gamma), (b.q, b.gamma)],
                len: 2,
            },
            Ordering::Greater => RadicalSum {
                terms: [(b.q, b.gamma), (a.q, a.gamma)],
                len: 2,
            },
        }
    }

    /// `(q, coefficient)` terms in increasing `q`.
    pub fn terms(&self) -> &[(u64, u64)] {
        &self.terms[..self.len as usize]
    }
}

/// Four wave vectors `k1 + k2 = k3 + k4` with equal frequency sums.
///
/// `(k1, k2)` is the incoming pair and `(k3, k4)` the outgoing pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quartet {
    vectors: [WaveVector; 4],
    index_weights: [IndexWeight; 4],
    kind: ResonanceKind,
}

impl Quartet {
    /// Verify and classify four vectors.
    pub fn new(k1: WaveVector, k2: WaveVector, k3: WaveVector, k4: WaveVector) -> Result<Self> {
        let report = verify_quartet(k1, k2, k3, k4)?;
        match report.kind {
            Some(kind) => Ok(Quartet {
                vectors: [k1, k2, k3, k4],
                index_weights: report.index_weights,
                kind,
            }),
            None => Err(Error::NotResonant),
        }
    }

    /// Build from parts already known to be resonant.
    fn from_parts(vectors: [WaveVector; 4], index_weights: [IndexWeight; 4]) -> Self {
        let kind = kind_of(&vectors, &index_weights);
        Quartet {
            vectors,
            index_weights,
            kind,
        }
    }

    /// `[k1, k2, k3, k4]`.
    pub fn vectors(&self) -> [WaveVector; 4] {
        self.vectors
    }

    /// `(q, γ)` of each vector, in the same order as [`Quartet::vectors`].
    pub fn index_weights(&self) -> [IndexWeight; 4] {
        self.index_weights
    }

    /// `[γ1, γ2, γ3, γ4]`.
    pub fn weights(&self) -> [u64; 4] {
        self.index_weights.map(|iw| iw.gamma)
    }

    /// Common index when all four vectors lie in one class.
    pub fn class_index(&self) -> Option<u64> {
        let q = self.index_weights[0].q;
        self.index_weights.iter().all(|iw| iw.q == q).then_some(q)
    }

    /// Resonance kind.
    pub fn kind(&self) -> ResonanceKind {
        self.kind
    }

    /// Whether the quartet has the trident shape `(a,0), (−b,0), (c,d), (c,−d)`
    /// under some ordering of its pairs.
    pub fn is_trident(&self) -> bool {
        let [k1, k2, k3, k4] = self.vectors;
        let axis = |a: WaveVector, b: WaveVector| a.n == 0 && b.n == 0 && (a.m > 0) != (b.m > 0);
        let mirror = |a: WaveVector, b: WaveVector| a.m == b.m && a.n == -b.n && a.n != 0;
        (axis(k1, k2) && mirror(k3, k4)) || (axis(k3, k4) && mirror(k1, k2))
    }

    fn sort_key(&self) -> (Option<u64>, [WaveVector; 4]) {
        (self.class_index(), self.vectors)
    }
}

impl PartialOrd for Quartet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by `(class index, k1, k2, k3, k4)`; cross-class quartets first.
impl Ord for Quartet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Quartet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [k1, k2, k3, k4] = self.vectors;
        write!(f, "{k1} + {k2} -> {k3} + {k4} [{}]", self.kind)
    }
}

/// Outcome of checking four vectors against the resonance conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    /// `ω1 + ω2 = ω3 + ω4` exactly
    pub resonance_ok: bool,
    /// `k1 + k2 = k3 + k4`
    pub momentum_ok: bool,
    /// set only when both conditions hold
    pub kind: Option<ResonanceKind>,
    /// `(q, γ)` per vector
    pub index_weights: [IndexWeight; 4],
}

/// Check the resonance and momentum conditions for arbitrary nonzero vectors
/// of ℤ².
pub fn verify_quartet(k1: WaveVector, k2: WaveVector, k3: WaveVector, k4: WaveVector) -> Result<Verification> {
    let vectors = [k1, k2, k3, k4];
    let mut index_weights = [IndexWeight { q: 1, gamma: 1 }; 4];
    for (slot, v) in index_weights.iter_mut().zip(vectors) {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        *slot = fourth_free_decompose(v.norm_sq())?;
    }
    let resonance_ok = RadicalSum::of_pair(index_weights[0], index_weights[1])
        == RadicalSum::of_pair(index_weights[2], index_weights[3]);
    let momentum_ok = k1 + k2 == k3 + k4;
    let kind = (resonance_ok && momentum_ok).then(|| kind_of(&vectors, &index_weights));
    Ok(Verification {
        resonance_ok,
        momentum_ok,
        kind,
        index_weights,
    })
}

fn sorted_pair<T: Ord>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn kind_of(vectors: &[WaveVector; 4], index_weights: &[IndexWeight; 4]) -> ResonanceKind {
    if sorted_pair(vectors[0], vectors[1]) == sorted_pair(vectors[2], vectors[3]) {
        return ResonanceKind::Trivial;
    }
    let norms = index_weights.map(|iw| iw.value());
    if sorted_pair(norms[0], norms[1]) == sorted_pair(norms[2], norms[3]) {
        ResonanceKind::Symmetric
    } else {
        ResonanceKind::Asymmetric
    }
}

/// Recompute the kind of a quartet, rejecting it unless it is resonant.
pub fn classify_quartet(qt: &Quartet) -> Result<ResonanceKind> {
    let [k1, k2, k3, k4] = qt.vectors;
    verify_quartet(k1, k2, k3, k4)?.kind.ok_or(Error::NotResonant)
}

/// Representative under swaps within each pair and swapping the pairs:
/// each pair sorted, then the two pairs sorted, all lexicographically.
pub fn canonicalize_quartet(qt: &Quartet) -> Quartet {
    let entry = |i: usize| (qt.vectors[i], qt.index_weights[i]);
    let order = |a: (WaveVector, IndexWeight), b: (WaveVector, IndexWeight)| if a.0 <= b.0 { [a, b] } else { [b, a] };
    let left = order(entry(0), entry(1));
    let right = order(entry(2), entry(3));
    let key = |p: &[(WaveVector, IndexWeight); 2]| (p[0].0, p[1].0);
    let (first, second) = if key(&left) <= key(&right) {
        (left, right)
    } else {
        (right, left)
    };
    Quartet {
        vectors: [first[0].0, first[1].0, second[0].0, second[1].0],
        index_weights: [first[0].1, first[1].1, second[0].1, second[1].1],
        kind: qt.kind,
    }
}

/// All `(γ1, γ2, γ3, γ4)` over `weights` with `γ1 + γ2 = γ3 + γ4`, taken
/// with `γ1 ≤ γ2`, `γ3 ≤ γ4` and `(γ1, γ2) ≤ (γ3, γ4)`, in lexicographic
/// order.
pub fn weight_equation_solutions(weights: &[u64]) -> Vec<[u64; 4]> {
    let mut ws: Vec<u64> = weights.to_vec();
    ws.sort_unstable();
    ws.dedup();
    let mut pairs: Vec<(u64, u64, u64)> = Vec::new();
    for (i, &a) in ws.iter().enumerate() {
        for &b in &ws[i..] {
            pairs.push((a + b, a, b));
        }
    }
    pairs.sort_unstable();
    let mut out = Vec::new();
    for group in pairs.chunk_by(|x, y| x.0 == y.0) {
        for (i, &(_, a, b)) in group.iter().enumerate() {
            for &(_, c, e) in &group[i..] {
                out.push([a, b, c, e]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Bucket key shared by every pair that can complete a quartet with another.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairBucketKey {
    /// `m + m'`
    pub sum_m: i64,
    /// `n + n'`
    pub sum_n: i64,
    /// `γ + γ'`
    pub weight_sum: u64,
}

/// Case-1 quartets of a single class, canonical and sorted.
///
/// Every unordered pair of class members (a vector may pair with itself) is
/// keyed by its momentum and weight sum. Two pairs sharing a key form a
/// quartet: momentum agrees by the key, and frequencies agree because both
/// sides equal `(γ + γ') q^(1/4)`. A pair combined with itself yields the
/// trivial quartet and is only formed when trivial quartets are requested.
pub fn class_quartets(q: u64, cells: &ClassCells, filter: KindFilter) -> Vec<Quartet> {
    let members: Vec<(WaveVector, IndexWeight)> = cells
        .iter()
        .flat_map(|(&gamma, vs)| vs.iter().map(move |&v| (v, IndexWeight { q, gamma })))
        .collect();
    let mut keyed: Vec<(PairBucketKey, u32, u32)> = Vec::with_capacity(members.len() * (members.len() + 1) / 2);
    for (i, (u, ui)) in members.iter().enumerate() {
        for (j, (v, vi)) in members.iter().enumerate().skip(i) {
            let key = PairBucketKey {
                sum_m: u.m + v.m,
                sum_n: u.n + v.n,
                weight_sum: ui.gamma + vi.gamma,
            };
            keyed.push((key, i as u32, j as u32));
        }
    }
    keyed.sort_unstable();

    let mut out = Vec::new();
    for bucket in keyed.chunk_by(|x, y| x.0 == y.0) {
        for (a, &(_, i1, j1)) in bucket.iter().enumerate() {
            let start = if filter.trivial { a } else { a + 1 };
            for &(_, i2, j2) in &bucket[start..] {
                let [p, r, s, t] = [i1, j1, i2, j2].map(|x| members[x as usize]);
                let quartet = Quartet::from_parts([p.0, r.0, s.0, t.0], [p.1, r.1, s.1, t.1]);
                if filter.contains(quartet.kind) {
                    out.push(canonicalize_quartet(&quartet));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether the class with index `q` is searched when the index bound
/// `q⁴ ≤ 2d²` is in force.
pub fn class_selected(q: u64, d: u64, index_bound: bool) -> bool {
    !index_bound || within_index_bound(q, d)
}

/// Every Case-1 quartet of the table's domain whose kind passes `filter`,
/// canonical and sorted by `(q, k1, k2, k3, k4)`.
pub fn find_case1_quartets(table: &ClassTable, filter: KindFilter) -> Vec<Quartet> {
    find_case1_quartets_bounded(table, filter, false)
}

/// [`find_case1_quartets`], optionally restricted to classes with `q⁴ ≤ 2d²`.
pub fn find_case1_quartets_bounded(table: &ClassTable, filter: KindFilter, index_bound: bool) -> Vec<Quartet> {
    let d = table.domain_bound();
    let mut out: Vec<Quartet> = table
        .classes()
        .filter(|&(q, _)| class_selected(q, d, index_bound))
        .flat_map(|(q, cells)| class_quartets(q, cells, filter))
        .collect();
    // classes are visited in increasing q and each class comes back sorted
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out.dedup();
    out
}

/// Trident quartets `(a,0), (−b,0), (c,d), (c,−d)` with
/// `a = (s²+t²+st)²`, `b = (s²+t²−st)²`, `c = 2st(s²+t²)`, `d = s⁴−t⁴`
/// for every `s` in `s_range` and `t` in `t_range`, in `(s, t)` order.
///
/// All four vectors have index 1, with weights `s²+t²+st`, `s²+t²−st`,
/// `s²+t²`, `s²+t²`. Both parameters must be at least 1.
pub fn generate_tridents(s_range: RangeInclusive<u64>, t_range: RangeInclusive<u64>) -> Result<Vec<Quartet>> {
    let mut out = Vec::new();
    for s in s_range {
        for t in t_range.clone() {
            out.push(trident(s, t)?);
        }
    }
    Ok(out)
}

/// The single trident for parameters `(s, t)`.
pub fn trident(s: u64, t: u64) -> Result<Quartet> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidTridentParameter { s, t });
    }
    let (s, t) = (s as i64, t as i64);
    let base = s * s + t * t;
    let a = (base + s * t).pow(2);
    let b = (base - s * t).pow(2);
    let c = 2 * s * t * base;
    let d = s.pow(4) - t.pow(4);
    Quartet::new(
        WaveVector::new(a, 0),
        WaveVector::new(-b, 0),
        WaveVector::new(c, d),
        WaveVector::new(c, -d),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::build_class_table;
    use alloc::vec;

    fn w(m: i64, n: i64) -> WaveVector {
        WaveVector::new(m, n)
    }

    fn quartet(v: [(i64, i64); 4]) -> Quartet {
        let [a, b, c, d] = v.map(WaveVector::from);
        Quartet::new(a, b, c, d).unwrap()
    }

    #[test]
    fn weight_equation_examples() {
        assert!(weight_equation_solutions(&[2, 7, 3, 6]).contains(&[2, 7, 3, 6]));
        assert!(weight_equation_solutions(&[8, 10, 13, 15]).contains(&[8, 15, 10, 13]));
        assert_eq!(weight_equation_solutions(&[1]), vec![[1, 1, 1, 1]]);
        assert!(weight_equation_solutions(&[]).is_empty());
    }

    #[test]
    fn weight_equation_matches_brute_force() {
        let ws = [1u64, 2, 4, 5, 9, 11, 12];
        let mut expected = Vec::new();
        for &a in &ws {
            for &b in &ws {
                for &c in &ws {
                    for &d in &ws {
                        if a + b == c + d && a <= b && c <= d && (a, b) <= (c, d) {
                            expected.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        expected.sort_unstable();
        assert_eq!(weight_equation_solutions(&ws), expected);
    }

    #[test]
    fn verify_examples() {
        let r = verify_quartet(w(-20, 15), w(-20, -15), w(-49, 0), w(9, 0)).unwrap();
        assert!(r.resonance_ok && r.momentum_ok);
        assert_eq!(r.kind, Some(ResonanceKind::Asymmetric));
        assert_eq!(
            r.index_weights.map(|iw| (iw.q, iw.gamma)),
            [(1, 5), (1, 5), (1, 7), (1, 3)]
        );

        let r = verify_quartet(w(1, 0), w(2, 0), w(3, 0), w(4, 0)).unwrap();
        assert!(!r.resonance_ok);
        assert_eq!(r.kind, None);

        let r = verify_quartet(w(9, 0), w(-1, 0), w(4, 0), w(4, 0)).unwrap();
        assert!(r.resonance_ok && r.momentum_ok);
        assert_eq!(r.kind, Some(ResonanceKind::Asymmetric));

        assert_eq!(
            verify_quartet(w(0, 0), w(1, 0), w(1, 0), w(0, 0)),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn resonance_without_momentum() {
        // ω-sums agree, vectors do not add up
        let r = verify_quartet(w(4, 0), w(4, 0), w(9, 0), w(1, 0)).unwrap();
        assert!(r.resonance_ok);
        assert!(!r.momentum_ok);
        assert_eq!(r.kind, None);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_quartet(&quartet([(1, 2), (3, 4), (1, 2), (3, 4)])),
            Ok(ResonanceKind::Trivial)
        );
        assert_eq!(
            classify_quartet(&quartet([(1, 2), (3, 2), (2, 1), (2, 3)])),
            Ok(ResonanceKind::Symmetric)
        );
        assert_eq!(
            classify_quartet(&quartet([(-4, 0), (49, 0), (9, 0), (36, 0)])),
            Ok(ResonanceKind::Asymmetric)
        );
        assert_eq!(Quartet::new(w(1, 0), w(2, 0), w(3, 0), w(0, 0)), Err(Error::ZeroVector));
        assert_eq!(
            Quartet::new(w(1, 0), w(2, 0), w(3, 0), w(4, 0)),
            Err(Error::NotResonant)
        );
    }

    #[test]
    fn case_two_quartet_has_no_class_index() {
        let q = quartet([(1, 2), (3, 4), (1, 2), (3, 4)]);
        assert_eq!(q.class_index(), None);
        assert_eq!(q.kind(), ResonanceKind::Trivial);
        let q = quartet([(495, 90), (64, 128), (359, 118), (200, 100)]);
        assert_eq!(q.class_index(), Some(5));
        assert_eq!(q.weights(), [15, 8, 13, 10]);
    }

    #[test]
    fn canonical_form() {
        let q = quartet([(64, 128), (495, 90), (200, 100), (359, 118)]);
        let c = canonicalize_quartet(&q);
        assert_eq!(c.vectors(), [w(64, 128), w(495, 90), w(200, 100), w(359, 118)]);
        assert_eq!(c.weights(), [8, 15, 10, 13]);
        assert_eq!(canonicalize_quartet(&c), c);
        let swapped = quartet([(359, 118), (200, 100), (495, 90), (64, 128)]);
        assert_eq!(canonicalize_quartet(&swapped), c);
    }

    #[test]
    fn tridents_small() {
        let t = trident(1, 1).unwrap();
        assert_eq!(t.vectors(), [w(9, 0), w(-1, 0), w(4, 0), w(4, 0)]);
        assert_eq!(t.weights(), [3, 1, 2, 2]);
        let t = trident(2, 1).unwrap();
        assert_eq!(t.vectors(), [w(49, 0), w(-9, 0), w(20, 15), w(20, -15)]);
        assert_eq!(t.weights(), [7, 3, 5, 5]);
        assert_eq!(t.class_index(), Some(1));
        assert!(t.is_trident());
        assert_eq!(trident(1, 0), Err(Error::InvalidTridentParameter { s: 1, t: 0 }));
        assert_eq!(generate_tridents(1..=3, 1..=2).unwrap().len(), 6);
    }

    #[test]
    fn search_d4_trivial_only() {
        let table = build_class_table(4).unwrap();
        let all = find_case1_quartets(&table, KindFilter::ALL);
        let trivial = canonicalize_quartet(&quartet([(1, 2), (2, 1), (1, 2), (2, 1)]));
        assert_eq!(trivial.kind(), ResonanceKind::Trivial);
        assert!(all.contains(&trivial));
        // norms 5 and 13 sit in different classes: never produced by the class search
        let cross = canonicalize_quartet(&quartet([(1, 2), (3, 2), (2, 1), (2, 3)]));
        assert_eq!(cross.kind(), ResonanceKind::Symmetric);
        assert_eq!(cross.class_index(), None);
        assert!(!all.contains(&cross));
        assert!(all.iter().all(|q| q.kind() == ResonanceKind::Trivial));
        assert!(find_case1_quartets(&table, KindFilter::ASYMMETRIC).is_empty());
    }

    #[test]
    fn search_d64_single_class_symmetric() {
        // norms 130 and 16·130, all in class 130
        let table = build_class_table(64).unwrap();
        let sym: Vec<Quartet> = find_case1_quartets(&table, KindFilter::ALL)
            .into_iter()
            .filter(|q| q.kind() == ResonanceKind::Symmetric)
            .collect();
        let expected = canonicalize_quartet(&quartet([(3, 11), (36, 28), (11, 3), (28, 36)]));
        assert_eq!(sym, vec![expected]);
        assert_eq!(expected.class_index(), Some(130));
        assert_eq!(expected.weights(), [1, 2, 1, 2]);
    }

    #[test]
    fn index_bound_restricts_classes() {
        let table = build_class_table(40).unwrap();
        let full = find_case1_quartets_bounded(&table, KindFilter::ALL, false);
        let bounded = find_case1_quartets_bounded(&table, KindFilter::ALL, true);
        assert!(bounded.len() < full.len());
        assert!(bounded.iter().all(|q| full.contains(q)));
        assert!(bounded.iter().all(|q| within_index_bound(q.class_index().unwrap(), 40)));
    }
}
