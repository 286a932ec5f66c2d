//! Brute-force enumeration of resonant quartets in small domains.
//!
//! Pairs of vectors are grouped by momentum sum alone; the class structure
//! plays no part in the search, so a fault in the class machinery cannot
//! hide in both this enumerator and [`crate::search::find_case1_quartets`].

use alloc::vec::Vec;

use crate::classes::WaveVector;
use crate::numtheory::{fourth_free_decompose, IndexWeight};
use crate::search::{canonicalize_quartet, verify_quartet, KindFilter, Quartet, RadicalSum};
use crate::{Error, Result};

/// Largest domain bound accepted by [`brute_force_quartets`].
pub const MAX_ORACLE_BOUND: u64 = 64;

/// Every resonant quartet of nonzero vectors in `0 ≤ m, n ≤ d` whose kind
/// passes `filter`, including those spanning two classes. Canonical and
/// sorted.
pub fn brute_force_quartets(d: u64, filter: KindFilter) -> Result<Vec<Quartet>> {
    if d == 0 {
        return Err(Error::EmptyDomain);
    }
    if d > MAX_ORACLE_BOUND {
        return Err(Error::DomainTooLarge {
            bound: d,
            max: MAX_ORACLE_BOUND,
        });
    }
    let di = d as i64;
    let vectors: Vec<(WaveVector, IndexWeight)> = (0..=di)
        .flat_map(|m| (0..=di).map(move |n| WaveVector::new(m, n)))
        .filter(|v| !v.is_zero())
        .map(|v| Ok((v, fourth_free_decompose(v.norm_sq())?)))
        .collect::<Result<_>>()?;

    let mut pairs: Vec<((i64, i64), u32, u32)> = Vec::with_capacity(vectors.len() * (vectors.len() + 1) / 2);
    for (i, (u, _)) in vectors.iter().enumerate() {
        for (j, (v, _)) in vectors.iter().enumerate().skip(i) {
            pairs.push(((u.m + v.m, u.n + v.n), i as u32, j as u32));
        }
    }
    pairs.sort_unstable();

    let mut out = Vec::new();
    for group in pairs.chunk_by(|x, y| x.0 == y.0) {
        let sums: Vec<RadicalSum> = group
            .iter()
            .map(|&(_, i, j)| RadicalSum::of_pair(vectors[i as usize].1, vectors[j as usize].1))
            .collect();
        for a in 0..group.len() {
            for b in a..group.len() {
                if sums[a] != sums[b] {
                    continue;
                }
                let (_, i1, j1) = group[a];
                let (_, i2, j2) = group[b];
                let [k1, k2, k3, k4] = [i1, j1, i2, j2].map(|x| vectors[x as usize].0);
                let quartet = Quartet::new(k1, k2, k3, k4)?;
                if filter.contains(quartet.kind()) {
                    out.push(canonicalize_quartet(&quartet));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Whether a quartet passes the standalone verifier on both conditions.
pub fn is_verified(q: &Quartet) -> bool {
    let [k1, k2, k3, k4] = q.vectors();
    verify_quartet(k1, k2, k3, k4).is_ok_and(|r| r.resonance_ok && r.momentum_ok)
}
