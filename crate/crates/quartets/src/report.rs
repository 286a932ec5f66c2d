use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use quartets_core::{
    canonicalize_quartet, class_stats, generate_tridents, verify_quartet, ClassStats, Quartet, ResonanceKind,
};
use rayon::prelude::*;

use crate::config::SearchConfig;
use crate::driver::{build_class_table_par, compare_with_oracle, find_case1_quartets_par, OracleComparison};
use crate::reference::reference_quartets;
use crate::RunError;

/// Everything a run produces.
#[derive(Debug, Clone)]
pub struct SearchReport {
    /// the configuration that produced this report
    pub config: SearchConfig,
    /// canonical quartets sorted by `(q, k1, k2, k3, k4)`
    pub quartets: Vec<Quartet>,
    /// number of quartets of each kind
    pub counts_by_kind: BTreeMap<ResonanceKind, usize>,
    /// number of quartets per class index
    pub counts_by_class: BTreeMap<u64, usize>,
    /// reference quartets present in the result
    pub reference_found: usize,
    /// quartets that are not reference quartets; each passed verification
    pub beyond_reference: usize,
    /// summary of the class table, for search runs
    pub class_stats: Option<ClassStats>,
    /// brute-force comparison, when requested
    pub oracle: Option<OracleComparison>,
    /// wall-clock time of the whole run
    pub duration: Duration,
}

impl SearchReport {
    /// Number of distinct classes among the reported quartets.
    pub fn distinct_classes(&self) -> usize {
        self.counts_by_class.len()
    }

    /// The oracle mismatch as an error, if the comparison failed.
    pub fn oracle_failure(&self) -> Option<RunError> {
        let cmp = self.oracle.as_ref().filter(|c| !c.passed())?;
        let mut diff = Vec::new();
        diff.extend(cmp.missing.iter().map(|q| format!("- {q} (q={:?})", q.class_index())));
        diff.extend(cmp.extra.iter().map(|q| format!("+ {q} (q={:?})", q.class_index())));
        diff.extend(
            cmp.cross_class_asymmetric
                .iter()
                .map(|q| format!("! cross-class asymmetric {q}")),
        );
        Some(RunError::OracleMismatch {
            bound: cmp.bound,
            missing: cmp.missing.len(),
            extra: cmp.extra.len(),
            diff,
        })
    }
}

fn with_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T, RunError> {
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| RunError::Usage(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(job))
        }
        None => Ok(job()),
    }
}

/// Execute the pipeline described by `config`.
///
/// An oracle disagreement does not fail the run; it is recorded in
/// [`SearchReport::oracle`] and surfaced through [`SearchReport::oracle_failure`].
pub fn run(config: &SearchConfig) -> Result<SearchReport, RunError> {
    config.validate()?;
    let start = Instant::now();
    with_pool(config.threads, || run_inner(config, start))?
}

fn run_inner(config: &SearchConfig, start: Instant) -> Result<SearchReport, RunError> {
    let filter = config.mode.filter();
    let (quartets, stats) = if let Some(d) = config.domain_bound {
        let table = build_class_table_par(d)?;
        if let Some(path) = &config.class_dump {
            let file = std::fs::File::create(path)?;
            crate::emit::write_class_table_csv(&table, std::io::BufWriter::new(file))?;
        }
        let stats = class_stats(&table);
        (
            find_case1_quartets_par(&table, filter, config.index_bound_filter),
            Some(stats),
        )
    } else {
        let ranges = config.trident_ranges.as_ref().expect("validated");
        let mut tridents: Vec<Quartet> = generate_tridents(ranges.s.clone(), ranges.t.clone())?
            .iter()
            .map(canonicalize_quartet)
            .filter(|q| filter.contains(q.kind()))
            .collect();
        tridents.sort_unstable();
        tridents.dedup();
        (tridents, None)
    };

    if let Some(bad) = quartets.par_iter().find_any(|q| !verifies(q)) {
        return Err(RunError::Unverified(bad.to_string()));
    }

    let mut counts_by_kind = BTreeMap::new();
    let mut counts_by_class = BTreeMap::new();
    for q in &quartets {
        *counts_by_kind.entry(q.kind()).or_insert(0) += 1;
        if let Some(idx) = q.class_index() {
            *counts_by_class.entry(idx).or_insert(0) += 1;
        }
    }
    let reference_found = reference_quartets()
        .iter()
        .filter(|r| quartets.binary_search(r).is_ok())
        .count();
    let beyond_reference = quartets.len() - reference_found;

    let oracle = config
        .oracle_check
        .map(|d| compare_with_oracle(d, filter))
        .transpose()?;

    Ok(SearchReport {
        config: config.clone(),
        quartets,
        counts_by_kind,
        counts_by_class,
        reference_found,
        beyond_reference,
        class_stats: stats,
        oracle,
        duration: start.elapsed(),
    })
}

fn verifies(q: &Quartet) -> bool {
    let [a, b, c, d] = q.vectors();
    matches!(verify_quartet(a, b, c, d), Ok(r) if r.kind == Some(q.kind()))
}
