//! Parallel drivers over the core pipeline.
//!
//! Rows of the quadrant and classes of the table are independent work
//! units. Results are collected in input order, so the output never depends
//! on the number of workers.

use quartets_core::classes::classify_row;
use quartets_core::search::{class_quartets, class_selected};
use quartets_core::{
    brute_force_quartets, build_class_table, find_case1_quartets, ClassTable, KindFilter, Quartet, ResonanceKind,
};
use rayon::prelude::*;

use crate::RunError;

/// [`quartets_core::build_class_table`] with rows classified in parallel.
pub fn build_class_table_par(d: u64) -> Result<ClassTable, RunError> {
    if d == 0 {
        return Err(quartets_core::Error::EmptyDomain.into());
    }
    let rows: Vec<_> = (0..=d).into_par_iter().map(|m| classify_row(m, d)).collect();
    Ok(ClassTable::from_classified(d, rows.into_iter().flatten())?)
}

/// [`quartets_core::find_case1_quartets`] with classes searched in parallel.
pub fn find_case1_quartets_par(table: &ClassTable, filter: KindFilter, index_bound: bool) -> Vec<Quartet> {
    let d = table.domain_bound();
    let classes: Vec<_> = table
        .classes()
        .filter(|&(q, _)| class_selected(q, d, index_bound))
        .collect();
    let per_class: Vec<Vec<Quartet>> = classes
        .par_iter()
        .map(|&(q, cells)| class_quartets(q, cells, filter))
        .collect();
    per_class.into_iter().flatten().collect()
}

/// Outcome of comparing the class search against brute force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    /// domain bound used
    pub bound: u64,
    /// quartets from the class search
    pub search_count: usize,
    /// single-class quartets from brute force
    pub oracle_count: usize,
    /// brute-force quartets spanning two classes
    pub cross_class_count: usize,
    /// cross-class quartets labelled asymmetric (must be zero)
    pub cross_class_asymmetric: Vec<Quartet>,
    /// in brute force only
    pub missing: Vec<Quartet>,
    /// in class search only
    pub extra: Vec<Quartet>,
}

impl OracleComparison {
    /// Whether both enumerations agree and no cross-class quartet is asymmetric.
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.cross_class_asymmetric.is_empty()
    }
}

/// Run both enumerations at bound `d` and compare them as canonical sets.
///
/// Brute force also finds quartets spanning two classes; those are set aside
/// and checked for never being asymmetric.
pub fn compare_with_oracle(d: u64, filter: KindFilter) -> Result<OracleComparison, RunError> {
    let search = find_case1_quartets(&build_class_table(d)?, filter);
    // cross-class quartets are collected whatever the filter, to test the asymmetric claim
    let brute = brute_force_quartets(d, KindFilter::ALL)?;
    let (single, cross): (Vec<Quartet>, Vec<Quartet>) = brute.into_iter().partition(|q| q.class_index().is_some());
    let single: Vec<Quartet> = single.into_iter().filter(|q| filter.contains(q.kind())).collect();
    let missing = single
        .iter()
        .filter(|q| search.binary_search(q).is_err())
        .copied()
        .collect();
    let extra = search
        .iter()
        .filter(|q| single.binary_search(q).is_err())
        .copied()
        .collect();
    let cross_class_asymmetric = cross
        .iter()
        .filter(|q| q.kind() == ResonanceKind::Asymmetric)
        .copied()
        .collect();
    Ok(OracleComparison {
        bound: d,
        search_count: search.len(),
        oracle_count: single.len(),
        cross_class_count: cross.len(),
        cross_class_asymmetric,
        missing,
        extra,
    })
}
