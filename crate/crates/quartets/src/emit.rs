//! Output formats.
//!
//! CSV: header `m1,n1,m2,n2,m3,n3,m4,n4,q,g1,g2,g3,g4,kind`, one canonical
//! quartet per row, `\n` line endings. JSON: an object with `config`,
//! `quartets` and `stats`; only `stats` carries timings.

use std::collections::BTreeMap;
use std::io::Write;

use quartets_core::{ClassTable, Quartet};
use serde::Serialize;

use crate::config::{Mode, OutputFormat};
use crate::report::SearchReport;
use crate::RunError;

/// Column names of the quartet CSV, in order.
pub const CSV_HEADER: [&str; 14] = [
    "m1", "n1", "m2", "n2", "m3", "n3", "m4", "n4", "q", "g1", "g2", "g3", "g4", "kind",
];

/// Column names of the class-table CSV, in order.
pub const CLASS_CSV_HEADER: [&str; 5] = ["m", "n", "norm_sq", "q", "gamma"];

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn quartet_row(q: &Quartet) -> [String; 14] {
    let [k1, k2, k3, k4] = q.vectors();
    let [g1, g2, g3, g4] = q.weights();
    [
        k1.m.to_string(),
        k1.n.to_string(),
        k2.m.to_string(),
        k2.n.to_string(),
        k3.m.to_string(),
        k3.n.to_string(),
        k4.m.to_string(),
        k4.n.to_string(),
        q.class_index().map(|v| v.to_string()).unwrap_or_default(),
        g1.to_string(),
        g2.to_string(),
        g3.to_string(),
        g4.to_string(),
        q.kind().as_str().to_string(),
    ]
}

/// Write quartets as CSV.
pub fn write_csv<W: Write>(quartets: &[Quartet], out: W) -> Result<(), RunError> {
    let mut w = csv_writer(out);
    w.write_record(CSV_HEADER)?;
    for q in quartets {
        w.write_record(quartet_row(q))?;
    }
    w.flush()?;
    Ok(())
}

/// Write every vector of a class table as `m,n,norm_sq,q,gamma`, in class order.
pub fn write_class_table_csv<W: Write>(table: &ClassTable, out: W) -> Result<(), RunError> {
    let mut w = csv_writer(out);
    w.write_record(CLASS_CSV_HEADER)?;
    for (iw, v) in table.iter() {
        w.serialize((v.m, v.n, v.norm_sq(), iw.q, iw.gamma))?;
    }
    w.flush()?;
    Ok(())
}

/// JSON form of one quartet.
#[derive(Debug, Serialize)]
pub struct JsonQuartet {
    k1: [i64; 2],
    k2: [i64; 2],
    k3: [i64; 2],
    k4: [i64; 2],
    q: Option<u64>,
    gammas: [u64; 4],
    kind: &'static str,
}

impl From<&Quartet> for JsonQuartet {
    fn from(q: &Quartet) -> Self {
        let [k1, k2, k3, k4] = q.vectors().map(|v| [v.m, v.n]);
        JsonQuartet {
            k1,
            k2,
            k3,
            k4,
            q: q.class_index(),
            gammas: q.weights(),
            kind: q.kind().as_str(),
        }
    }
}

#[derive(Debug, Serialize)]
struct JsonConfig {
    max: Option<u64>,
    mode: Mode,
    paper_filter: bool,
    format: OutputFormat,
    oracle_check: Option<u64>,
    tridents: Option<String>,
}

#[derive(Debug, Serialize)]
struct JsonOracle {
    bound: u64,
    passed: bool,
    search_count: usize,
    oracle_count: usize,
    cross_class_count: usize,
    missing: usize,
    extra: usize,
}

#[derive(Debug, Serialize)]
struct JsonStats {
    total: usize,
    counts_by_kind: BTreeMap<&'static str, usize>,
    counts_by_class: BTreeMap<u64, usize>,
    distinct_classes: usize,
    reference_found: usize,
    beyond_reference: usize,
    table_classes: Option<usize>,
    table_vectors: Option<usize>,
    oracle: Option<JsonOracle>,
    duration_ms: f64,
}

#[derive(Debug, Serialize)]
struct JsonReport {
    config: JsonConfig,
    quartets: Vec<JsonQuartet>,
    stats: JsonStats,
}

fn json_report(report: &SearchReport) -> JsonReport {
    let c = &report.config;
    JsonReport {
        config: JsonConfig {
            max: c.domain_bound,
            mode: c.mode,
            paper_filter: c.index_bound_filter,
            format: c.output_format,
            oracle_check: c.oracle_check,
            tridents: c.trident_ranges.as_ref().map(ToString::to_string),
        },
        quartets: report.quartets.iter().map(JsonQuartet::from).collect(),
        stats: JsonStats {
            total: report.quartets.len(),
            counts_by_kind: report.counts_by_kind.iter().map(|(k, &v)| (k.as_str(), v)).collect(),
            counts_by_class: report.counts_by_class.clone(),
            distinct_classes: report.distinct_classes(),
            reference_found: report.reference_found,
            beyond_reference: report.beyond_reference,
            table_classes: report.class_stats.as_ref().map(|s| s.class_count),
            table_vectors: report.class_stats.as_ref().map(|s| s.vector_count),
            oracle: report.oracle.as_ref().map(|o| JsonOracle {
                bound: o.bound,
                passed: o.passed(),
                search_count: o.search_count,
                oracle_count: o.oracle_count,
                cross_class_count: o.cross_class_count,
                missing: o.missing.len(),
                extra: o.extra.len(),
            }),
            duration_ms: report.duration.as_secs_f64() * 1e3,
        },
    }
}

/// Write the report's results in the requested format.
pub fn emit<W: Write>(report: &SearchReport, format: OutputFormat, mut out: W) -> Result<(), RunError> {
    match format {
        OutputFormat::Csv => write_csv(&report.quartets, out),
        OutputFormat::Json => {
            serde_json::to_writer(&mut out, &json_report(report))?;
            out.write_all(b"\n")?;
            out.flush()?;
            Ok(())
        }
    }
}

/// Human-readable statistics, one item per line.
pub fn write_stats<W: Write>(report: &SearchReport, mut out: W) -> std::io::Result<()> {
    writeln!(out, "quartets: {}", report.quartets.len())?;
    for (kind, n) in &report.counts_by_kind {
        writeln!(out, "  {kind}: {n}")?;
    }
    writeln!(out, "distinct classes: {}", report.distinct_classes())?;
    let classes: Vec<String> = report.counts_by_class.iter().map(|(q, n)| format!("{q}:{n}")).collect();
    if !classes.is_empty() && classes.len() <= 40 {
        writeln!(out, "per class: {}", classes.join(" "))?;
    }
    writeln!(out, "reference quartets found: {}", report.reference_found)?;
    writeln!(out, "beyond reference (verified): {}", report.beyond_reference)?;
    if let Some(s) = &report.class_stats {
        writeln!(
            out,
            "class table: {} vectors in {} classes, largest class q={} with {} vectors",
            s.vector_count, s.class_count, s.largest_class_index, s.largest_class_size
        )?;
    }
    if let Some(o) = &report.oracle {
        writeln!(
            out,
            "oracle d={}: {} (search {}, brute force {}, cross-class {})",
            o.bound,
            if o.passed() { "agree" } else { "MISMATCH" },
            o.search_count,
            o.oracle_count,
            o.cross_class_count
        )?;
    }
    writeln!(out, "elapsed: {:.3} s", report.duration.as_secs_f64())
}
