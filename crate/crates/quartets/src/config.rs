use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use quartets_core::oracle::MAX_ORACLE_BOUND;
use quartets_core::KindFilter;
use serde::Serialize;

use crate::RunError;

/// Which resonance kinds a run reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// asymmetric quartets only
    #[default]
    Asymmetric,
    /// trivial, symmetric and asymmetric quartets
    All,
}

impl Mode {
    /// Kinds kept by this mode.
    pub fn filter(self) -> KindFilter {
        match self {
            Mode::Asymmetric => KindFilter::ASYMMETRIC,
            Mode::All => KindFilter::ALL,
        }
    }
}

/// Result encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    /// one canonical quartet per row
    #[default]
    Csv,
    /// quartets plus a separate stats object
    Json,
}

/// Parameter intervals for trident generation, written `smin:smax,tmin:tmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridentRanges {
    /// values of `s`
    pub s: RangeInclusive<u64>,
    /// values of `t`
    pub t: RangeInclusive<u64>,
}

impl FromStr for TridentRanges {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse_range = |part: &str| -> Result<RangeInclusive<u64>, String> {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| format!("expected min:max, got {part:?}"))?;
            let lo: u64 = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
            let hi: u64 = hi.trim().parse().map_err(|e| format!("{hi:?}: {e}"))?;
            if lo == 0 || lo > hi {
                return Err(format!("range {lo}:{hi} must satisfy 1 <= min <= max"));
            }
            Ok(lo..=hi)
        };
        let (s_part, t_part) = s
            .split_once(',')
            .ok_or_else(|| format!("expected smin:smax,tmin:tmax, got {s:?}"))?;
        Ok(TridentRanges {
            s: parse_range(s_part)?,
            t: parse_range(t_part)?,
        })
    }
}

impl fmt::Display for TridentRanges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{},{}:{}",
            self.s.start(),
            self.s.end(),
            self.t.start(),
            self.t.end()
        )
    }
}

/// Everything that determines a run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchConfig {
    /// quadrant bound `d`; absent for trident-only runs
    pub domain_bound: Option<u64>,
    /// kinds to report
    pub mode: Mode,
    /// only search classes with `q⁴ ≤ 2d²`
    pub index_bound_filter: bool,
    /// result encoding
    pub output_format: OutputFormat,
    /// also compare search and brute force at this bound
    pub oracle_check: Option<u64>,
    /// emit parametrized tridents instead of searching
    pub trident_ranges: Option<TridentRanges>,
    /// worker threads; `None` uses the global pool
    pub threads: Option<usize>,
    /// where to dump the class table as CSV
    pub class_dump: Option<PathBuf>,
}

impl SearchConfig {
    /// Search run over `0 ≤ m, n ≤ d`.
    pub fn search(d: u64, mode: Mode) -> Self {
        SearchConfig {
            domain_bound: Some(d),
            mode,
            ..SearchConfig::default()
        }
    }

    /// Reject inconsistent settings.
    pub fn validate(&self) -> Result<(), RunError> {
        match (self.domain_bound, &self.trident_ranges) {
            (Some(0), _) => return Err(RunError::Usage("--max must be at least 1".into())),
            (Some(_), Some(_)) => return Err(RunError::Usage("--max and --tridents are mutually exclusive".into())),
            (None, None) => return Err(RunError::Usage("one of --max or --tridents is required".into())),
            _ => {}
        }
        if let Some(o) = self.oracle_check {
            if o == 0 || o > MAX_ORACLE_BOUND {
                return Err(RunError::Usage(format!(
                    "--oracle-check must be between 1 and {MAX_ORACLE_BOUND}"
                )));
            }
        }
        if self.threads == Some(0) {
            return Err(RunError::Usage("--threads must be at least 1".into()));
        }
        if self.class_dump.is_some() && self.domain_bound.is_none() {
            return Err(RunError::Usage("--dump-classes needs --max".into()));
        }
        Ok(())
    }
}
