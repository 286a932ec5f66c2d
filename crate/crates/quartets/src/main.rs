use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use quartets::emit::{emit, write_stats};
use quartets::{run, Mode, OutputFormat, RunError, SearchConfig, TridentRanges};

/// Enumerate resonant quartets of gravity waves on the integer lattice.
#[derive(Debug, Parser)]
#[command(name = "quartets", version)]
struct Cli {
    /// Search the quadrant 0 <= m, n <= MAX.
    #[arg(long = "max", value_name = "D")]
    max: Option<u64>,

    /// Resonance kinds to report.
    #[arg(long, value_enum, default_value_t = Mode::Asymmetric)]
    mode: Mode,

    /// Result encoding.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Output file, or - for stdout.
    #[arg(long, value_name = "PATH", default_value = "-")]
    out: String,

    /// Also compare the class search with brute force at this bound (<= 64).
    #[arg(long = "oracle-check", value_name = "D")]
    oracle_check: Option<u64>,

    /// Only search classes whose index satisfies q^4 <= 2 MAX^2.
    #[arg(long = "paper-filter")]
    paper_filter: bool,

    /// Emit parametrized tridents instead of searching: smin:smax,tmin:tmax.
    #[arg(long, value_name = "RANGES")]
    tridents: Option<TridentRanges>,

    /// Print run statistics to stderr.
    #[arg(long)]
    stats: bool,

    /// Worker threads (default: all cores).
    #[arg(long, value_name = "N")]
    threads: Option<usize>,

    /// Write the class table as CSV (m,n,norm_sq,q,gamma).
    #[arg(long = "dump-classes", value_name = "PATH")]
    dump_classes: Option<PathBuf>,
}

impl Cli {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            domain_bound: self.max,
            mode: self.mode,
            index_bound_filter: self.paper_filter,
            output_format: self.format,
            oracle_check: self.oracle_check,
            trident_ranges: self.tridents.clone(),
            threads: self.threads,
            class_dump: self.dump_classes.clone(),
        }
    }
}

fn execute(cli: &Cli) -> Result<(), RunError> {
    let config = cli.config();
    let report = run(&config)?;
    if cli.out == "-" {
        let stdout = io::stdout().lock();
        emit(&report, config.output_format, BufWriter::new(stdout))?;
    } else {
        emit(&report, config.output_format, BufWriter::new(File::create(&cli.out)?))?;
    }
    if cli.stats {
        write_stats(&report, io::stderr().lock())?;
    }
    match report.oracle_failure() {
        Some(err) => Err(err),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let mut stderr = io::stderr().lock();
            let _ = writeln!(stderr, "error: {err}");
            if let RunError::OracleMismatch { diff, .. } = &err {
                for line in diff {
                    let _ = writeln!(stderr, "  {line}");
                }
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
