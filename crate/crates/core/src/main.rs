//! Command-line harness: evaluate single quantities (duals, zeta residues,
//! polylogarithms) or sweep the congruence checks over a prime range.
//!
//! Exit codes: 0 all checks pass (skips allowed), 1 any check failed,
//! 2 configuration or internal error.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fmzv::harness::{emit, run_sweep, summarize, CheckKind, ReportFormat, SweepConfig};
use fmzv::modp::{polylog_mod, zeta_mod, zeta_star_mod};
use fmzv::{Error, Index, PolylogKind};

#[derive(Parser)]
#[command(
    name = "fmzv",
    version,
    about = "finite multiple zeta values, finite multiple polylogarithms, and their congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hoffman dual of an index
    Dual {
        /// Index as comma-separated positive integers, e.g. "2,1"
        index: String,
    },
    /// Evaluate zeta_{p-1}(index) (or its star variant) mod p^n
    Zeta {
        /// Weakly decreasing summation instead of strictly decreasing
        #[arg(long)]
        star: bool,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        index: String,
    },
    /// Evaluate the finite multiple polylogarithm at level p-1 mod p^n
    Polylog {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        index: String,
    },
    /// Sweep congruence checks over a prime range and report results
    Check {
        /// Check name (see --help) or "all"
        name: String,
        /// Inclusive prime range "A..B"
        #[arg(long)]
        primes: String,
        /// Maximum precision n
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Maximum index weight (also bounds variable counts)
        #[arg(long, default_value_t = 3)]
        weight: u32,
        /// Parallel worker count
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Write the report to this path instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Emit measured per-check times (breaks byte-reproducibility)
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Harmonic,
    HarmonicStar,
    Shuffle,
    ShuffleStar,
}

impl From<KindArg> for PolylogKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Harmonic => PolylogKind::Harmonic,
            KindArg::HarmonicStar => PolylogKind::HarmonicStar,
            KindArg::Shuffle => PolylogKind::Shuffle,
            KindArg::ShuffleStar => PolylogKind::ShuffleStar,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

fn parse_prime_range(s: &str) -> fmzv::Result<(u64, u64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Error::Config(format!("prime range must look like A..B, got {s:?}")))?;
    let min = a
        .parse::<u64>()
        .map_err(|_| Error::Config(format!("bad lower prime bound {a:?}")))?;
    let max = b
        .parse::<u64>()
        .map_err(|_| Error::Config(format!("bad upper prime bound {b:?}")))?;
    Ok((min, max))
}

fn resolve_checks(name: &str) -> fmzv::Result<Vec<CheckKind>> {
    if name == "all" {
        return Ok(CheckKind::ALL.to_vec());
    }
    CheckKind::from_name(name).map(|c| vec![c]).ok_or_else(|| {
        let known: Vec<&str> = CheckKind::ALL.iter().map(|c| c.name()).collect();
        Error::Config(format!(
            "unknown check {name:?}; known checks: {} or \"all\"",
            known.join(", ")
        ))
    })
}

fn run(cli: Cli) -> fmzv::Result<ExitCode> {
    match cli.command {
        Command::Dual { index } => {
            let k: Index = index.parse()?;
            println!("{}", k.hoffman_dual());
            Ok(ExitCode::SUCCESS)
        }
        Command::Zeta { star, p, n, index } => {
            let k: Index = index.parse()?;
            let value = if star {
                zeta_star_mod(p, n, &k)?
            } else {
                zeta_mod(p, n, &k)?
            };
            println!("{value} (mod {p}^{n})");
            Ok(ExitCode::SUCCESS)
        }
        Command::Polylog { kind, p, n, index } => {
            let k: Index = index.parse()?;
            let poly = polylog_mod(kind.into(), p, n, &k)?;
            println!("{poly} (mod {p}^{n})");
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            name,
            primes,
            n,
            weight,
            jobs,
            format,
            out,
            timings,
        } => {
            let (prime_min, prime_max) = parse_prime_range(&primes)?;
            let cfg = SweepConfig {
                prime_min,
                prime_max,
                precision_max: n,
                weight_max: weight,
                checks: resolve_checks(&name)?,
                jobs,
                format: match format {
                    FormatArg::Json => ReportFormat::Json,
                    FormatArg::Csv => ReportFormat::Csv,
                },
                include_timings: timings,
            };
            let reports = run_sweep(&cfg)?;
            let mut rendered = emit(&reports, cfg.format, cfg.include_timings);
            if !rendered.ends_with('\n') {
                rendered.push('\n');
            }
            match out {
                Some(path) => fs::write(&path, rendered.as_bytes())
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                None => print!("{rendered}"),
            }
            let (total, failed, skipped) = summarize(&reports);
            eprintln!("checks: {total} total, {failed} failed, {skipped} skipped");
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
