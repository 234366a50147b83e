//! Batch driver: sweeps primes, precisions, and index families over the
//! registered checks, optionally in parallel, and renders machine-readable
//! reports. Identical configurations produce byte-identical output at any
//! parallelism degree.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{shuffle_reflection_sides, symmetric_identity_sides};
use crate::hoffman::{check_asymptotic_duality, check_psi_kernel, HWord};
use crate::indices::{indices_up_to_weight, Index};
use crate::modp::check_prime;
use crate::report::{params, CheckReport, ParamValue};
use crate::series;

/// The registered congruence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    PadicDuality,
    OneVarDuality,
    ReflectionAllOnes,
    ReflectionLeveled,
    MultiVarDuality,
    Reversal,
    BinomExpansion,
    BinomPolylogSum,
    PsiKernel,
    AsymptoticDuality,
    SymmetricIdentity,
    ShuffleReflection,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        CheckKind::PadicDuality,
        CheckKind::OneVarDuality,
        CheckKind::ReflectionAllOnes,
        CheckKind::ReflectionLeveled,
        CheckKind::MultiVarDuality,
        CheckKind::Reversal,
        CheckKind::BinomExpansion,
        CheckKind::BinomPolylogSum,
        CheckKind::PsiKernel,
        CheckKind::AsymptoticDuality,
        CheckKind::SymmetricIdentity,
        CheckKind::ShuffleReflection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::PadicDuality => "padic_duality",
            CheckKind::OneVarDuality => "one_var_duality",
            CheckKind::ReflectionAllOnes => "reflection_all_ones",
            CheckKind::ReflectionLeveled => "reflection_leveled",
            CheckKind::MultiVarDuality => "multi_var_duality",
            CheckKind::Reversal => "reversal",
            CheckKind::BinomExpansion => "binom_expansion",
            CheckKind::BinomPolylogSum => "binom_polylog_sum",
            CheckKind::PsiKernel => "psi_kernel",
            CheckKind::AsymptoticDuality => "asymptotic_duality",
            CheckKind::SymmetricIdentity => "symmetric_identity",
            CheckKind::ShuffleReflection => "shuffle_reflection",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|c| c.name() == name)
    }
}

/// Output format for [`emit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Sweep parameters. `weight_max` bounds index weights (and the variable
/// count of the all-ones checks); `precision_max` bounds n.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub prime_min: u64,
    pub prime_max: u64,
    pub precision_max: u32,
    pub weight_max: u32,
    pub checks: Vec<CheckKind>,
    pub jobs: usize,
    pub format: ReportFormat,
    /// Emit measured per-check times. Off by default: timing varies between
    /// runs, and default reports are byte-reproducible.
    pub include_timings: bool,
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.prime_min < 2 {
            return Err(Error::Config("prime range must start at 2 or above".into()));
        }
        if self.prime_min > self.prime_max {
            return Err(Error::Config(format!(
                "empty prime range {}..{}",
                self.prime_min, self.prime_max
            )));
        }
        if self.precision_max < 1 {
            return Err(Error::Config("precision must be >= 1".into()));
        }
        if self.weight_max < 1 {
            return Err(Error::Config("weight must be >= 1".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        if self.jobs < 1 {
            return Err(Error::Config("jobs must be >= 1".into()));
        }
        Ok(())
    }
}

pub fn primes_in(min: u64, max: u64) -> Vec<u64> {
    (min..=max).filter(|&p| check_prime(p).is_ok()).collect()
}

enum WorkItem {
    PadicDuality { p: u64, n: u32, k: Index },
    OneVarDuality { p: u64, n: u32, k: Index },
    ReflectionAllOnes { p: u64, n: u32, w: u32 },
    ReflectionLeveled { p: u64, n: u32, w: u32 },
    MultiVarDuality { p: u64, n: u32, blocks: Vec<Index> },
    Reversal { p: u64, n: u32, k: Index, star: bool },
    BinomExpansion { p: u64, n: u32, arg: u64 },
    BinomPolylogSum { p: u64, n: u32, w: u32 },
    PsiKernel { p: u64, k: Index },
    AsymptoticDuality { p: u64, n: u32, k: Index },
    SymmetricIdentity { n_cap: u64, w: u32 },
    ShuffleReflection { n_cap: u64, w: u32 },
}

const ODD_ONLY: &str = "requires an odd prime";

fn odd_skip(check: CheckKind, pars: crate::report::Params) -> CheckReport {
    CheckReport::skipped(check.name(), pars, ODD_ONLY)
}

fn eval(item: &WorkItem) -> Result<CheckReport> {
    match item {
        WorkItem::PadicDuality { p, n, k } => series::check_padic_duality(*p, *n, k),
        WorkItem::OneVarDuality { p, n, k } => {
            let pars = params([
                ("index", ParamValue::Str(k.to_string())),
                ("p", ParamValue::Int(*p as i64)),
                ("n", ParamValue::Int(*n as i64)),
            ]);
            if *p == 2 {
                Ok(odd_skip(CheckKind::OneVarDuality, pars))
            } else {
                series::check_one_var_duality(*p, *n, k)
            }
        }
        WorkItem::ReflectionAllOnes { p, n, w } | WorkItem::ReflectionLeveled { p, n, w } => {
            let leveled = matches!(item, WorkItem::ReflectionLeveled { .. });
            let kind = if leveled {
                CheckKind::ReflectionLeveled
            } else {
                CheckKind::ReflectionAllOnes
            };
            let pars = params([
                ("w", ParamValue::Int(*w as i64)),
                ("p", ParamValue::Int(*p as i64)),
                ("n", ParamValue::Int(*n as i64)),
            ]);
            if *p == 2 {
                Ok(odd_skip(kind, pars))
            } else if leveled {
                series::check_reflection_leveled(*p, *n, *w)
            } else {
                series::check_reflection_all_ones(*p, *n, *w)
            }
        }
        WorkItem::MultiVarDuality { p, n, blocks } => {
            let rendered: Vec<String> = blocks.iter().map(Index::to_string).collect();
            let pars = params([
                ("blocks", ParamValue::Str(rendered.join("|"))),
                ("p", ParamValue::Int(*p as i64)),
                ("n", ParamValue::Int(*n as i64)),
            ]);
            if *p == 2 {
                Ok(odd_skip(CheckKind::MultiVarDuality, pars))
            } else {
                series::check_multi_var_duality(*p, *n, blocks)
            }
        }
        WorkItem::Reversal { p, n, k, star } => series::check_reversal(*p, *n, k, *star),
        WorkItem::BinomExpansion { p, n, arg } => series::check_binom_expansion(*p, *n, *arg),
        WorkItem::BinomPolylogSum { p, n, w } => {
            let pars = params([
                ("w", ParamValue::Int(*w as i64)),
                ("p", ParamValue::Int(*p as i64)),
                ("n", ParamValue::Int(*n as i64)),
            ]);
            if *p == 2 {
                Ok(odd_skip(CheckKind::BinomPolylogSum, pars))
            } else {
                series::check_binom_polylog_sum(*p, *n, *w)
            }
        }
        WorkItem::PsiKernel { p, k } => check_psi_kernel(&HWord::from_index(k), *p),
        WorkItem::AsymptoticDuality { p, n, k } => {
            check_asymptotic_duality(&HWord::from_index(k), *p, *n)
        }
        WorkItem::SymmetricIdentity { n_cap, w } => {
            let t0 = Instant::now();
            let (lhs, rhs) = symmetric_identity_sides(*n_cap, *w as usize);
            let pars = params([
                ("N", ParamValue::Int(*n_cap as i64)),
                ("w", ParamValue::Int(*w as i64)),
            ]);
            let diff = lhs.sub(&rhs);
            Ok(CheckReport::finish(
                CheckKind::SymmetricIdentity.name(),
                pars,
                diff.is_zero(),
                diff,
                t0,
            ))
        }
        WorkItem::ShuffleReflection { n_cap, w } => {
            let t0 = Instant::now();
            let (lhs, rhs) = shuffle_reflection_sides(*n_cap, *w as usize);
            let pars = params([
                ("N", ParamValue::Int(*n_cap as i64)),
                ("w", ParamValue::Int(*w as i64)),
            ]);
            let diff = lhs.sub(&rhs);
            Ok(CheckReport::finish(
                CheckKind::ShuffleReflection.name(),
                pars,
                diff.is_zero(),
                diff,
                t0,
            ))
        }
    }
}

/// Blocks (k_1, ..., k_r) for the multi-variable duality: single indices and
/// ordered pairs whose total weight stays within the bound.
fn duality_blocks(weight_max: u32) -> Vec<Vec<Index>> {
    let singles = indices_up_to_weight(weight_max);
    let mut blocks: Vec<Vec<Index>> = singles.iter().map(|k| vec![k.clone()]).collect();
    for a in &singles {
        for b in &singles {
            if a.weight() + b.weight() <= weight_max {
                blocks.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    blocks
}

fn generate(cfg: &SweepConfig) -> Vec<WorkItem> {
    let primes = primes_in(cfg.prime_min, cfg.prime_max);
    let indices = indices_up_to_weight(cfg.weight_max);
    let mut items = Vec::new();
    for check in &cfg.checks {
        match check {
            CheckKind::PadicDuality | CheckKind::OneVarDuality | CheckKind::AsymptoticDuality => {
                for &p in &primes {
                    for n in 1..=cfg.precision_max {
                        for k in &indices {
                            items.push(match check {
                                CheckKind::PadicDuality => WorkItem::PadicDuality {
                                    p,
                                    n,
                                    k: k.clone(),
                                },
                                CheckKind::OneVarDuality => WorkItem::OneVarDuality {
                                    p,
                                    n,
                                    k: k.clone(),
                                },
                                _ => WorkItem::AsymptoticDuality {
                                    p,
                                    n,
                                    k: k.clone(),
                                },
                            });
                        }
                    }
                }
            }
            CheckKind::ReflectionAllOnes | CheckKind::ReflectionLeveled | CheckKind::BinomPolylogSum => {
                for &p in &primes {
                    for n in 1..=cfg.precision_max {
                        for w in 1..=cfg.weight_max {
                            items.push(match check {
                                CheckKind::ReflectionAllOnes => {
                                    WorkItem::ReflectionAllOnes { p, n, w }
                                }
                                CheckKind::ReflectionLeveled => {
                                    WorkItem::ReflectionLeveled { p, n, w }
                                }
                                _ => WorkItem::BinomPolylogSum { p, n, w },
                            });
                        }
                    }
                }
            }
            CheckKind::MultiVarDuality => {
                let blocks = duality_blocks(cfg.weight_max);
                for &p in &primes {
                    for n in 1..=cfg.precision_max {
                        for b in &blocks {
                            items.push(WorkItem::MultiVarDuality {
                                p,
                                n,
                                blocks: b.clone(),
                            });
                        }
                    }
                }
            }
            CheckKind::Reversal => {
                for &p in &primes {
                    for n in 1..=cfg.precision_max {
                        for k in &indices {
                            for star in [false, true] {
                                items.push(WorkItem::Reversal {
                                    p,
                                    n,
                                    k: k.clone(),
                                    star,
                                });
                            }
                        }
                    }
                }
            }
            CheckKind::BinomExpansion => {
                for &p in &primes {
                    for n in 1..=cfg.precision_max {
                        for arg in 1..p {
                            items.push(WorkItem::BinomExpansion { p, n, arg });
                        }
                    }
                }
            }
            CheckKind::PsiKernel => {
                for &p in &primes {
                    for k in &indices {
                        items.push(WorkItem::PsiKernel { p, k: k.clone() });
                    }
                }
            }
            CheckKind::SymmetricIdentity | CheckKind::ShuffleReflection => {
                // Exact identities over Q: prime-independent, one item per
                // (N, w); w is capped at 3 to keep expansion sizes sane.
                for n_cap in 1..=8u64 {
                    for w in 1..=cfg.weight_max.min(3) {
                        items.push(match check {
                            CheckKind::SymmetricIdentity => {
                                WorkItem::SymmetricIdentity { n_cap, w }
                            }
                            _ => WorkItem::ShuffleReflection { n_cap, w },
                        });
                    }
                }
            }
        }
    }
    items
}

/// Run every selected check over the configured ranges. Reports come back
/// sorted by (check, parameters, p, n) regardless of the parallelism degree.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<CheckReport>> {
    cfg.validate()?;
    let items = generate(cfg);
    let mut reports: Vec<CheckReport> = if cfg.jobs == 1 {
        items.iter().map(eval).collect::<Result<Vec<_>>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
        pool.install(|| items.par_iter().map(eval).collect::<Result<Vec<_>>>())?
    };
    reports.sort_by_key(CheckReport::sort_key);
    Ok(reports)
}

/// (total, failed, skipped) counts for a report set.
pub fn summarize(reports: &[CheckReport]) -> (usize, usize, usize) {
    let failed = reports.iter().filter(|r| !r.pass).count();
    let skipped = reports.iter().filter(|r| r.is_skipped()).count();
    (reports.len(), failed, skipped)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Render reports. Timings are emitted as 0 unless `include_timings` is set,
/// keeping default output byte-identical across runs.
pub fn emit(reports: &[CheckReport], format: ReportFormat, include_timings: bool) -> String {
    match format {
        ReportFormat::Json => {
            let cleaned: Vec<CheckReport> = reports
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    if !include_timings {
                        r.ms = 0.0;
                    }
                    r
                })
                .collect();
            serde_json::to_string_pretty(&cleaned).expect("reports serialize")
        }
        ReportFormat::Csv => {
            let mut out = String::from("check,params,p,n,pass,witness,ms\n");
            for r in reports {
                let pars: Vec<String> = r
                    .params
                    .iter()
                    .filter(|(k, _)| k.as_str() != "p" && k.as_str() != "n")
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let p = r.param_int("p").map(|v| v.to_string()).unwrap_or_default();
                let n = r.param_int("n").map(|v| v.to_string()).unwrap_or_default();
                let ms = if include_timings {
                    format!("{:.3}", r.ms)
                } else {
                    "0".to_string()
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    csv_field(&r.check),
                    csv_field(&pars.join(";")),
                    p,
                    n,
                    r.pass,
                    csv_field(r.witness.as_deref().unwrap_or("")),
                    ms
                ));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(checks: Vec<CheckKind>) -> SweepConfig {
        SweepConfig {
            prime_min: 3,
            prime_max: 7,
            precision_max: 2,
            weight_max: 2,
            checks,
            jobs: 1,
            format: ReportFormat::Json,
            include_timings: false,
        }
    }

    #[test]
    fn predicted_report_counts() {
        // 3 primes x 2 precisions x 3 indices.
        let reports = run_sweep(&cfg(vec![CheckKind::PadicDuality])).unwrap();
        assert_eq!(reports.len(), 18);
        assert!(reports.iter().all(|r| r.pass));

        // p = 5 only: 4 argument values x 2 precisions.
        let mut c = cfg(vec![CheckKind::BinomExpansion]);
        c.prime_min = 5;
        c.prime_max = 5;
        let reports = run_sweep(&c).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.pass));
    }

    #[test]
    fn empty_check_set_is_a_config_error() {
        assert!(matches!(
            run_sweep(&cfg(vec![])),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn bad_ranges_are_config_errors() {
        let mut c = cfg(vec![CheckKind::PadicDuality]);
        c.prime_min = 11;
        c.prime_max = 7;
        assert!(matches!(run_sweep(&c), Err(Error::Config(_))));
        let mut c = cfg(vec![CheckKind::PadicDuality]);
        c.jobs = 0;
        assert!(matches!(run_sweep(&c), Err(Error::Config(_))));
    }

    #[test]
    fn skips_are_reports_too() {
        let mut c = cfg(vec![CheckKind::OneVarDuality]);
        c.prime_min = 2;
        c.prime_max = 3;
        c.precision_max = 1;
        let reports = run_sweep(&c).unwrap();
        // 2 primes x 1 precision x 3 indices; the p = 2 third is skipped.
        assert_eq!(reports.len(), 6);
        let (_, failed, skipped) = summarize(&reports);
        assert_eq!(failed, 0);
        assert_eq!(skipped, 3);
    }

    #[test]
    fn output_is_identical_across_jobs() {
        let mut c = cfg(CheckKind::ALL.to_vec());
        let sequential = emit(&run_sweep(&c).unwrap(), ReportFormat::Json, false);
        c.jobs = 8;
        let parallel = emit(&run_sweep(&c).unwrap(), ReportFormat::Json, false);
        assert_eq!(sequential, parallel);

        let csv_seq = emit(&run_sweep(&c).unwrap(), ReportFormat::Csv, false);
        c.jobs = 1;
        let csv_par = emit(&run_sweep(&c).unwrap(), ReportFormat::Csv, false);
        assert_eq!(csv_seq, csv_par);
    }

    #[test]
    fn emit_edge_cases() {
        assert_eq!(emit(&[], ReportFormat::Json, false), "[]");
        let reports = run_sweep(&cfg(vec![CheckKind::PadicDuality])).unwrap();
        let json = emit(&reports, ReportFormat::Json, false);
        assert!(json.contains("\"witness\": null"));
        let csv = emit(&reports, ReportFormat::Csv, false);
        let first_line = csv.lines().nth(1).unwrap();
        // Index parameters contain commas and must be quoted.
        assert!(first_line.starts_with("padic_duality,\"index="));
    }

    #[test]
    fn check_names_roundtrip() {
        for kind in CheckKind::ALL {
            assert_eq!(CheckKind::from_name(kind.name()), Some(kind));
        }
        assert_eq!(CheckKind::from_name("nope"), None);
    }
}
