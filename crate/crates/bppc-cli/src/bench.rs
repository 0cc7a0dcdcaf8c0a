//! The experiment harness: runs the configured algorithms over every cell of
//! the grid, verifies every packing, and aggregates per-cell metrics.
//!
//! Per cell: the share of instances each algorithm certifies (value = lower
//! bound), the head-to-head win shares, mean relative gaps, and min/max/mean
//! solve times. Cells run on a worker pool; all randomness is derived from
//! the master seed, so results are independent of scheduling. CSV output
//! keeps the deterministic columns first and the timing columns last.

use crate::config::ExperimentConfig;
use bppc::generate::{build_class, mix_seed, ClassKind, ClassSpec};
use bppc::oracle::{exact_min_bins, OracleLimit};
use bppc::{bn, classic, gap, lb_bppc, verify_packing, Instance};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("generation failed: {0}")]
    Generation(#[from] bppc::Error),
    #[error("algorithm {algorithm} produced an infeasible packing on instance seed {seed}: {verdict:?}")]
    Infeasible {
        algorithm: &'static str,
        seed: u64,
        verdict: bppc::Feasibility,
    },
}

/// Identifies one cell of the experiment grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellKey {
    pub class: ClassKind,
    pub n: usize,
    pub capacity: u32,
    pub density: f64,
}

/// min/max/mean seconds over a cell's solves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Timing {
    pub min: f64,
    pub max: f64,
    pub avg: f64,
}

impl Timing {
    fn from_samples(samples: &[f64]) -> Option<Self> {
        if samples.is_empty() {
            return None;
        }
        let min = samples.iter().copied().fold(f64::INFINITY, f64::min);
        let max = samples.iter().copied().fold(0.0f64, f64::max);
        let avg = samples.iter().sum::<f64>() / samples.len() as f64;
        Some(Timing { min, max, avg })
    }
}

/// One aggregated benchmark-table cell.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRow {
    pub key: CellKey,
    pub count: usize,
    pub m_eq_lb_pct: Option<f64>,
    pub bn_eq_lb_pct: Option<f64>,
    pub m_lt_bn_pct: Option<f64>,
    pub bn_lt_m_pct: Option<f64>,
    pub gap_m_pct: Option<f64>,
    pub gap_bn_pct: Option<f64>,
    pub timing_bn: Option<Timing>,
    pub timing_m: Option<Timing>,
    pub timing_exact: Option<Timing>,
}

/// Value and wall time of one algorithm on one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgOutcome {
    pub value: u64,
    pub seconds: f64,
}

/// One instance's results, for the per-instance log.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceLog {
    pub key: CellKey,
    pub index: usize,
    pub seed: u64,
    pub lower_bound: u64,
    pub bn: Option<AlgOutcome>,
    pub m: Option<AlgOutcome>,
    pub exact: Option<AlgOutcome>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub rows: Vec<MetricsRow>,
    pub logs: Vec<InstanceLog>,
}

/// Seed for a cell, derived from the master seed and the cell coordinates.
/// The density enters as micro-units so the usual one-decimal grids map to
/// distinct integers.
fn cell_seed(config: &ExperimentConfig, key: &CellKey) -> u64 {
    let class_tag = match key.class {
        ClassKind::Ti => 1u64,
        ClassKind::Tm => 2,
        ClassKind::Ts => 3,
    };
    let mut seed = mix_seed(config.seed, class_tag);
    seed = mix_seed(seed, key.n as u64);
    seed = mix_seed(seed, key.capacity as u64);
    mix_seed(seed, (key.density * 1e6).round() as u64)
}

fn run_cell(config: &ExperimentConfig, key: CellKey) -> Result<(MetricsRow, Vec<InstanceLog>), BenchError> {
    let spec = ClassSpec::new(
        key.class,
        key.n,
        key.capacity,
        key.density,
        config.count,
        cell_seed(config, &key),
    );
    let instances = build_class(&spec)?;

    let mut logs = Vec::with_capacity(instances.len());
    for gi in &instances {
        logs.push(run_instance(config, key, gi.index, gi.seed, &gi.instance)?);
    }

    let count = logs.len();
    let pct = |hits: usize| 100.0 * hits as f64 / count as f64;
    let lb_of = |log: &InstanceLog| log.lower_bound;

    let mut row = MetricsRow {
        key,
        count,
        m_eq_lb_pct: None,
        bn_eq_lb_pct: None,
        m_lt_bn_pct: None,
        bn_lt_m_pct: None,
        gap_m_pct: None,
        gap_bn_pct: None,
        timing_bn: None,
        timing_m: None,
        timing_exact: None,
    };
    if config.algs.bn {
        let values: Vec<u64> = logs.iter().map(|l| l.bn.unwrap().value).collect();
        row.bn_eq_lb_pct = Some(pct(logs
            .iter()
            .zip(&values)
            .filter(|(l, &v)| v == lb_of(l))
            .count()));
        row.gap_bn_pct = Some(mean_gap_pct(&logs, &values));
        row.timing_bn =
            Timing::from_samples(&logs.iter().map(|l| l.bn.unwrap().seconds).collect::<Vec<_>>());
    }
    if config.algs.m {
        let values: Vec<u64> = logs.iter().map(|l| l.m.unwrap().value).collect();
        row.m_eq_lb_pct = Some(pct(logs
            .iter()
            .zip(&values)
            .filter(|(l, &v)| v == lb_of(l))
            .count()));
        row.gap_m_pct = Some(mean_gap_pct(&logs, &values));
        row.timing_m =
            Timing::from_samples(&logs.iter().map(|l| l.m.unwrap().seconds).collect::<Vec<_>>());
    }
    if config.algs.bn && config.algs.m {
        let m_lt = logs
            .iter()
            .filter(|l| l.m.unwrap().value < l.bn.unwrap().value)
            .count();
        let bn_lt = logs
            .iter()
            .filter(|l| l.bn.unwrap().value < l.m.unwrap().value)
            .count();
        row.m_lt_bn_pct = Some(pct(m_lt));
        row.bn_lt_m_pct = Some(pct(bn_lt));
    }
    if config.algs.exact {
        row.timing_exact = Timing::from_samples(
            &logs.iter().map(|l| l.exact.unwrap().seconds).collect::<Vec<_>>(),
        );
    }
    Ok((row, logs))
}

fn mean_gap_pct(logs: &[InstanceLog], values: &[u64]) -> f64 {
    let total: f64 = logs
        .iter()
        .zip(values)
        .map(|(l, &v)| gap(v, l.lower_bound).expect("benchmark lower bounds are positive"))
        .sum();
    100.0 * total / logs.len() as f64
}

fn run_instance(
    config: &ExperimentConfig,
    key: CellKey,
    index: usize,
    seed: u64,
    instance: &Instance,
) -> Result<InstanceLog, BenchError> {
    let lower_bound = lb_bppc(instance)?;
    let mut log = InstanceLog {
        key,
        index,
        seed,
        lower_bound,
        bn: None,
        m: None,
        exact: None,
    };
    if config.algs.bn {
        let (packing, report) = bn::solve(instance)?;
        let verdict = verify_packing(instance, &packing);
        if !verdict.is_feasible() {
            return Err(BenchError::Infeasible {
                algorithm: "bn",
                seed,
                verdict,
            });
        }
        log.bn = Some(AlgOutcome {
            value: report.value,
            seconds: report.elapsed_secs(),
        });
    }
    if config.algs.m {
        let (packing, report) = classic::best_of_m(instance)?;
        let verdict = verify_packing(instance, &packing);
        if !verdict.is_feasible() {
            return Err(BenchError::Infeasible {
                algorithm: "m",
                seed,
                verdict,
            });
        }
        log.m = Some(AlgOutcome {
            value: report.value,
            seconds: report.elapsed_secs(),
        });
    }
    if config.algs.exact {
        let started = Instant::now();
        let (value, packing) = exact_min_bins(instance, OracleLimit::default())?;
        let seconds = started.elapsed().as_secs_f64();
        let verdict = verify_packing(instance, &packing);
        if !verdict.is_feasible() {
            return Err(BenchError::Infeasible {
                algorithm: "exact",
                seed,
                verdict,
            });
        }
        log.exact = Some(AlgOutcome { value, seconds });
    }
    Ok(log)
}

/// Runs the whole grid. Cells execute on the rayon pool; rows and logs come
/// back in grid order (n-major, then capacity, then density).
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult, BenchError> {
    let mut keys = Vec::with_capacity(config.cells());
    for &n in &config.ns {
        for &capacity in &config.capacities {
            for &density in &config.densities {
                keys.push(CellKey {
                    class: config.class,
                    n,
                    capacity,
                    density,
                });
            }
        }
    }
    let outcomes: Result<Vec<_>, BenchError> = keys
        .into_par_iter()
        .map(|key| run_cell(config, key))
        .collect();
    let mut rows = Vec::new();
    let mut logs = Vec::new();
    for (row, cell_logs) in outcomes? {
        rows.push(row);
        logs.extend(cell_logs);
    }
    Ok(ExperimentResult { rows, logs })
}

// --- CSV emission ----------------------------------------------------------

/// Header of the metrics CSV; the timing columns come last so byte
/// comparisons can stop at `gap_bn_pct`.
pub const METRICS_HEADER: &str = "class,n,b,density,count,\
m_eq_lb_pct,bn_eq_lb_pct,m_lt_bn_pct,bn_lt_m_pct,gap_m_pct,gap_bn_pct,\
t_min_bn,t_max_bn,t_avg_bn,t_min_m,t_max_m,t_avg_m,t_min_exact,t_max_exact,t_avg_exact";

pub const LOG_HEADER: &str = "class,n,b,density,index,seed,lower_bound,\
bn_value,bn_seconds,m_value,m_seconds,exact_value,exact_seconds";

/// Percentages round half-up to two decimals.
fn fmt_pct(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{:.2}", (v * 100.0).round() / 100.0),
        None => String::new(),
    }
}

/// Seconds round half-up to four decimals.
fn fmt_secs(value: f64) -> String {
    format!("{:.4}", (value * 1e4).round() / 1e4)
}

fn fmt_timing(t: &Option<Timing>) -> String {
    match t {
        Some(t) => format!("{},{},{}", fmt_secs(t.min), fmt_secs(t.max), fmt_secs(t.avg)),
        None => ",,".to_string(),
    }
}

fn fmt_key(key: &CellKey) -> String {
    format!(
        "{},{},{},{:.4}",
        key.class.name(),
        key.n,
        key.capacity,
        key.density
    )
}

pub fn metrics_to_csv(rows: &[MetricsRow]) -> String {
    let mut out = String::from(METRICS_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            fmt_key(&row.key),
            row.count,
            fmt_pct(row.m_eq_lb_pct),
            fmt_pct(row.bn_eq_lb_pct),
            fmt_pct(row.m_lt_bn_pct),
            fmt_pct(row.bn_lt_m_pct),
            fmt_pct(row.gap_m_pct),
            fmt_pct(row.gap_bn_pct),
            fmt_timing(&row.timing_bn),
            fmt_timing(&row.timing_m),
            fmt_timing(&row.timing_exact),
        );
    }
    out
}

pub fn logs_to_csv(logs: &[InstanceLog]) -> String {
    let mut out = String::from(LOG_HEADER);
    out.push('\n');
    for log in logs {
        let alg = |o: &Option<AlgOutcome>| match o {
            Some(o) => format!("{},{}", o.value, fmt_secs(o.seconds)),
            None => ",".to_string(),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_key(&log.key),
            log.index,
            log.seed,
            log.lower_bound,
            alg(&log.bn),
            alg(&log.m),
            alg(&log.exact),
        );
    }
    out
}

/// Drops the timing columns of a metrics CSV, leaving the deterministic
/// prefix (used by reproducibility checks).
pub fn strip_timing_columns(csv: &str) -> String {
    csv.lines()
        .map(|line| {
            line.split(',')
                .take(11)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}
