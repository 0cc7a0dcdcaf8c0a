use anyhow::{bail, Context, Result};
use bppc::generate::{
    build_class, generate_interval_model, generate_threshold_graph, mix_seed, ClassKind,
    ClassSpec, IntervalGenSpec, ThresholdGenSpec,
};
use bppc::oracle::{exact_min_bins, OracleLimit};
use bppc::{bn, classic, edge_density, lb_bin_packing, lb_bppc, verify_packing, Instance};
use bppc_cli::bench::{logs_to_csv, metrics_to_csv, run_experiment};
use bppc_cli::config::read_config;
use bppc_cli::format::{read_any_instance, write_instance};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "bppc",
    about = "Solvers and benchmark tooling for bin packing with conflicts on interval graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Ti,
    Tm,
    Ts,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Interval,
    Threshold,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Bn,
    M,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Generate benchmark instances into a directory
    Gen {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b: u32,
        /// Density target (ti) or threshold parameter d (tm/ts)
        #[arg(long)]
        density: f64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate one random graph and print it with its measured density
    GenGraph {
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long)]
        n: usize,
        /// Density target (interval) or threshold parameter d (threshold)
        #[arg(long)]
        param: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Solve one instance file
    Solve {
        #[arg(long, value_enum)]
        alg: Algorithm,
        #[arg(long = "in")]
        input: PathBuf,
        /// Emit a JSON object instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Run a configured experiment grid and write metrics CSVs
    Bench {
        #[arg(long)]
        config: PathBuf,
        /// Metrics CSV path (overrides the config's `out`)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure the empirical edge density of a generator
    DensityCheck {
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        param: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen {
            class,
            n,
            b,
            density,
            count,
            seed,
            out,
        } => cmd_gen(class, n, b, density, count, seed, out),
        Command::GenGraph {
            kind,
            n,
            param,
            seed,
        } => cmd_gen_graph(kind, n, param, seed),
        Command::Solve { alg, input, json } => cmd_solve(alg, input, json),
        Command::Bench { config, out } => cmd_bench(config, out),
        Command::DensityCheck {
            kind,
            n,
            param,
            trials,
            seed,
        } => cmd_density_check(kind, n, param, trials, seed),
    }
}

fn class_kind(class: ClassArg) -> ClassKind {
    match class {
        ClassArg::Ti => ClassKind::Ti,
        ClassArg::Tm => ClassKind::Tm,
        ClassArg::Ts => ClassKind::Ts,
    }
}

fn cmd_gen(
    class: ClassArg,
    n: usize,
    b: u32,
    density: f64,
    count: usize,
    seed: u64,
    out: PathBuf,
) -> Result<()> {
    let kind = class_kind(class);
    let spec = ClassSpec::new(kind, n, b, density, count, seed);
    let instances = build_class(&spec)?;
    std::fs::create_dir_all(&out)
        .with_context(|| format!("cannot create {}", out.display()))?;
    for gi in &instances {
        let name = format!(
            "{}_n{}_b{}_d{}_{:03}.bppc",
            kind.name(),
            n,
            b,
            density,
            gi.index
        );
        write_instance(&gi.instance, &out.join(name))?;
    }
    println!("wrote {} instances to {}", instances.len(), out.display());
    Ok(())
}

fn cmd_gen_graph(kind: GraphKind, n: usize, param: f64, seed: u64) -> Result<()> {
    match kind {
        GraphKind::Interval => {
            let model = generate_interval_model(&IntervalGenSpec::new(n, param, seed));
            let graph = bppc::build_conflict_graph(&model);
            println!("kind interval");
            println!("n {n}");
            println!("param {param}");
            println!("seed {seed}");
            println!("edges {}", graph.edge_count());
            println!("density {:.4}", edge_density(&graph)?);
            for iv in model.intervals() {
                println!("interval {} {} {}", iv.id, iv.l, iv.r);
            }
        }
        GraphKind::Threshold => {
            let tg = generate_threshold_graph(&ThresholdGenSpec::new(n, param, seed));
            println!("kind threshold");
            println!("n {n}");
            println!("param {param}");
            println!("seed {seed}");
            println!("edges {}", tg.graph.edge_count());
            println!("density {:.4}", edge_density(&tg.graph)?);
            for (v, p) in tg.p.iter().enumerate() {
                println!("vertex {v} {p:.6}");
            }
        }
    }
    Ok(())
}

fn cmd_solve(alg: Algorithm, input: PathBuf, json: bool) -> Result<()> {
    let instance = read_any_instance(&input)?;
    let (packing, report) = match alg {
        Algorithm::Bn => bn::solve(&instance)?,
        Algorithm::M => classic::best_of_m(&instance)?,
        Algorithm::Exact => {
            let started = Instant::now();
            let (value, packing) = exact_min_bins(&instance, OracleLimit::default())?;
            let lower_bound = if instance.model().is_some() {
                lb_bppc(&instance)?
            } else {
                lb_bin_packing(instance.weights(), instance.capacity())?
            };
            let report = bppc::SolveReport {
                algorithm: "exact",
                value,
                lower_bound,
                certified_optimal: value == lower_bound,
                elapsed: started.elapsed(),
                feasible: true,
            };
            (packing, report)
        }
    };
    let verdict = verify_packing(&instance, &packing);
    if !verdict.is_feasible() {
        bail!("solver returned an infeasible packing: {verdict:?}");
    }
    if json {
        let obj = serde_json::json!({
            "algorithm": report.algorithm,
            "value": report.value,
            "lower_bound": report.lower_bound,
            "certified": report.certified_optimal,
            "elapsed_s": report.elapsed_secs(),
        });
        println!("{obj}");
    } else {
        // Timing goes to stderr so stdout stays byte-identical across runs.
        println!("algorithm {}", report.algorithm);
        println!("value {}", report.value);
        println!("lower_bound {}", report.lower_bound);
        println!("certified {}", report.certified_optimal);
        println!("feasible {}", verdict.is_feasible());
        eprintln!("elapsed_s {:.4}", report.elapsed_secs());
    }
    Ok(())
}

fn cmd_bench(config_path: PathBuf, out: Option<PathBuf>) -> Result<()> {
    let config = read_config(&config_path)?;
    let out = out
        .or_else(|| config.out.clone())
        .context("no output path: pass --out or set `out` in the config")?;
    let result = run_experiment(&config)?;
    std::fs::write(&out, metrics_to_csv(&result.rows))
        .with_context(|| format!("cannot write {}", out.display()))?;
    let log_path = out.with_extension("instances.csv");
    std::fs::write(&log_path, logs_to_csv(&result.logs))
        .with_context(|| format!("cannot write {}", log_path.display()))?;
    println!(
        "ran {} cells ({} instances); metrics in {}, per-instance log in {}",
        result.rows.len(),
        result.logs.len(),
        out.display(),
        log_path.display()
    );
    Ok(())
}

fn cmd_density_check(kind: GraphKind, n: usize, param: f64, trials: usize, seed: u64) -> Result<()> {
    if trials == 0 {
        bail!("trials must be at least 1");
    }
    let pairs = n as f64 * (n as f64 - 1.0) / 2.0;
    let samples: Vec<f64> = (0..trials)
        .map(|t| {
            let s = mix_seed(seed, t as u64);
            match kind {
                GraphKind::Interval => {
                    let model = generate_interval_model(&IntervalGenSpec::new(n, param, s));
                    model.edge_count() as f64 / pairs
                }
                GraphKind::Threshold => bppc::generate::threshold_density_sample(n, param, s),
            }
        })
        .collect();
    let mean = samples.iter().sum::<f64>() / trials as f64;
    let var = samples.iter().map(|d| (d - mean).powi(2)).sum::<f64>()
        / (trials as f64 - 1.0).max(1.0);
    println!(
        "kind {}",
        match kind {
            GraphKind::Interval => "interval",
            GraphKind::Threshold => "threshold",
        }
    );
    println!("n {n}");
    println!("param {param}");
    println!("trials {trials}");
    println!("mean {mean:.4}");
    println!("stdev {:.4}", var.sqrt());
    Ok(())
}
