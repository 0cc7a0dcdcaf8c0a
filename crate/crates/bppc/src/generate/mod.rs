//! Random instance construction.
//!
//! Two graph generators are provided: an interval generator that targets a
//! requested edge density by controlling interval lengths, and a threshold
//! generator that draws a vertex value `p_i` uniformly from `[0,1)` and
//! connects `i, j` whenever `(p_i + p_j)/2 <= d`. On top of them sit the
//! benchmark instance classes:
//!
//! - `TI(n, B, Δ)`: interval graphs rejection-sampled into the density window
//!   `[Δ - 0.02, Δ + 0.02]`, weights uniform in `[20, 100]` (`Δ = 0` uses the
//!   disjoint unit-interval model instead),
//! - `TM(n, B, d)`: threshold graphs, weights uniform in `[20, 100]`,
//! - `TS(n, B, d)`: threshold graphs, weights uniform in `[500, 2500]`.
//!
//! All randomness flows through seeded ChaCha streams; identical specs and
//! seeds reproduce identical instances on every platform.

mod interval;
mod threshold;

pub use interval::{
    generate_disjoint_model, generate_interval_model, horizon, lambda_max, lambda_min_range,
    mean_length, IntervalGenSpec,
};
pub use threshold::{
    f_of_d, generate_threshold_graph, threshold_density_sample, ThresholdGenSpec, ThresholdGraph,
};

use crate::error::Error;
use crate::instance::Instance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The one RNG used everywhere: seedable and platform-independent.
pub type Rng64 = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng64 {
    Rng64::seed_from_u64(seed)
}

/// SplitMix64 step; the standard finalizer used to derive sub-seeds.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a sub-seed from a parent seed and a salt:
/// `splitmix64(parent ^ splitmix64(salt))`. Used for per-instance and
/// per-attempt streams so that parallel generation stays reproducible.
pub fn mix_seed(parent: u64, salt: u64) -> u64 {
    splitmix64(parent ^ splitmix64(salt))
}

const WEIGHT_SALT: u64 = 0x7765_6967_6874; // "weight"

/// `n` integers uniform on `{lo..hi}`, deterministic given the seed.
pub fn sample_weights(n: usize, lo: u32, hi: u32, seed: u64) -> Vec<u32> {
    assert!(1 <= lo && lo <= hi, "invalid weight range [{lo}, {hi}]");
    let mut rng = rng_from_seed(seed);
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// Benchmark instance family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// Interval graphs with a density target.
    Ti,
    /// Threshold graphs, moderate weights.
    Tm,
    /// Threshold graphs, large weights.
    Ts,
}

impl ClassKind {
    pub fn name(&self) -> &'static str {
        match self {
            ClassKind::Ti => "ti",
            ClassKind::Tm => "tm",
            ClassKind::Ts => "ts",
        }
    }

    /// The weight range each class draws from.
    pub fn weight_range(&self) -> (u32, u32) {
        match self {
            ClassKind::Ti | ClassKind::Tm => (20, 100),
            ClassKind::Ts => (500, 2500),
        }
    }
}

/// One cell of the benchmark grid: `count` instances of a class at fixed
/// `(n, B, density parameter)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub n: usize,
    pub capacity: u32,
    /// `Δ` (target edge density) for TI, `d` (threshold parameter) for TM/TS.
    pub density: f64,
    pub count: usize,
    pub seed: u64,
}

impl ClassSpec {
    pub fn new(kind: ClassKind, n: usize, capacity: u32, density: f64, count: usize, seed: u64) -> Self {
        assert!((0.0..=1.0).contains(&density), "density out of [0,1]");
        ClassSpec {
            kind,
            n,
            capacity,
            density,
            count,
            seed,
        }
    }
}

/// An instance plus the sub-seed that produced it.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub index: usize,
    pub seed: u64,
    pub instance: Instance,
}

/// TI instances are accepted when their empirical density lands within
/// `Δ ± DENSITY_WINDOW`.
pub const DENSITY_WINDOW: f64 = 0.02;

/// Attempts per instance before rejection sampling gives up.
pub const REJECTION_BUDGET: usize = 10_000;

/// Builds all instances of a cell. TI with `Δ > 0` rejection-samples interval
/// models into the density window; TI with `Δ = 0` uses the disjoint model;
/// TM/TS build threshold graphs with parameter `d`.
pub fn build_class(spec: &ClassSpec) -> Result<Vec<GeneratedInstance>, Error> {
    let mut out = Vec::with_capacity(spec.count);
    let (w_lo, w_hi) = spec.kind.weight_range();
    for index in 0..spec.count {
        let inst_seed = mix_seed(spec.seed, index as u64);
        let weights = sample_weights(spec.n, w_lo, w_hi, mix_seed(inst_seed, WEIGHT_SALT));
        let instance = match spec.kind {
            ClassKind::Ti => {
                let model = if spec.density == 0.0 {
                    generate_disjoint_model(spec.n)
                } else {
                    sample_model_in_window(spec, inst_seed)?
                };
                Instance::from_model(weights, spec.capacity, model)
                    .expect("class weights are capped below every benchmark capacity")
            }
            ClassKind::Tm | ClassKind::Ts => {
                let tg = generate_threshold_graph(&ThresholdGenSpec::new(
                    spec.n,
                    spec.density,
                    inst_seed,
                ));
                Instance::new(weights, spec.capacity, tg.graph, Some(tg.model))
                    .expect("threshold model induces its own graph")
            }
        };
        out.push(GeneratedInstance {
            index,
            seed: inst_seed,
            instance,
        });
    }
    Ok(out)
}

fn sample_model_in_window(
    spec: &ClassSpec,
    inst_seed: u64,
) -> Result<crate::interval::IntervalModel, Error> {
    let lo = spec.density - DENSITY_WINDOW;
    let hi = spec.density + DENSITY_WINDOW;
    let pairs = (spec.n as f64) * (spec.n as f64 - 1.0) / 2.0;
    for attempt in 0..REJECTION_BUDGET {
        let gen = IntervalGenSpec::new(spec.n, spec.density, mix_seed(inst_seed, attempt as u64));
        let model = generate_interval_model(&gen);
        let density = model.edge_count() as f64 / pairs;
        if density >= lo && density <= hi {
            return Ok(model);
        }
    }
    Err(Error::RejectionBudgetExhausted {
        n: spec.n,
        capacity: spec.capacity,
        density: spec.density,
        lo,
        hi,
        budget: REJECTION_BUDGET,
    })
}
