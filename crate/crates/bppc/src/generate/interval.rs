//! Density-targeted random interval models.
//!
//! The generator fixes a horizon `D = ⌊2.5 n⌋` and derives the mean interval
//! length `Λ̄` that makes the expected edge density of the intersection graph
//! equal the requested `δ`. Each interval then draws its own `Λ_min`, gets
//! the matching `Λ_max` from the closed form below, and picks one endpoint
//! uniformly (a fair coin decides which one comes first) and a length within
//! `[Λ_min, Λ_max]` capped by the horizon.

use super::{rng_from_seed, Rng64};
use crate::interval::IntervalModel;
use rand::Rng;

/// Parameters of the density-targeted interval generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalGenSpec {
    pub n: usize,
    /// Target edge density in `[0, 1]`.
    pub delta: f64,
    pub seed: u64,
}

impl IntervalGenSpec {
    pub fn new(n: usize, delta: f64, seed: u64) -> Self {
        assert!(n >= 2, "interval generation needs n >= 2");
        assert!((0.0..=1.0).contains(&delta), "delta out of [0,1]");
        IntervalGenSpec { n, delta, seed }
    }
}

/// Horizon `D = ⌊2.5 n⌋`.
pub fn horizon(n: usize) -> u32 {
    (5 * n / 2) as u32
}

/// Mean interval length `Λ̄ = δ · D · (n-1) / (2n)` that yields expected
/// density `δ` on horizon `D`.
pub fn mean_length(n: usize, delta: f64) -> f64 {
    delta * horizon(n) as f64 * (n as f64 - 1.0) / (2.0 * n as f64)
}

/// Sampling window for `Λ_min`:
/// `max{1, ⌈(4Λ̄ - D)/3⌉} .. ⌊Λ̄⌋` (inclusive). The lower cut keeps the
/// radicand of [`lambda_max`] nonnegative.
///
/// Expects `Λ̄ >= 1`; callers clamp smaller means up to 1 so every interval
/// keeps integer length at least one.
pub fn lambda_min_range(d: u32, mean: f64) -> (u32, u32) {
    debug_assert!(mean >= 1.0, "mean length below 1 must be clamped first");
    let lo = ((4.0 * mean - d as f64) / 3.0).ceil().max(1.0) as u32;
    let hi = mean.floor() as u32;
    debug_assert!(lo <= hi, "empty lambda_min window [{lo}, {hi}]");
    (lo, hi)
}

/// Largest admissible length for a given `Λ_min`:
/// `Λ_max = D - sqrt(D² - 4DΛ̄ + 2DΛ_min + 4Λ̄Λ_min - 3Λ_min²)`, floored.
///
/// For `Λ_min` inside [`lambda_min_range`] the radicand is nonnegative and
/// `Λ_min <= Λ_max <= D`.
pub fn lambda_max(d: u32, mean: f64, lambda_min: u32) -> u32 {
    let df = d as f64;
    let lm = lambda_min as f64;
    let radicand = df * df - 4.0 * df * mean + 2.0 * df * lm + 4.0 * mean * lm - 3.0 * lm * lm;
    debug_assert!(radicand > -1e-6, "negative radicand {radicand}");
    let value = df - radicand.max(0.0).sqrt();
    let floored = value.floor() as u32;
    debug_assert!(lambda_min <= floored && floored <= d);
    floored
}

/// Draws `n` intervals on `{0..D}`; expected edge density of the
/// intersection graph is `spec.delta`. Deterministic given the seed.
pub fn generate_interval_model(spec: &IntervalGenSpec) -> IntervalModel {
    let d = horizon(spec.n);
    // Integer endpoints force length >= 1; tiny targets degenerate to unit
    // intervals, which stay near density zero on a 2.5n horizon.
    let mean = mean_length(spec.n, spec.delta).max(1.0);
    let (lo, hi) = lambda_min_range(d, mean);
    let mut rng: Rng64 = rng_from_seed(spec.seed);
    let mut endpoints = Vec::with_capacity(spec.n);
    for _ in 0..spec.n {
        let lambda_min = rng.gen_range(lo..=hi);
        let lambda_cap = lambda_max(d, mean, lambda_min);
        let heads = rng.gen_range(0..2u32) == 0;
        let (l, r) = if heads {
            let r = rng.gen_range(lambda_min..=d);
            let len = rng.gen_range(lambda_min..=r.min(lambda_cap));
            (r - len, r)
        } else {
            let l = rng.gen_range(0..=d - lambda_min);
            let len = rng.gen_range(lambda_min..=(d - l).min(lambda_cap));
            (l, l + len)
        };
        endpoints.push((l, r));
    }
    IntervalModel::new(endpoints)
}

/// The canonical edgeless model: unit intervals `(h, h+1)` for `h < n`.
pub fn generate_disjoint_model(n: usize) -> IntervalModel {
    IntervalModel::new((0..n as u32).map(|h| (h, h + 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::leftmost_max_clique;
    use crate::graph::{build_conflict_graph, edge_density};

    #[test]
    fn horizon_examples() {
        assert_eq!(horizon(1000), 2500);
        assert_eq!(horizon(120), 300);
        assert_eq!(horizon(2), 5);
    }

    #[test]
    fn mean_length_examples() {
        assert_eq!(mean_length(1000, 0.0), 0.0);
        assert!((mean_length(1000, 0.4) - 499.5).abs() < 1e-9);
        assert!((mean_length(1000, 1.0) - 1248.75).abs() < 1e-9);
    }

    #[test]
    fn lambda_min_window_examples() {
        assert_eq!(lambda_min_range(2500, 499.5), (1, 499));
        assert_eq!(lambda_min_range(2500, 1248.75), (832, 1248));
        assert_eq!(lambda_min_range(2500, 1.0), (1, 1));
    }

    #[test]
    fn lambda_max_at_the_window_top_is_the_mean() {
        // Lambda_min = Λ̄ forces Λ_max = D - sqrt((D - Λ̄)²) = Λ̄.
        assert_eq!(lambda_max(2500, 500.0, 500), 500);
    }

    #[test]
    fn lambda_max_satisfies_the_mean_length_equation() {
        // Λ_max is the root of
        //   Λ̄ = [-Λ_max² - 3Λ_min² + 2D(Λ_max + Λ_min)] / (4(D - Λ_min));
        // check the unfloored root at the spec's sample points.
        for (d, mean, lm) in [(2500u32, 499.5f64, 1u32), (2500, 1248.75, 832)] {
            let df = d as f64;
            let lmf = lm as f64;
            let radicand =
                df * df - 4.0 * df * mean + 2.0 * df * lmf + 4.0 * mean * lmf - 3.0 * lmf * lmf;
            let lmax = df - radicand.sqrt();
            let recovered =
                (-lmax * lmax - 3.0 * lmf * lmf + 2.0 * df * (lmax + lmf)) / (4.0 * (df - lmf));
            assert!((recovered - mean).abs() < 1e-6, "root check failed: {recovered}");
            let floored = lambda_max(d, mean, lm);
            assert!(lm <= floored && floored <= d);
            assert!((floored as f64 - lmax).abs() <= 1.0);
        }
    }

    #[test]
    fn generated_intervals_respect_bounds() {
        for &delta in &[0.0, 0.1, 0.5, 0.9, 1.0] {
            let spec = IntervalGenSpec::new(300, delta, 99);
            let model = generate_interval_model(&spec);
            assert_eq!(model.len(), 300);
            let d = horizon(300);
            for iv in model.intervals() {
                assert!(iv.l < iv.r);
                assert!(iv.r <= d);
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = IntervalGenSpec::new(200, 0.4, 12345);
        assert_eq!(
            generate_interval_model(&spec),
            generate_interval_model(&spec)
        );
        let other = IntervalGenSpec::new(200, 0.4, 12346);
        assert_ne!(generate_interval_model(&spec), generate_interval_model(&other));
    }

    #[test]
    fn single_graph_density_lands_near_the_target() {
        let spec = IntervalGenSpec::new(500, 0.5, 777);
        let model = generate_interval_model(&spec);
        let g = build_conflict_graph(&model);
        let d = edge_density(&g).unwrap();
        assert!((d - 0.5).abs() <= 0.06, "single-graph density {d}");
        assert_eq!(model.edge_count(), g.edge_count());
    }

    #[test]
    fn zero_delta_degenerates_to_unit_lengths() {
        let spec = IntervalGenSpec::new(400, 0.0, 5);
        let model = generate_interval_model(&spec);
        assert!(model.intervals().iter().all(|iv| iv.length() == 1));
        let d = edge_density(&build_conflict_graph(&model)).unwrap();
        assert!(d < 0.01, "near-zero density expected, got {d}");
    }

    #[test]
    fn disjoint_model_examples() {
        let model = generate_disjoint_model(3);
        let pts: Vec<(u32, u32)> = model.intervals().iter().map(|iv| (iv.l, iv.r)).collect();
        assert_eq!(pts, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(model.edge_count(), 0);
        assert_eq!(leftmost_max_clique(&model).omega, 1);
    }
}
