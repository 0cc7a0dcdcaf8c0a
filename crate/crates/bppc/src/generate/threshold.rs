//! The threshold ("t-") generator and its density law.
//!
//! Every vertex draws `p_i` uniformly from `[0, 1)`; `(i, j)` becomes an edge
//! whenever `(p_i + p_j)/2 <= d`. The resulting graph is a threshold graph,
//! hence an interval graph; a staircase interval model is constructed
//! alongside so interval-based solvers can run on these instances.
//!
//! The parameter `d` is not the edge density. The density follows the law
//! [`f_of_d`], which the benchmark suites check empirically.

use super::{rng_from_seed, Rng64};
use crate::graph::ConflictGraph;
use crate::interval::IntervalModel;
use rand::Rng;

/// Parameters of the threshold generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdGenSpec {
    pub n: usize,
    /// Threshold parameter `d` in `[0, 1]`.
    pub d: f64,
    pub seed: u64,
}

impl ThresholdGenSpec {
    pub fn new(n: usize, d: f64, seed: u64) -> Self {
        assert!((0.0..=1.0).contains(&d), "threshold parameter out of [0,1]");
        ThresholdGenSpec { n, d, seed }
    }
}

/// A generated threshold graph: the conflict graph, the vertex values that
/// produced it, and an interval model realizing the same graph.
#[derive(Debug, Clone)]
pub struct ThresholdGraph {
    pub graph: ConflictGraph,
    pub p: Vec<f64>,
    pub model: IntervalModel,
}

fn edge_rule(pi: f64, pj: f64, d: f64) -> bool {
    (pi + pj) / 2.0 <= d
}

/// Expected edge density of the t-generator as a function of `d`:
///
/// - `d <= 0.5`: `(2(nd)² - nd) / (n(n-1))`
/// - `d >= 0.5`: `(n(n-1) - 2(n(1-d))² + n(1-d)) / (n(n-1))`
///
/// The two branches coincide at `d = 0.5`; the upper branch is the exact
/// complement of the lower one under `d -> 1-d`. Results are clamped into
/// `[0, 1]` (the raw expression dips below zero for `d < 1/(2n)`).
pub fn f_of_d(n: usize, d: f64) -> f64 {
    assert!(n >= 2);
    assert!((0.0..=1.0).contains(&d));
    let value = if d <= 0.5 {
        density_lower(n, d)
    } else {
        density_upper(n, d)
    };
    value.clamp(0.0, 1.0)
}

fn density_lower(n: usize, d: f64) -> f64 {
    let nf = n as f64;
    let nd = nf * d;
    (2.0 * nd * nd - nd) / (nf * (nf - 1.0))
}

fn density_upper(n: usize, d: f64) -> f64 {
    let nf = n as f64;
    let nq = nf * (1.0 - d);
    (nf * (nf - 1.0) - 2.0 * nq * nq + nq) / (nf * (nf - 1.0))
}

/// Draws vertex values and builds the graph plus its interval model.
/// Deterministic given the seed.
pub fn generate_threshold_graph(spec: &ThresholdGenSpec) -> ThresholdGraph {
    let mut rng: Rng64 = rng_from_seed(spec.seed);
    let p: Vec<f64> = (0..spec.n).map(|_| rng.gen_range(0.0..1.0)).collect();

    // Ranks ascending by p (ties by id). In rank space the neighborhood of a
    // vertex is a prefix, which is what makes the staircase model work.
    let mut by_p: Vec<usize> = (0..spec.n).collect();
    by_p.sort_unstable_by(|&a, &b| p[a].partial_cmp(&p[b]).unwrap().then(a.cmp(&b)));
    let sorted_p: Vec<f64> = by_p.iter().map(|&v| p[v]).collect();

    // hi[a]: largest rank adjacent to rank a (prefix structure makes the
    // predicate monotone in the partner's rank).
    let mut edges = Vec::new();
    let mut endpoints = vec![(0u32, 0u32); spec.n];
    for a in 0..spec.n {
        let cut = sorted_p.partition_point(|&pb| edge_rule(sorted_p[a], pb, spec.d));
        let hi = if cut > a + 1 { cut - 1 } else { a };
        for b in a + 1..=hi {
            edges.push((by_p[a], by_p[b]));
        }
        // Rank a occupies (2a, 2·max(a, hi) + 1): ranks a < b intersect iff
        // hi[a] >= b, reproducing the threshold adjacency exactly.
        endpoints[by_p[a]] = (2 * a as u32, 2 * hi as u32 + 1);
    }
    let graph = ConflictGraph::from_edges(spec.n, &edges);
    let model = IntervalModel::new(endpoints);
    debug_assert_eq!(
        crate::graph::build_conflict_graph(&model),
        graph,
        "staircase model must induce the threshold graph"
    );
    ThresholdGraph { graph, p, model }
}

/// Number of edges the t-generator yields for given vertex values, without
/// building the graph. Pairs `(i, j)` with `(p_i + p_j)/2 <= d`, counted by
/// binary search over the sorted values.
pub(crate) fn threshold_edge_count(p_sorted: &[f64], d: f64) -> u64 {
    let n = p_sorted.len();
    let mut count = 0u64;
    for a in 0..n {
        let cut = p_sorted.partition_point(|&pb| edge_rule(p_sorted[a], pb, d));
        // All ranks < cut pair with a, minus the self pair when it qualifies.
        let mut c = cut as u64;
        if a < cut {
            c -= 1;
        }
        count += c;
    }
    count / 2
}

/// Empirical density of one threshold draw, without materializing the graph.
pub fn threshold_density_sample(n: usize, d: f64, seed: u64) -> f64 {
    let mut rng: Rng64 = rng_from_seed(seed);
    let mut p: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
    p.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let pairs = n as f64 * (n as f64 - 1.0) / 2.0;
    threshold_edge_count(&p, d) as f64 / pairs
}
