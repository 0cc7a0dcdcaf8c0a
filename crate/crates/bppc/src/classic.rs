//! Capacity-aware adaptations of the classical First/Best/Worst-Fit
//! Decreasing heuristics, and their 33-run envelope.
//!
//! Items are ordered by scaled scores `w^s_i = α (w_i/w̄) + (1-α)
//! (deg(i)/deḡ)` where degrees come from the extended graph `G_w`: the
//! conflict graph plus an edge for every pair whose combined weight exceeds
//! the capacity. Running each fit rule for `α ∈ {0, 0.1, ..., 1}` gives 33
//! packings; the envelope keeps the best.

use crate::bounds::{lb_bin_packing, lb_bppc};
use crate::error::Error;
use crate::graph::ConflictGraph;
use crate::instance::Instance;
use crate::packing::{Packing, SolveReport};
use std::time::Instant;

/// The conflict graph extended with capacity-incompatibility edges.
#[derive(Debug, Clone)]
pub struct ExtendedGraph<'a> {
    pub base: &'a ConflictGraph,
    /// Pairs `(i, j)`, `i < j`, with `w_i + w_j > B` that are not already
    /// edges of the base graph.
    pub extra_edges: Vec<(usize, usize)>,
    /// Per-vertex degree in `G_w`.
    pub degrees: Vec<usize>,
    /// Mean item weight `w̄`.
    pub avg_weight: f64,
    /// Mean degree in `G_w`.
    pub avg_degree: f64,
}

/// Builds `G_w` for an instance: degrees and averages refer to the extended
/// graph, while the base adjacency stays shared.
pub fn build_extended_graph(instance: &Instance) -> ExtendedGraph<'_> {
    let n = instance.len();
    let graph = instance.graph();
    let cap = instance.capacity() as u64;
    let mut degrees: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut extra_edges = Vec::new();
    for i in 0..n {
        let wi = instance.weight(i) as u64;
        for j in i + 1..n {
            if wi + instance.weight(j) as u64 > cap && !graph.has_edge(i, j) {
                extra_edges.push((i, j));
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    let avg_weight = if n == 0 {
        0.0
    } else {
        instance.total_weight() as f64 / n as f64
    };
    let avg_degree = if n == 0 {
        0.0
    } else {
        degrees.iter().sum::<usize>() as f64 / n as f64
    };
    ExtendedGraph {
        base: graph,
        extra_edges,
        degrees,
        avg_weight,
        avg_degree,
    }
}

/// Items ordered by non-increasing scaled score.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledOrder {
    pub alpha: f64,
    pub scores: Vec<f64>,
    /// A permutation of the items, non-increasing in score; ties broken by
    /// larger raw weight, then lower id.
    pub order: Vec<usize>,
}

/// The blended score `α (w/w̄) + (1-α) (deg/deḡ)`; the degree term is
/// defined as zero when the extended graph has no edges.
fn scaled_score(alpha: f64, weight: u32, avg_weight: f64, degree: usize, avg_degree: f64) -> f64 {
    let weight_term = alpha * weight as f64 / avg_weight;
    let degree_term = if avg_degree == 0.0 {
        0.0
    } else {
        (1.0 - alpha) * degree as f64 / avg_degree
    };
    weight_term + degree_term
}

/// Scores every item and sorts. Rejects all-zero weights (`w̄ = 0`).
pub fn scaled_weights(
    ext: &ExtendedGraph<'_>,
    weights: &[u32],
    alpha: f64,
) -> Result<ScaledOrder, Error> {
    assert!((0.0..=1.0).contains(&alpha), "alpha out of [0,1]");
    if ext.avg_weight == 0.0 && !weights.is_empty() {
        return Err(Error::ZeroMeanWeight);
    }
    let scores: Vec<f64> = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| scaled_score(alpha, w, ext.avg_weight, ext.degrees[i], ext.avg_degree))
        .collect();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .unwrap()
            .then(weights[b].cmp(&weights[a]))
            .then(a.cmp(&b))
    });
    Ok(ScaledOrder {
        alpha,
        scores,
        order,
    })
}

/// Bin-selection rule for one pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FitRule {
    FirstFit,
    BestFit,
    WorstFit,
}

impl FitRule {
    pub const ALL: [FitRule; 3] = [FitRule::FirstFit, FitRule::BestFit, FitRule::WorstFit];

    pub fn name(&self) -> &'static str {
        match self {
            FitRule::FirstFit => "ff",
            FitRule::BestFit => "bf",
            FitRule::WorstFit => "wf",
        }
    }
}

/// Packs the items in the given order. A bin is eligible for an item iff the
/// added weight stays within capacity and no current member conflicts with
/// it in the base graph; capacity alone already rules out `G_w`-incompatible
/// pairs. Ties between equally good bins go to the earliest-created one.
pub fn run_fit(instance: &Instance, order: &[usize], rule: FitRule) -> Packing {
    let n = instance.len();
    debug_assert_eq!(order.len(), n);
    let cap = instance.capacity() as u64;
    let graph = instance.graph();

    let mut bins: Vec<Vec<usize>> = Vec::new();
    let mut bin_weights: Vec<u64> = Vec::new();
    let mut bin_of: Vec<Option<usize>> = vec![None; n];
    let mut conflicted: Vec<bool> = Vec::new();

    for &item in order {
        conflicted.clear();
        conflicted.resize(bins.len(), false);
        for &u in graph.neighbors(item) {
            if let Some(b) = bin_of[u] {
                conflicted[b] = true;
            }
        }
        let w = instance.weight(item) as u64;
        let mut chosen: Option<usize> = None;
        for b in 0..bins.len() {
            if conflicted[b] || bin_weights[b] + w > cap {
                continue;
            }
            match rule {
                FitRule::FirstFit => {
                    chosen = Some(b);
                    break;
                }
                FitRule::BestFit => {
                    if chosen.map_or(true, |c| bin_weights[b] > bin_weights[c]) {
                        chosen = Some(b);
                    }
                }
                FitRule::WorstFit => {
                    if chosen.map_or(true, |c| bin_weights[b] < bin_weights[c]) {
                        chosen = Some(b);
                    }
                }
            }
        }
        let b = chosen.unwrap_or_else(|| {
            bins.push(Vec::new());
            bin_weights.push(0);
            bins.len() - 1
        });
        bins[b].push(item);
        bin_weights[b] += w;
        bin_of[item] = Some(b);
    }
    Packing::new(bins, instance)
}

/// The lower bound reported alongside solutions: the combined bound when an
/// interval model is available, the bin packing ceiling bound otherwise.
pub(crate) fn report_lower_bound(instance: &Instance) -> Result<u64, Error> {
    if instance.model().is_some() {
        lb_bppc(instance)
    } else {
        lb_bin_packing(instance.weights(), instance.capacity())
    }
}

/// Runs all `3 × 11` rule/α combinations and returns the best packing.
/// Ties prefer first-fit over best-fit over worst-fit, then smaller α.
pub fn best_of_m(instance: &Instance) -> Result<(Packing, SolveReport), Error> {
    let started = Instant::now();
    let ext = build_extended_graph(instance);
    let mut best: Option<Packing> = None;
    for rule in FitRule::ALL {
        for alpha_tenths in 0..=10u32 {
            let alpha = alpha_tenths as f64 / 10.0;
            let order = scaled_weights(&ext, instance.weights(), alpha)?;
            let packing = run_fit(instance, &order.order, rule);
            if best
                .as_ref()
                .map_or(true, |b| packing.num_bins() < b.num_bins())
            {
                best = Some(packing);
            }
        }
    }
    let packing = best.expect("33 runs always produce a packing");
    let elapsed = started.elapsed();
    let lower_bound = report_lower_bound(instance)?;
    let value = packing.num_bins() as u64;
    Ok((
        packing,
        SolveReport {
            algorithm: "m",
            value,
            lower_bound,
            certified_optimal: value == lower_bound,
            elapsed,
            feasible: true,
        },
    ))
}
