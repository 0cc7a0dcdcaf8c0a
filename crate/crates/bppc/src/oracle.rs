//! Exhaustive exact BPPC optimum for tiny instances.
//!
//! Depth-first assignment of items to bins with capacity and conflict
//! pruning; a new bin is only ever the last branch, which breaks bin-label
//! symmetry. Ground truth for solver and bound tests, exposed through the
//! CLI as algorithm `exact`.

use crate::error::Error;
use crate::instance::Instance;
use crate::packing::Packing;

/// Size cap for the exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_n: usize,
}

impl OracleLimit {
    pub fn new(max_n: usize) -> Self {
        assert!(max_n <= 14, "exhaustive search is not meant for n > 14");
        OracleLimit { max_n }
    }
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit { max_n: 12 }
    }
}

/// Minimum feasible bin count and one optimal packing.
pub fn exact_min_bins(
    instance: &Instance,
    limit: OracleLimit,
) -> Result<(u64, Packing), Error> {
    let n = instance.len();
    if n > limit.max_n {
        return Err(Error::OracleTooLarge {
            n,
            max_n: limit.max_n,
        });
    }
    if n == 0 {
        return Ok((0, Packing::new(Vec::new(), instance)));
    }

    // Heaviest-first order strengthens capacity pruning.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&i| (std::cmp::Reverse(instance.weight(i)), i));

    let mut search = Search {
        instance,
        order: &order,
        bins: Vec::new(),
        bin_weights: Vec::new(),
        best: n + 1,
        best_bins: Vec::new(),
    };
    search.run(0);
    debug_assert!(search.best <= n);

    let packing = Packing::new(search.best_bins, instance);
    Ok((search.best as u64, packing))
}

struct Search<'a> {
    instance: &'a Instance,
    order: &'a [usize],
    bins: Vec<Vec<usize>>,
    bin_weights: Vec<u64>,
    best: usize,
    best_bins: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        if self.bins.len() >= self.best {
            return;
        }
        if depth == self.order.len() {
            self.best = self.bins.len();
            self.best_bins = self.bins.clone();
            return;
        }
        let item = self.order[depth];
        let w = self.instance.weight(item) as u64;
        let cap = self.instance.capacity() as u64;
        let graph = self.instance.graph();

        for b in 0..self.bins.len() {
            if self.bin_weights[b] + w > cap {
                continue;
            }
            if self.bins[b].iter().any(|&m| graph.has_edge(m, item)) {
                continue;
            }
            self.bins[b].push(item);
            self.bin_weights[b] += w;
            self.run(depth + 1);
            self.bins[b].pop();
            self.bin_weights[b] -= w;
        }

        if self.bins.len() + 1 < self.best {
            self.bins.push(vec![item]);
            self.bin_weights.push(w);
            self.run(depth + 1);
            self.bins.pop();
            self.bin_weights.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_disjoint_model;
    use crate::interval::IntervalModel;
    use crate::packing::{verify_packing, Feasibility};

    #[test]
    fn pairwise_incompatible_items_need_three_bins() {
        // 50+60, 50+70, 60+70 all exceed 100, so no two items share a bin.
        let inst =
            Instance::from_model(vec![50, 60, 70], 100, generate_disjoint_model(3)).unwrap();
        let (k, p) = exact_min_bins(&inst, OracleLimit::default()).unwrap();
        assert_eq!(k, 3);
        assert_eq!(verify_packing(&inst, &p), Feasibility::Feasible);
    }

    #[test]
    fn looser_capacity_allows_two_bins() {
        let inst =
            Instance::from_model(vec![50, 60, 70], 130, generate_disjoint_model(3)).unwrap();
        let (k, _) = exact_min_bins(&inst, OracleLimit::default()).unwrap();
        assert_eq!(k, 2);
    }

    #[test]
    fn triangle_forces_three_bins() {
        let k3 = IntervalModel::new(vec![(0, 5), (0, 5), (0, 5)]);
        let inst = Instance::from_model(vec![1, 1, 1], 100, k3).unwrap();
        let (k, _) = exact_min_bins(&inst, OracleLimit::default()).unwrap();
        assert_eq!(k, 3);
    }

    #[test]
    fn single_item_needs_one_bin() {
        let inst = Instance::from_model(vec![7], 10, generate_disjoint_model(1)).unwrap();
        let (k, p) = exact_min_bins(&inst, OracleLimit::default()).unwrap();
        assert_eq!(k, 1);
        assert_eq!(p.num_bins(), 1);
    }

    #[test]
    fn oversized_instances_are_refused() {
        let inst =
            Instance::from_model(vec![1; 13], 100, generate_disjoint_model(13)).unwrap();
        assert_eq!(
            exact_min_bins(&inst, OracleLimit::default()),
            Err(Error::OracleTooLarge { n: 13, max_n: 12 })
        );
        assert!(exact_min_bins(&inst, OracleLimit::new(14)).is_ok());
    }

    #[test]
    fn optimum_is_invariant_under_relabeling() {
        use crate::generate::{generate_threshold_graph, ThresholdGenSpec};
        let tg = generate_threshold_graph(&ThresholdGenSpec::new(8, 0.5, 4));
        let weights = vec![30, 70, 20, 50, 40, 60, 10, 80];
        let inst = Instance::new(weights.clone(), 100, tg.graph.clone(), None).unwrap();
        let (k, _) = exact_min_bins(&inst, OracleLimit::default()).unwrap();

        // Reverse the labels and re-solve.
        let n = 8;
        let perm: Vec<usize> = (0..n).rev().collect();
        let edges: Vec<(usize, usize)> = tg
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        let mut new_weights = vec![0u32; n];
        for i in 0..n {
            new_weights[perm[i]] = weights[i];
        }
        let relabeled = Instance::new(
            new_weights,
            100,
            crate::graph::ConflictGraph::from_edges(n, &edges),
            None,
        )
        .unwrap();
        let (k2, _) = exact_min_bins(&relabeled, OracleLimit::default()).unwrap();
        assert_eq!(k, k2);
    }
}
