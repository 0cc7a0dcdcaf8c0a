use crate::instance::Instance;
use std::time::Duration;

/// A partition of the items into bins, with cached bin weights.
///
/// The type does not enforce feasibility; [`verify_packing`] judges that. The
/// weight cache is maintained by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    bins: Vec<Vec<usize>>,
    bin_weights: Vec<u64>,
}

impl Packing {
    /// Builds a packing from bins of item indices; members are stored sorted
    /// and weights cached from the instance's item weights.
    pub fn new(bins: Vec<Vec<usize>>, instance: &Instance) -> Self {
        Self::with_weights(bins, instance.weights())
    }

    pub fn with_weights(mut bins: Vec<Vec<usize>>, weights: &[u32]) -> Self {
        for bin in &mut bins {
            bin.sort_unstable();
        }
        let bin_weights = bins
            .iter()
            .map(|bin| bin.iter().map(|&i| weights[i] as u64).sum())
            .collect();
        Packing { bins, bin_weights }
    }

    /// Number of bins `z`.
    pub fn num_bins(&self) -> usize {
        self.bins.len()
    }

    pub fn bins(&self) -> &[Vec<usize>] {
        &self.bins
    }

    pub fn bin_weights(&self) -> &[u64] {
        &self.bin_weights
    }
}

/// Feasibility verdict for a packing: the first violation found, scanning
/// bins in index order and members in item order; partition defects win.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    /// Some item is missing, duplicated, or out of range.
    NotPartition,
    /// Bin weight exceeds the capacity.
    CapacityExceeded { bin: usize },
    /// Two conflicting items share a bin.
    Conflict { bin: usize, u: usize, v: usize },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible)
    }
}

/// Checks that the bins partition `0..n`, that every bin weight is within
/// capacity, and that no bin contains a conflicting pair.
///
/// Within a bin the capacity check precedes the conflict check; the reported
/// conflict is the lexicographically first adjacent pair.
pub fn verify_packing(instance: &Instance, packing: &Packing) -> Feasibility {
    let n = instance.len();
    let mut seen = vec![false; n];
    let mut assigned = 0usize;
    for bin in packing.bins() {
        for &item in bin {
            if item >= n || seen[item] {
                return Feasibility::NotPartition;
            }
            seen[item] = true;
            assigned += 1;
        }
    }
    if assigned != n {
        return Feasibility::NotPartition;
    }

    let graph = instance.graph();
    for (b, bin) in packing.bins().iter().enumerate() {
        let weight: u64 = bin.iter().map(|&i| instance.weight(i) as u64).sum();
        if weight > instance.capacity() as u64 {
            return Feasibility::CapacityExceeded { bin: b };
        }
        for (k, &u) in bin.iter().enumerate() {
            for &v in &bin[k + 1..] {
                if graph.has_edge(u, v) {
                    return Feasibility::Conflict { bin: b, u, v };
                }
            }
        }
    }
    Feasibility::Feasible
}

/// Outcome summary of one solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    /// Short algorithm identifier ("bn", "m", "exact").
    pub algorithm: &'static str,
    /// Number of bins in the returned packing.
    pub value: u64,
    /// The combined lower bound for the instance.
    pub lower_bound: u64,
    /// True iff `value == lower_bound`, certifying optimality.
    pub certified_optimal: bool,
    /// Wall time of the solve call, excluding instance generation and I/O.
    pub elapsed: Duration,
    /// True iff the packing passed verification.
    pub feasible: bool,
}

impl SolveReport {
    pub fn elapsed_secs(&self) -> f64 {
        self.elapsed.as_secs_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::IntervalModel;

    fn path_instance() -> Instance {
        // 0 - 1 - 2 path, weights 60/50/40, capacity 100.
        let model = IntervalModel::new(vec![(0, 2), (1, 3), (2, 4)]);
        Instance::from_model(vec![60, 50, 40], 100, model).unwrap()
    }

    #[test]
    fn feasible_packing_passes() {
        let inst = path_instance();
        let p = Packing::new(vec![vec![0, 2], vec![1]], &inst);
        assert_eq!(verify_packing(&inst, &p), Feasibility::Feasible);
        assert_eq!(p.bin_weights(), &[100, 50]);
    }

    #[test]
    fn conflicting_pair_is_reported() {
        let model = IntervalModel::new(vec![(0, 2), (1, 3), (2, 4)]);
        let inst = Instance::from_model(vec![60, 50, 40], 150, model).unwrap();
        let p = Packing::new(vec![vec![2], vec![0, 1]], &inst);
        assert_eq!(
            verify_packing(&inst, &p),
            Feasibility::Conflict { bin: 1, u: 0, v: 1 }
        );
    }

    #[test]
    fn overweight_bin_is_reported() {
        let inst = path_instance();
        let p = Packing::new(vec![vec![0, 2], vec![1]], &inst);
        assert!(verify_packing(&inst, &p).is_feasible());
        // Capacity 90 turns bin 0 (weight 100) into a violation.
        let model = IntervalModel::new(vec![(0, 2), (1, 3), (2, 4)]);
        let tight = Instance::from_model(vec![60, 50, 40], 90, model).unwrap();
        let p = Packing::new(vec![vec![0, 2], vec![1]], &tight);
        assert_eq!(
            verify_packing(&tight, &p),
            Feasibility::CapacityExceeded { bin: 0 }
        );
    }

    #[test]
    fn missing_and_duplicate_items_fail_partition() {
        let inst = path_instance();
        let missing = Packing::new(vec![vec![0], vec![1]], &inst);
        assert_eq!(verify_packing(&inst, &missing), Feasibility::NotPartition);
        let duplicated = Packing::new(vec![vec![0, 1], vec![1, 2]], &inst);
        assert_eq!(
            verify_packing(&inst, &duplicated),
            Feasibility::NotPartition
        );
    }

    #[test]
    fn capacity_is_checked_before_conflicts_within_a_bin() {
        let model = IntervalModel::new(vec![(0, 2), (1, 3)]);
        let inst = Instance::from_model(vec![60, 60], 100, model).unwrap();
        let p = Packing::new(vec![vec![0, 1]], &inst);
        assert_eq!(
            verify_packing(&inst, &p),
            Feasibility::CapacityExceeded { bin: 0 }
        );
    }
}
