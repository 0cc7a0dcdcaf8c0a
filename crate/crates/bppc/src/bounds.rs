use crate::clique::chromatic_number;
use crate::error::Error;
use crate::instance::Instance;

/// The ceiling bound `⌈Σ w_i / B⌉` for bin packing. Zero for an empty item
/// set, at least one otherwise.
pub fn lb_bin_packing(weights: &[u32], capacity: u32) -> Result<u64, Error> {
    if capacity == 0 {
        return Err(Error::ZeroCapacity);
    }
    let total: u64 = weights.iter().map(|&w| w as u64).sum();
    let bound = total.div_ceil(capacity as u64);
    if bound == 0 && !weights.is_empty() {
        // All-zero weights still need one bin.
        return Ok(1);
    }
    Ok(bound)
}

/// Combined BPPC lower bound: `max{⌈Σ w_i / B⌉, χ(G)}`, with the chromatic
/// number taken from the instance's interval model.
pub fn lb_bppc(instance: &Instance) -> Result<u64, Error> {
    let model = instance.model().ok_or(Error::MissingModel)?;
    let packing = lb_bin_packing(instance.weights(), instance.capacity())?;
    Ok(packing.max(chromatic_number(model) as u64))
}

/// Relative optimality gap `(value - lb) / lb`.
pub fn gap(value: u64, lb: u64) -> Result<f64, Error> {
    if lb == 0 {
        return Err(Error::ZeroLowerBound);
    }
    Ok((value as f64 - lb as f64) / lb as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ConflictGraph;
    use crate::interval::IntervalModel;

    #[test]
    fn ceiling_bound_examples() {
        assert_eq!(lb_bin_packing(&[50, 60, 70], 100).unwrap(), 2);
        assert_eq!(lb_bin_packing(&[100], 100).unwrap(), 1);
        assert_eq!(lb_bin_packing(&[], 100).unwrap(), 0);
        assert_eq!(lb_bin_packing(&[0, 0], 5).unwrap(), 1);
        assert_eq!(lb_bin_packing(&[1], 0), Err(Error::ZeroCapacity));
    }

    #[test]
    fn combined_bound_examples() {
        // Edgeless: the ceiling bound dominates.
        let disjoint = IntervalModel::new(vec![(0, 1), (1, 2), (2, 3)]);
        let inst = Instance::from_model(vec![50, 60, 70], 100, disjoint).unwrap();
        assert_eq!(lb_bppc(&inst).unwrap(), 2);

        // Triangle with tiny weights: chi dominates.
        let k3 = IntervalModel::new(vec![(0, 10), (0, 10), (0, 10)]);
        let inst = Instance::from_model(vec![10, 10, 10], 100, k3.clone()).unwrap();
        assert_eq!(lb_bppc(&inst).unwrap(), 3);

        // max(1, 3) = 3.
        let inst = Instance::from_model(vec![50, 60, 70], 200, k3).unwrap();
        assert_eq!(lb_bppc(&inst).unwrap(), 3);
    }

    #[test]
    fn combined_bound_needs_a_model() {
        let g = ConflictGraph::from_edges(2, &[]);
        let inst = Instance::new(vec![1, 1], 10, g, None).unwrap();
        assert_eq!(lb_bppc(&inst), Err(Error::MissingModel));
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap(10, 10).unwrap(), 0.0);
        assert!((gap(11, 10).unwrap() - 0.1).abs() < 1e-12);
        assert!((gap(25, 20).unwrap() - 0.25).abs() < 1e-12);
        assert_eq!(gap(5, 0), Err(Error::ZeroLowerBound));
    }
}
