use crate::error::Error;
use crate::graph::{build_conflict_graph, ConflictGraph};
use crate::interval::IntervalModel;

/// A BPPC instance: item weights, a bin capacity, a conflict graph, and
/// optionally the interval model realizing that graph.
///
/// Construction rejects items heavier than the capacity (no feasible packing
/// could exist) and, when a model is attached, checks that its intersection
/// graph equals the conflict graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    weights: Vec<u32>,
    capacity: u32,
    graph: ConflictGraph,
    model: Option<IntervalModel>,
}

impl Instance {
    pub fn new(
        weights: Vec<u32>,
        capacity: u32,
        graph: ConflictGraph,
        model: Option<IntervalModel>,
    ) -> Result<Self, Error> {
        if graph.len() != weights.len() {
            return Err(Error::SizeMismatch {
                weights: weights.len(),
                vertices: graph.len(),
            });
        }
        if let Some((item, &weight)) = weights.iter().enumerate().find(|&(_, &w)| w > capacity) {
            return Err(Error::ItemHeavierThanCapacity {
                item,
                weight,
                capacity,
            });
        }
        if let Some(model) = &model {
            if model.len() != weights.len() {
                return Err(Error::SizeMismatch {
                    weights: weights.len(),
                    vertices: model.len(),
                });
            }
            let induced = build_conflict_graph(model);
            if induced != graph {
                let (u, v) = first_disagreement(&induced, &graph);
                return Err(Error::ModelGraphMismatch { u, v });
            }
        }
        Ok(Instance {
            weights,
            capacity,
            graph,
            model,
        })
    }

    /// Builds the instance directly from a model, deriving the graph.
    pub fn from_model(weights: Vec<u32>, capacity: u32, model: IntervalModel) -> Result<Self, Error> {
        let graph = build_conflict_graph(&model);
        Instance::new(weights, capacity, graph, Some(model))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, item: usize) -> u32 {
        self.weights[item]
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().map(|&w| w as u64).sum()
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    pub fn graph(&self) -> &ConflictGraph {
        &self.graph
    }

    pub fn model(&self) -> Option<&IntervalModel> {
        self.model.as_ref()
    }
}

fn first_disagreement(a: &ConflictGraph, b: &ConflictGraph) -> (usize, usize) {
    for u in 0..a.len() {
        for v in u + 1..a.len() {
            if a.has_edge(u, v) != b.has_edge(u, v) {
                return (u, v);
            }
        }
    }
    unreachable!("graphs differ but agree on every pair")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heavy_item_is_rejected() {
        let g = ConflictGraph::from_edges(2, &[]);
        let err = Instance::new(vec![50, 160], 150, g, None).unwrap_err();
        assert_eq!(
            err,
            Error::ItemHeavierThanCapacity {
                item: 1,
                weight: 160,
                capacity: 150
            }
        );
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let g = ConflictGraph::from_edges(3, &[]);
        assert!(matches!(
            Instance::new(vec![1, 2], 10, g, None),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn inconsistent_model_is_rejected() {
        let model = IntervalModel::new(vec![(0, 2), (1, 3)]); // one edge
        let g = ConflictGraph::from_edges(2, &[]);
        assert_eq!(
            Instance::new(vec![1, 1], 10, g, Some(model)),
            Err(Error::ModelGraphMismatch { u: 0, v: 1 })
        );
    }

    #[test]
    fn from_model_round_trips_the_graph() {
        let model = IntervalModel::new(vec![(0, 2), (1, 3), (2, 4)]);
        let inst = Instance::from_model(vec![5, 6, 7], 10, model).unwrap();
        assert_eq!(inst.graph().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(inst.total_weight(), 18);
    }
}
