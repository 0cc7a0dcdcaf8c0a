use crate::error::Error;
use crate::interval::IntervalModel;
use std::collections::BinaryHeap;

/// An undirected conflict graph over items `0..n`, stored as sorted
/// per-vertex neighbor lists. No self-loops, no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    adjacency: Vec<Vec<usize>>,
    edge_count: u64,
}

impl ConflictGraph {
    /// Builds a graph on `n` vertices from an edge list. Edges may appear in
    /// either orientation; duplicates and self-loops must not.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u != v, "self-loop at {u}");
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]), "duplicate edge");
        }
        ConflictGraph {
            adjacency,
            edge_count: edges.len() as u64,
        }
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count as usize);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Builds the intersection graph of an interval model: `(i, j)` is an edge
/// iff the open intervals of `i` and `j` overlap.
///
/// Plane sweep over left endpoints with a heap of active right endpoints;
/// `O(n log n + m)`.
pub fn build_conflict_graph(model: &IntervalModel) -> ConflictGraph {
    let n = model.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&i| (model.interval(i).l, i));

    // Min-heap of (r, id) for intervals whose right end is still ahead.
    let mut active: BinaryHeap<std::cmp::Reverse<(u32, usize)>> = BinaryHeap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &j in &order {
        let iv = model.interval(j);
        while let Some(&std::cmp::Reverse((r, _))) = active.peek() {
            if r <= iv.l {
                active.pop();
            } else {
                break;
            }
        }
        // Every remaining active interval starts at or before l_j and ends
        // strictly after it, so it overlaps (l_j, r_j).
        for &std::cmp::Reverse((_, i)) in active.iter() {
            edges.push((i, j));
        }
        active.push(std::cmp::Reverse((iv.r, j)));
    }
    ConflictGraph::from_edges(n, &edges)
}

/// Edge density `2|E| / (n(n-1))`. Undefined for `n < 2`.
pub fn edge_density(graph: &ConflictGraph) -> Result<f64, Error> {
    let n = graph.len();
    if n < 2 {
        return Err(Error::DensityUndefined(n));
    }
    Ok(2.0 * graph.edge_count() as f64 / (n as f64 * (n as f64 - 1.0)))
}
