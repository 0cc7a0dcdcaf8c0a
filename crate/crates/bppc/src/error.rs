use thiserror::Error;

/// Errors raised by instance construction, bounds, generators, and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An item outweighs the bin capacity, so no feasible packing exists.
    #[error("item {item} has weight {weight} > capacity {capacity}")]
    ItemHeavierThanCapacity {
        item: usize,
        weight: u32,
        capacity: u32,
    },

    /// Weight count and conflict-graph vertex count disagree.
    #[error("instance has {weights} weights but the conflict graph has {vertices} vertices")]
    SizeMismatch { weights: usize, vertices: usize },

    /// The attached interval model does not induce the given conflict graph.
    #[error("interval model does not induce the conflict graph (pair {u}, {v} disagrees)")]
    ModelGraphMismatch { u: usize, v: usize },

    /// Edge density is undefined on fewer than two vertices.
    #[error("edge density requires at least 2 vertices, got {0}")]
    DensityUndefined(usize),

    /// Capacity zero makes the bin packing bound undefined.
    #[error("capacity must be positive")]
    ZeroCapacity,

    /// Gap is undefined for a zero lower bound.
    #[error("gap requires a positive lower bound")]
    ZeroLowerBound,

    /// Weight scaling divides by the mean weight.
    #[error("scaled weights are undefined when all weights are zero")]
    ZeroMeanWeight,

    /// The operation needs an interval model but the instance has none.
    #[error("instance carries no interval model")]
    MissingModel,

    /// Instance-class generation exhausted its rejection budget.
    #[error(
        "rejection budget of {budget} attempts exhausted for cell \
         (n={n}, B={capacity}, density={density}) while targeting [{lo:.3}, {hi:.3}]"
    )]
    RejectionBudgetExhausted {
        n: usize,
        capacity: u32,
        density: f64,
        lo: f64,
        hi: f64,
        budget: usize,
    },

    /// The exact solver refuses instances above its size cap.
    #[error("exact search refused: n={n} exceeds the cap of {max_n}")]
    OracleTooLarge { n: usize, max_n: usize },

    /// The repair loop exceeded its iteration guard.
    #[error("repair loop exceeded the iteration guard of {guard} iterations")]
    IterationGuard { guard: usize },
}
