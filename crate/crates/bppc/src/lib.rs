//! Solvers, bounds, and instance generators for the bin packing problem with
//! conflicts (BPPC) on interval conflict graphs.
//!
//! An instance is a set of items with nonnegative integer weights, a bin
//! capacity `B`, and a conflict graph; two conflicting items may not share a
//! bin. Here the conflict graph is the intersection graph of open integer
//! intervals, which makes vertex coloring (and hence the clique side of the
//! lower bound) computable by a sweep.
//!
//! The crate provides:
//!
//! - domain types ([`Interval`], [`IntervalModel`], [`ConflictGraph`],
//!   [`Instance`], [`Packing`]) and solution verification,
//! - the combined lower bound `max{⌈Σw/B⌉, χ(G)}`,
//! - the two-phase balance-and-repair heuristic (`bn`),
//! - capacity-aware first/best/worst-fit decreasing variants and their
//!   33-run envelope (`classic`),
//! - random instance generators with controllable edge density (`generate`),
//! - an exhaustive exact solver for tiny instances (`oracle`).

mod bounds;
mod clique;
mod error;
mod graph;
mod instance;
mod interval;
mod packing;

pub mod bn;
pub mod classic;
pub mod generate;
pub mod oracle;

pub use bounds::{gap, lb_bin_packing, lb_bppc};
pub use clique::{chromatic_number, leftmost_max_clique, CliqueInfo};
pub use error::Error;
pub use graph::{build_conflict_graph, edge_density, ConflictGraph};
pub use instance::Instance;
pub use interval::{intersects, Interval, IntervalModel};
pub use packing::{verify_packing, Feasibility, Packing, SolveReport};
