//! Exact solvers for independent feedback vertex set (IFVS) and feedback
//! vertex set (FVS) on simple undirected graphs.
//!
//! The decision procedure grows the graph one vertex at a time
//! ([`compress`]). At each step the previous minimum IFVS plus the new
//! vertex is a feedback vertex set `F`, and [`extension::min_ifvs_given_fvs`]
//! turns it into a minimum IFVS of the larger graph by trying every
//! admissible `S ⊆ F` and running a dynamic program over the binarized
//! forest `G - F` ([`forest`]). The running time is `O(4^k n^2)` for budget `k`.
//!
//! FVS is solved through the edge-subdivision reduction in [`reduction`].
//! Brute-force references for testing live in [`oracle`].
//!
//! ```
//! use ifvs::graph::named;
//! use ifvs::{solve_ifvs, Decision, SolverOptions};
//!
//! let g = named::cycle(5);
//! let out = solve_ifvs(&g, 1, &SolverOptions::default());
//! assert_eq!(out.decision, Decision::Yes);
//! assert!(g.is_ifvs(out.certificate.as_ref().unwrap()));
//! ```

pub mod bench;
pub mod cli;
pub mod compress;
pub mod extension;
pub mod fallback;
pub mod forest;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reduction;

pub use compress::{decide_prefix_chain, solve_ifvs, Decision, SolveOutcome, SolveStats, SolverOptions};
pub use extension::{min_ifvs_given_fvs, ExtensionError, ExtensionOutcome};
pub use graph::{Graph, GraphError, VertexId, VertexSet};
pub use reduction::{solve_fvs, subdivide};
