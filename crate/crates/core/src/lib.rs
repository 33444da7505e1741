//! Exponential-time approximation solvers built around a sparsifying
//! randomized branching rule: maximum independent set with pluggable
//! bounded-degree leaf solvers, iterative-peeling graph coloring,
//! hypergraph vertex cover via sparsify-then-approximate, and the FGLSS
//! CSP-to-graph reduction as a hard-instance generator.

pub mod bitset;
pub mod branching;
pub mod coloring;
pub mod error;
pub mod fglss;
pub mod gen;
pub mod graph;
pub mod hypergraph;
pub mod leaf;
pub mod vc;

pub use bitset::Bitset;
pub use branching::{
    boosted_is, branch_is, compute_lambda, node_bound, partition_baseline_is, NodeRng, RunStats,
    SolveConfig,
};
pub use coloring::{
    chr_approx, chr_approx_wrapped, chromatic_bruteforce, min_supported_r, optcol,
    verify_coloring, Coloring,
};
pub use error::{Error, Result};
pub use fglss::{
    csp_val_bruteforce, emit_csp, emit_labels, fglss_reduce, freeness, gen_random_csp, parse_csp,
    Csp, FglssGraph, Predicate,
};
pub use gen::{gen_gnp, gen_planted_is};
pub use graph::{emit_dimacs_col, parse_dimacs_col, Graph, VertexSet};
pub use hypergraph::{emit_hypergraph, gen_random_hypergraph, parse_hypergraph, Hypergraph};
pub use leaf::{
    enumerate_is_of_size, exact_mis, exact_vc, greedy_is, matching_vc, LeafIsSolver, LeafKind,
};
pub use vc::{halperin_gap_estimate, sparsify_vc, vc_pipeline, SparsifiedFamily, VcLeaf};
