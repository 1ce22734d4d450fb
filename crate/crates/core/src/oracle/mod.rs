//! Exhaustive ground truth at small sizes.
//!
//! Two views are offered: [`enumerate_embeddings`] walks embeddings one by
//! one, while [`max_colour_oracle`] and [`reachable_sums`] fold over all of
//! them with a dynamic programme on the frontier of a vertex order, so their
//! cost grows with `2^n` times the frontier images rather than `n!`.

pub mod cache;
pub mod dp;
pub mod enumerate;
pub mod examples;
pub mod factors;
pub mod hamilton;
pub mod trees;

pub use cache::{instance_digest, OracleCache, CACHE_VERSION};
pub use dp::{count_embeddings, max_colour_oracle, reachable_sums, DP_STATE_LIMIT};
pub use enumerate::{enumerate_embeddings, estimate_nodes, search_order, Embeddings, DEFAULT_CAP};
pub use examples::{verify_example_110, verify_example_15, verify_example_17, verify_example_19, ExampleReport};
pub use factors::{enumerate_sfactors, sfactor_count, sfactor_pattern, SFactors, Star, StarFactor, SFACTOR_LIMIT};
pub use hamilton::{
    hamilton_cycles, hamilton_paths, sequence_edges, Hamilton, HAMILTON_CYCLE_MAX_N, HAMILTON_PATH_MAX_N,
};
pub use trees::{enumerate_trees, TreeMode, Trees, LABELLED_TREE_MAX_N};
