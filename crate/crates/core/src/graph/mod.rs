//! Pattern graphs, coloured hosts, embeddings and tree decompositions.

pub mod embedding;
pub mod format;
pub mod host;
pub mod pattern;
pub mod tree;

pub use embedding::{colour_profile, signed_sum, validate_embedding, ColourProfile, Embedding, SignedSum};
pub use host::{HostColouredGraph, BLUE, RED};
pub use pattern::{PatternGraph, TreeGraph};
pub use tree::{bare_path_decomposition, degree_histogram, BarePaths};
