//! Tree discrepancy and `k`-sum subgraphs in edge-coloured dense graphs.
//!
//! The crate turns a family of switching and exchange arguments into
//! executable algorithms:
//!
//! * [`switching`]: switchable edge pairs, free families, marked 4-cycles,
//!   and pipelines that push a colour up in a copy of a tree inside `K_n`.
//! * [`repair`]: vertex exchanges that remove pairs missing from a dense
//!   host `G`, and the dense-host version of the colour-lead pipeline.
//! * [`ksum`]: (1,3)-cycles, `K_{2,2Δ}` sites, gadgets and the search for a
//!   copy of a bounded-degree graph with a prescribed signed sum.
//! * [`colourings`]: generators for the extremal constructions plus
//!   deciders for balanced, η-standard, bipartite and inert instances.
//! * [`oracle`]: exhaustive ground truth at small sizes.
//!
//! ```
//! use treedisc::prelude::*;
//!
//! let host = gen_balanced_random(12, 2, 7);
//! let tree = TreeGraph::path(12);
//! let out = maximize_colour(&tree, &host, 1, 8, 42).unwrap();
//! assert!(out.achieved <= 11);
//! ```

pub mod cli;
pub mod colourings;
pub mod error;
pub mod graph;
pub mod ksum;
pub mod oracle;
pub mod record;
pub mod repair;
pub mod seed;
pub mod switching;
pub mod verify;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::colourings::*;
    pub use crate::error::{Error, Result};
    pub use crate::graph::*;
    pub use crate::ksum::*;
    pub use crate::oracle::*;
    pub use crate::repair::*;
    pub use crate::switching::*;
}
