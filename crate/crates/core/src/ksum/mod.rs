//! (1,3)-cycles, `K_{2,2Δ}` sites, gadgets and the prescribed-sum search.

pub mod embed;
pub mod gadget;
pub mod sites;

pub use embed::{ksum_embed, predict_residue, KsumOutcome, KsumParams, KsumRecord, LocalSearchLog, Residue, RoundAttempt};
pub use gadget::{activate_gadget, detect_gadgets, distance3_pairs, Distance3Pairs, Gadget};
pub use sites::{
    balanced_vertices, count_type1_k22d, find_13_cycle, find_type2_k22d, path_pattern, BipartiteK22D, OneThreeCycle,
    SiteKind, Type1Count, Type1Mode, EXACT_TYPE1_LIMIT,
};
