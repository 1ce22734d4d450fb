//! Switchable pairs, free families, marked 4-cycles and the switching
//! pipelines.

pub mod family;
pub mod marked;
pub mod pairs;
pub mod pipeline;

pub use family::{family_size_bound, find_free_family, find_free_family_base, FreeFamily};
pub use marked::{
    classify_marked, classify_marked_for, count_marked_cycles, desirable_switchings, image_cycle, CountMode,
    CycleCount, CycleFilter, CyclePattern, MarkedCycle, EXACT_CYCLE_LIMIT,
};
pub use pairs::{apply_switching, is_switchable, PairKind, SwitchablePair};
pub use pipeline::{lead_colour_kn, maximize_colour, reported_bound, LeadOutcome, LeadParams, MaximizeOutcome};
