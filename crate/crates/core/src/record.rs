//! Run records: enough to replay any pipeline run.

use serde::{Deserialize, Serialize};

use crate::graph::{ColourProfile, Embedding};
use crate::repair::ExchangeStep;
use crate::switching::{CyclePattern, SwitchablePair};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SwitchLog {
    pub pair: SwitchablePair,
    /// Host cycle `x y u v`; marked edges `yu`, `vx`.
    pub cycle: [usize; 4],
    pub pattern: CyclePattern,
    /// Change per colour, index 0 unused.
    pub gains: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Attempt {
    pub index: u64,
    pub derived_seed: u64,
    pub initial: Option<ColourProfile>,
    pub final_profile: Option<ColourProfile>,
    pub repair_steps: Vec<ExchangeStep>,
    pub switchings: Vec<SwitchLog>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub pipeline: String,
    pub seed: u64,
    pub restarts: usize,
    pub target: Option<u8>,
    pub family_size: usize,
    pub attempts: Vec<Attempt>,
    pub best_attempt: Option<usize>,
    pub embedding: Option<Embedding>,
    pub warnings: Vec<String>,
}

impl RunRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serialises")
    }
}
