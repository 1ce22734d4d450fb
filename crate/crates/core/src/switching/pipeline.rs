use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colourings::{is_eps_balanced, is_eta_standard, EtaMode, EtaStandard};
use crate::error::{Error, Result};
use crate::graph::embedding::profile_unchecked;
use crate::graph::{ColourProfile, Embedding, HostColouredGraph, PatternGraph, TreeGraph};
use crate::record::{Attempt, RunRecord, SwitchLog};
use crate::seed::{self, STREAM_LEAD, STREAM_MAXIMIZE};

use super::family::{find_free_family, FreeFamily};
use super::marked::{desirable_switchings, MarkedCycle};
use super::pairs::apply_unchecked;

/// Constant used for the advisory bound of [`maximize_colour`].
pub const BOUND_CONSTANT: f64 = 1e-5;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MaximizeOutcome {
    pub embedding: Embedding,
    pub achieved: usize,
    /// `2m_i/n + C(n−1−Δ)(m*_i/n²)²`; reported, never asserted.
    pub reported_bound: f64,
    pub record: RunRecord,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeadParams {
    pub eta: f64,
    pub eps: f64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for LeadParams {
    fn default() -> Self {
        LeadParams { eta: 0.001, eps: 0.05, restarts: 50, seed: 0 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LeadOutcome {
    pub embedding: Embedding,
    /// `count₁ − count_i` indexed by colour; entries 0 and 1 are zero.
    pub leads: Vec<i64>,
    pub min_lead: i64,
    /// Set when no attempt succeeded cleanly and the result is best effort.
    pub flagged: bool,
    pub record: RunRecord,
}

pub fn reported_bound(t: &PatternGraph, host: &HostColouredGraph, i: u8) -> f64 {
    let n = host.n() as f64;
    let pairs = host.n() * host.n().saturating_sub(1) / 2;
    let mi = host.class_sizes()[i as usize];
    let m_star = mi.min(pairs - mi) as f64;
    let slack = (t.n() as f64 - 1.0 - t.max_degree() as f64).max(0.0);
    2.0 * mi as f64 / n + BOUND_CONSTANT * slack * (m_star / (n * n)).powi(2)
}

fn log_switch(pair: &super::SwitchablePair, m: &MarkedCycle, r: u8) -> SwitchLog {
    let gains = (0..=r).map(|c| if c == 0 { 0 } else { m.gain(c) }).collect();
    SwitchLog { pair: *pair, cycle: [m.x, m.y, m.u, m.v], pattern: m.pattern, gains }
}

/// Applies every desirable switch of `family` at once; `cycles` decides which
/// 4-cycles exist.
pub(crate) fn switch_all(
    t: &PatternGraph,
    emb: Embedding,
    family: &FreeFamily,
    cycles: &HostColouredGraph,
    target: u8,
    predicate: impl Fn(&MarkedCycle) -> bool,
) -> (Embedding, Vec<SwitchLog>) {
    let chosen = desirable_switchings(&emb, family, cycles, target, predicate);
    let mut out = emb;
    let mut log = Vec::with_capacity(chosen.len());
    for (p, m) in &chosen {
        debug_assert!(m.gain(target) > 0);
        out = apply_unchecked(&out, p);
        log.push(log_switch(p, m, cycles.r()));
    }
    debug_assert!(t.n() == out.len());
    (out, log)
}

fn check_target(host: &HostColouredGraph, i: u8) -> Result<()> {
    if i == 0 || i > host.r() {
        return Err(Error::InvalidParameters(format!("colour {i} outside 1..={}", host.r())));
    }
    Ok(())
}

fn check_sizes(t: &PatternGraph, host: &HostColouredGraph) -> Result<()> {
    if t.n() > host.n() {
        return Err(Error::InvalidParameters(format!("pattern has {} vertices, host only {}", t.n(), host.n())));
    }
    Ok(())
}

/// Best of `restarts` attempts of: uniform embedding into `K_n`, free
/// family, every switch that raises colour `i`.
pub fn maximize_colour(t: &TreeGraph, host: &HostColouredGraph, i: u8, restarts: usize, seed: u64) -> Result<MaximizeOutcome> {
    check_target(host, i)?;
    check_sizes(t, host)?;
    if !host.is_complete() {
        return Err(Error::InvalidParameters("maximize_colour needs a complete host".into()));
    }
    let restarts = restarts.max(1);
    let family = find_free_family(t);
    let runs: Vec<(Embedding, usize, Attempt)> = (0..restarts as u64)
        .into_par_iter()
        .map(|a| {
            let derived = seed::derive_seed(seed, STREAM_MAXIMIZE, a);
            let mut rng = seed::rng(derived);
            let emb = Embedding::random(t.n(), host.n(), &mut rng);
            let initial = profile_unchecked(t, host, &emb);
            let (emb, switchings) = switch_all(t, emb, &family, host, i, |_| true);
            let fin = profile_unchecked(t, host, &emb);
            let achieved = fin.get(i);
            let rec = Attempt {
                index: a,
                derived_seed: derived,
                initial: Some(initial),
                final_profile: Some(fin),
                repair_steps: Vec::new(),
                switchings,
                error: None,
            };
            (emb, achieved, rec)
        })
        .collect();
    let best = (0..runs.len()).max_by_key(|&k| (runs[k].1, std::cmp::Reverse(k))).unwrap();
    let embedding = runs[best].0.clone();
    let achieved = runs[best].1;
    let record = RunRecord {
        pipeline: "maximize".into(),
        seed,
        restarts,
        target: Some(i),
        family_size: family.len(),
        attempts: runs.into_iter().map(|r| r.2).collect(),
        best_attempt: Some(best),
        embedding: Some(embedding.clone()),
        warnings: Vec::new(),
    };
    Ok(MaximizeOutcome { embedding, achieved, reported_bound: reported_bound(t, host, i), record })
}

/// Checks the colouring classes the lead theorems assume; problems become
/// warnings, not errors.
pub(crate) fn lead_warnings(host: &HostColouredGraph, params: &LeadParams) -> Vec<String> {
    let mut w = Vec::new();
    if host.r() < 3 {
        w.push(format!("r = {} is below 3; the lead guarantee does not apply", host.r()));
    }
    if !is_eps_balanced(host, params.eps) {
        w.push(format!("colouring is not {}-balanced", params.eps));
    }
    if host.r() >= 2 {
        let mode = if host.n() <= 20 {
            EtaMode::Exact
        } else {
            EtaMode::Search { seed: seed::derive_seed(params.seed, STREAM_LEAD, u64::MAX), restarts: 2 }
        };
        match is_eta_standard(host, params.eta, mode) {
            Ok(EtaStandard::Violated(_)) => w.push(format!("colouring is not {}-standard", params.eta)),
            Ok(EtaStandard::NoWitnessFound) => {
                w.push(format!("{}-standard only in the weak sense: no violating partition found", params.eta))
            }
            Ok(EtaStandard::Standard) => {}
            Err(e) => w.push(format!("η-standard check skipped: {e}")),
        }
    }
    w
}

/// One lead attempt after the embedding is fixed and ghost-free: switch along
/// every cycle of `cycles` that is marked and not `i`-increasing for some
/// `i >= 2`.
pub(crate) fn lead_switch(
    t: &PatternGraph,
    emb: Embedding,
    family: &FreeFamily,
    cycles: &HostColouredGraph,
) -> (Embedding, Vec<SwitchLog>, ColourProfile) {
    let r = cycles.r();
    let (emb, log) = switch_all(t, emb, family, cycles, 1, |m| (2..=r).any(|i| !m.is_i_increasing(i)));
    let fin = profile_unchecked(t, cycles, &emb);
    (emb, log, fin)
}

pub(crate) fn pick_lead(runs: &[(Result<Embedding>, Attempt)]) -> Option<usize> {
    (0..runs.len())
        .filter(|&k| runs[k].0.is_ok())
        .max_by_key(|&k| (runs[k].1.final_profile.as_ref().map_or(i64::MIN, |p| p.min_lead()), std::cmp::Reverse(k)))
}

/// Colour-lead pipeline in `K_n`: per attempt a uniform embedding, the free
/// family, and every switch along a marked cycle; keeps the attempt with the
/// largest `min_i (count₁ − count_i)`.
pub fn lead_colour_kn(t: &TreeGraph, host: &HostColouredGraph, params: LeadParams) -> Result<LeadOutcome> {
    check_sizes(t, host)?;
    if !host.is_complete() {
        return Err(Error::InvalidParameters("lead_colour_kn needs a complete host".into()));
    }
    let warnings = lead_warnings(host, &params);
    let restarts = params.restarts.max(1);
    let family = find_free_family(t);
    let runs: Vec<(Result<Embedding>, Attempt)> = (0..restarts as u64)
        .into_par_iter()
        .map(|a| {
            let derived = seed::derive_seed(params.seed, STREAM_LEAD, a);
            let mut rng = seed::rng(derived);
            let emb = Embedding::random(t.n(), host.n(), &mut rng);
            let initial = profile_unchecked(t, host, &emb);
            let (emb, switchings, fin) = lead_switch(t, emb, &family, host);
            let rec = Attempt {
                index: a,
                derived_seed: derived,
                initial: Some(initial),
                final_profile: Some(fin),
                repair_steps: Vec::new(),
                switchings,
                error: None,
            };
            (Ok(emb), rec)
        })
        .collect();
    finish_lead("lead", t, params, restarts, family.len(), runs, warnings)
}

pub(crate) fn finish_lead(
    pipeline: &str,
    t: &PatternGraph,
    params: LeadParams,
    restarts: usize,
    family_size: usize,
    runs: Vec<(Result<Embedding>, Attempt)>,
    warnings: Vec<String>,
) -> Result<LeadOutcome> {
    let Some(best) = pick_lead(&runs) else {
        // every attempt failed: surface the first failure
        let first = runs.into_iter().next().expect("at least one attempt");
        return Err(first.0.expect_err("failed attempt"));
    };
    let flagged = runs.iter().any(|r| r.0.is_err());
    let embedding = runs[best].0.as_ref().expect("best attempt succeeded").clone();
    let profile = runs[best].1.final_profile.clone().expect("profile");
    debug_assert_eq!(profile.total(), t.m());
    let leads = profile.leads();
    let min_lead = profile.min_lead();
    let record = RunRecord {
        pipeline: pipeline.into(),
        seed: params.seed,
        restarts,
        target: Some(1),
        family_size,
        attempts: runs.into_iter().map(|r| r.1).collect(),
        best_attempt: Some(best),
        embedding: Some(embedding.clone()),
        warnings,
    };
    Ok(LeadOutcome { embedding, leads, min_lead, flagged, record })
}
