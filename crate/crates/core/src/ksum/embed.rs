use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::colourings::is_inert;
use crate::error::{Error, Result};
use crate::graph::embedding::{ghost_count, signed_sum_unchecked};
use crate::graph::{Embedding, HostColouredGraph, PatternGraph};
use crate::repair::{exchange_vertices, remove_ghost_edges};
use crate::seed::{self, STREAM_KSUM};

use super::gadget::{activate_gadget, detect_gadgets, distance3_pairs, Gadget};
use super::sites::find_type2_k22d;

/// `(a, b)`: every copy's signed sum is `≡ b (mod a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residue {
    pub a: i64,
    pub b: i64,
}

impl Residue {
    pub fn admits(&self, k: i64) -> bool {
        (k - self.b).rem_euclid(self.a) == 0
    }
}

/// A ghost-free random copy of `h`, trying a few seeds.
pub(crate) fn some_copy(h: &PatternGraph, host: &HostColouredGraph, seed: u64, tries: u64) -> Result<Embedding> {
    if h.n() > host.n() {
        return Err(Error::NoCopy);
    }
    for t in 0..tries {
        let mut rng = seed::derived_rng(seed, STREAM_KSUM, u64::MAX - t);
        let e = Embedding::random(h.n(), host.n(), &mut rng);
        if let Ok((e, _)) = remove_ghost_edges(h, host, &e, &[]) {
            return Ok(e);
        }
    }
    Err(Error::NoCopy)
}

/// `a = 4` for inert instances, else 2; `b` is the sum of one copy mod `a`.
pub fn predict_residue(h: &PatternGraph, host: &HostColouredGraph) -> Result<Residue> {
    host.require_two_colours()?;
    let a = if is_inert(h, host) { 4 } else { 2 };
    let e = some_copy(h, host, 0, 32)?;
    let b = signed_sum_unchecked(h, host, &e).rem_euclid(a);
    Ok(Residue { a, b })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KsumParams {
    pub restarts: usize,
    pub seed: u64,
    /// Cap on gadget activations per attempt.
    pub gadget_budget: usize,
    /// Restarts of the exchange local search run after the rounds fail.
    pub local_restarts: usize,
    /// Moves per local-search restart.
    pub local_steps: usize,
}

impl Default for KsumParams {
    fn default() -> Self {
        KsumParams { restarts: 8, seed: 0, gadget_budget: 1000, local_restarts: 24, local_steps: 400 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundAttempt {
    pub index: u64,
    pub derived_seed: u64,
    /// Signed sum after each completed round, labelled.
    pub round_sums: Vec<(String, i64)>,
    pub two_gadget: Option<Gadget>,
    pub round1_exchanges: usize,
    /// `(a, b, delta)` per activation.
    pub activations: Vec<(usize, usize, i64)>,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalSearchLog {
    pub restarts_used: usize,
    pub derived_seeds: Vec<u64>,
    pub moves: usize,
    pub best_sum: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KsumRecord {
    pub seed: u64,
    pub k: i64,
    pub residue: Residue,
    pub attempts: Vec<RoundAttempt>,
    pub local_search: Option<LocalSearchLog>,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum KsumOutcome {
    Found { embedding: Embedding, record: KsumRecord },
    Infeasible { a: i64, b: i64 },
    SearchFailed { closest: Option<i64>, embedding: Option<Embedding>, record: KsumRecord },
}

impl KsumOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            KsumOutcome::Found { embedding, .. } => Some(embedding),
            _ => None,
        }
    }
}

/// Moves pattern vertices to host targets with one exchange each; returns the
/// number of exchanges.
fn place(emb: &mut Embedding, targets: &[(usize, usize)]) -> usize {
    let mut moves = 0;
    for &(p, t) in targets {
        let cur = emb.image(p);
        if cur != t {
            *emb = exchange_vertices(emb, cur, t).expect("distinct vertices");
            moves += 1;
        }
    }
    moves
}

/// Targets putting `a` on `x`, `b` on `z`, `N(a)` on `{y} ∪ B1` and `N(b)` on
/// `B2`, keeping vertices that already sit on a usable slot.
fn gadget_targets(h: &PatternGraph, emb: &Embedding, a: usize, b: usize, site: &super::BipartiteK22D) -> Vec<(usize, usize)> {
    let mut t = vec![(a, site.x), (b, site.z)];
    let mut free: Vec<usize> = site.b_prime.clone();
    let mut y_taken = false;
    let na = h.neighbours(a);
    let nb = h.neighbours(b);
    let mut pending_a = Vec::new();
    for &v in na {
        let img = emb.image(v);
        if img == site.y && !y_taken {
            y_taken = true;
            t.push((v, img));
        } else if let Some(i) = free.iter().position(|&s| s == img) {
            free.remove(i);
            t.push((v, img));
        } else {
            pending_a.push(v);
        }
    }
    // N(a) needs exactly one vertex on y
    if !y_taken {
        if let Some(v) = pending_a.first().copied() {
            pending_a.remove(0);
            t.push((v, site.y));
        } else {
            // every neighbour of a sits in B′; move the last one to y
            let (v, img) = t.pop().expect("a has neighbours");
            free.push(img);
            free.sort_unstable();
            t.push((v, site.y));
        }
    }
    let mut pending_b = Vec::new();
    for &v in nb {
        let img = emb.image(v);
        if let Some(i) = free.iter().position(|&s| s == img) {
            // keep only if B2 still fits after N(a) is placed
            if free.len() > pending_a.len() {
                free.remove(i);
                t.push((v, img));
                continue;
            }
        }
        pending_b.push(v);
    }
    for v in pending_a.into_iter().chain(pending_b) {
        let s = free.remove(0);
        t.push((v, s));
    }
    t
}

struct Rounds<'a> {
    h: &'a PatternGraph,
    host: &'a HostColouredGraph,
    k: i64,
    inert: bool,
    params: &'a KsumParams,
}

impl Rounds<'_> {
    fn attempt(&self, index: u64, pairs: &[(usize, usize)]) -> (Option<Embedding>, RoundAttempt, Option<(i64, Embedding)>) {
        let derived = seed::derive_seed(self.params.seed, STREAM_KSUM, index);
        let mut rec = RoundAttempt {
            index,
            derived_seed: derived,
            round_sums: Vec::new(),
            two_gadget: None,
            round1_exchanges: 0,
            activations: Vec::new(),
            outcome: String::new(),
        };
        let mut rng = seed::rng(derived);
        let start = Embedding::random(self.h.n(), self.host.n(), &mut rng);
        let mut emb = match remove_ghost_edges(self.h, self.host, &start, &[]) {
            Ok((e, _)) => e,
            Err(e) => {
                rec.outcome = format!("initial repair failed: {e}");
                return (None, rec, None);
            }
        };
        let sum = |e: &Embedding| signed_sum_unchecked(self.h, self.host, e);
        rec.round_sums.push(("initial".into(), sum(&emb)));

        // rounds 1 and 2: place a 2-gadget, then clear ghosts around it
        let mut protected: Vec<usize> = Vec::new();
        let mut two: Option<Gadget> = None;
        let mut used_pair: Option<(usize, usize)> = None;
        if !self.inert && !pairs.is_empty() {
            if let Ok(Some(site)) = find_type2_k22d(self.host, self.h.max_degree()) {
                let mut best: Option<(usize, (usize, usize), Vec<(usize, usize)>)> = None;
                for &(p, q) in pairs {
                    for (a, b) in [(p, q), (q, p)] {
                        let t = gadget_targets(self.h, &emb, a, b, &site);
                        let cost = t.iter().filter(|&&(v, s)| emb.image(v) != s).count();
                        if best.as_ref().is_none_or(|bst| cost < bst.0) {
                            best = Some((cost, (a, b), t));
                        }
                    }
                }
                let (_, (a, b), targets) = best.expect("non-empty pairs");
                let mut placed = emb.clone();
                rec.round1_exchanges = place(&mut placed, &targets);
                let mut prot = vec![a, b];
                prot.extend(self.h.neighbours(a));
                prot.extend(self.h.neighbours(b));
                match remove_ghost_edges(self.h, self.host, &placed, &prot) {
                    Ok((e, _)) => {
                        let g = detect_gadgets(self.h, &e, self.host, &[(a, b)]);
                        if let Some(g) = g.into_iter().find(|g| g.delta.abs() == 2) {
                            emb = e;
                            protected = prot;
                            used_pair = Some((a.min(b), a.max(b)));
                            two = Some(g);
                            rec.round_sums.push(("round1".into(), sum(&emb)));
                            rec.round_sums.push(("round2".into(), sum(&emb)));
                        }
                    }
                    Err(e) => rec.outcome = format!("round 2 repair failed: {e}; continuing without a 2-gadget"),
                }
            }
        }
        rec.two_gadget = two.clone();

        // round 3: gadgets until the residual is 0 or the 2-gadget's delta
        let others: Vec<(usize, usize)> =
            pairs.iter().copied().filter(|&(p, q)| Some((p.min(q), p.max(q))) != used_pair).collect();
        let mut done: Vec<(usize, usize)> = Vec::new();
        for _ in 0..self.params.gadget_budget {
            let s = sum(&emb);
            let residual = self.k - s;
            let goal = match &two {
                Some(g) if residual.rem_euclid(4) == 2 => residual - g.delta,
                _ => residual,
            };
            if goal == 0 {
                break;
            }
            let avail: Vec<(usize, usize)> = others.iter().copied().filter(|p| !done.contains(p)).collect();
            let gadgets = detect_gadgets(self.h, &emb, self.host, &avail);
            let pick = gadgets
                .iter()
                .filter(|g| g.delta.signum() == goal.signum() && g.delta.abs() <= goal.abs())
                .max_by_key(|g| g.delta.abs());
            let Some(g) = pick else { break };
            emb = activate_gadget(self.h, &emb, g).expect("fresh gadget");
            done.push((g.a.min(g.b), g.a.max(g.b)));
            rec.activations.push((g.a, g.b, g.delta));
        }
        rec.round_sums.push(("round3".into(), sum(&emb)));

        // round 4: fire the 2-gadget if the residual asks for it
        if let Some(g) = &two {
            if self.k - sum(&emb) == g.delta {
                emb = activate_gadget(self.h, &emb, g).expect("2-gadget untouched");
                rec.round_sums.push(("round4".into(), sum(&emb)));
            }
        }
        let s = sum(&emb);
        debug_assert_eq!(ghost_count(self.h, self.host, &emb), 0);
        debug_assert!(protected.iter().all(|&p| p < self.h.n()));
        if s == self.k {
            rec.outcome = "found".into();
            (Some(emb), rec, None)
        } else {
            if rec.outcome.is_empty() {
                rec.outcome = format!("stopped at sum {s}");
            }
            (None, rec, Some((s, emb)))
        }
    }
}

/// Signed-sum change from exchanging host vertices `h1`, `h2` (either may
/// be outside the copy); `None` if the result has a ghost edge.
fn exchange_delta(h: &PatternGraph, host: &HostColouredGraph, emb: &Embedding, inv: &[Option<usize>], h1: usize, h2: usize) -> Option<i64> {
    let new_img = |v: usize| {
        let i = emb.image(v);
        if i == h1 {
            h2
        } else if i == h2 {
            h1
        } else {
            i
        }
    };
    let mut d = 0;
    let mut seen: [Option<usize>; 2] = [inv[h1], inv[h2]];
    if seen[0].is_none() {
        seen.swap(0, 1);
    }
    for (idx, p) in seen.iter().enumerate() {
        let Some(p) = *p else { continue };
        for &y in h.neighbours(p) {
            // count an edge between the two moved vertices once
            if idx == 1 && Some(y) == seen[0] {
                continue;
            }
            let (a, b) = (new_img(p), new_img(y));
            if !host.has_edge(a, b) {
                return None;
            }
            d += host.sign(a, b) - host.sign(emb.image(p), emb.image(y));
        }
    }
    Some(d)
}

/// Exchange hill-climbing on `|sum − k|` over ghost-free copies.
fn local_search(h: &PatternGraph, host: &HostColouredGraph, k: i64, params: &KsumParams) -> (Option<Embedding>, LocalSearchLog, Option<(i64, Embedding)>) {
    let mut log = LocalSearchLog { restarts_used: 0, derived_seeds: Vec::new(), moves: 0, best_sum: None };
    let mut closest: Option<(i64, Embedding)> = None;
    let n = host.n();
    for j in 0..params.local_restarts {
        let derived = seed::derive_seed(params.seed, STREAM_KSUM, (1u64 << 32) + j as u64);
        log.derived_seeds.push(derived);
        log.restarts_used += 1;
        let mut rng = seed::rng(derived);
        let start = Embedding::random(h.n(), n, &mut rng);
        let Ok((mut emb, _)) = remove_ghost_edges(h, host, &start, &[]) else { continue };
        let mut s = signed_sum_unchecked(h, host, &emb);
        let mut sideways = 0;
        for _ in 0..params.local_steps {
            if closest.as_ref().is_none_or(|c| (s - k).abs() < (c.0 - k).abs()) {
                closest = Some((s, emb.clone()));
            }
            if s == k {
                log.best_sum = Some(s);
                return (Some(emb), log, closest);
            }
            let inv = emb.inverse(n);
            let mut best = i64::MAX;
            let mut moves: Vec<(usize, usize, i64)> = Vec::new();
            for h1 in 0..n {
                for h2 in h1 + 1..n {
                    if inv[h1].is_none() && inv[h2].is_none() {
                        continue;
                    }
                    if let Some(d) = exchange_delta(h, host, &emb, &inv, h1, h2) {
                        let obj = (s + d - k).abs();
                        if obj < best {
                            best = obj;
                            moves.clear();
                        }
                        if obj == best {
                            moves.push((h1, h2, d));
                        }
                    }
                }
            }
            let cur = (s - k).abs();
            if moves.is_empty() || best > cur || (best == cur && sideways >= n) {
                break;
            }
            if best == cur {
                sideways += 1;
            } else {
                sideways = 0;
            }
            let &(h1, h2, d) = moves.choose(&mut rng).expect("non-empty");
            emb = exchange_vertices(&emb, h1, h2).expect("distinct");
            s += d;
            log.moves += 1;
            let _ = rng.gen::<u32>();
        }
        if s == k {
            log.best_sum = Some(s);
            return (Some(emb), log, closest);
        }
    }
    log.best_sum = closest.as_ref().map(|c| c.0);
    (None, log, closest)
}

/// A copy of `h` in `host` with signed sum exactly `k`.
///
/// Returns `Infeasible` at once when `k` fails the residue test. Otherwise
/// each attempt runs four rounds: place a 2-gadget on a type-2 site (skipped
/// for inert instances), clear ghosts around it, activate gadgets until the
/// residual is 0 or the 2-gadget's delta, then fire the 2-gadget. If no
/// attempt lands on `k`, an exchange local search on `|sum − k|` takes over.
pub fn ksum_embed(h: &PatternGraph, host: &HostColouredGraph, k: i64, params: KsumParams) -> Result<KsumOutcome> {
    host.require_two_colours()?;
    let residue = predict_residue(h, host)?;
    if !residue.admits(k) {
        return Ok(KsumOutcome::Infeasible { a: residue.a, b: residue.b });
    }
    let inert = residue.a == 4;
    let mut record = KsumRecord { seed: params.seed, k, residue, attempts: Vec::new(), local_search: None, result: String::new() };
    let m = h.m() as i64;
    let mut closest: Option<(i64, Embedding)> = None;
    let keep = |c: Option<(i64, Embedding)>, closest: &mut Option<(i64, Embedding)>| {
        if let Some(c) = c {
            if closest.as_ref().is_none_or(|b| (c.0 - k).abs() < (b.0 - k).abs()) {
                *closest = Some(c);
            }
        }
    };
    if k.abs() <= m {
        let pairs = distance3_pairs(h).pairs;
        let rounds = Rounds { h, host, k, inert, params: &params };
        for a in 0..params.restarts.max(1) as u64 {
            let (found, rec, near) = rounds.attempt(a, &pairs);
            record.attempts.push(rec);
            if let Some(e) = found {
                record.result = format!("found in attempt {a}");
                return Ok(KsumOutcome::Found { embedding: e, record });
            }
            keep(near, &mut closest);
        }
        let (found, log, near) = local_search(h, host, k, &params);
        record.local_search = Some(log);
        if let Some(e) = found {
            record.result = "found by local search".into();
            return Ok(KsumOutcome::Found { embedding: e, record });
        }
        keep(near, &mut closest);
    }
    record.result = "search failed".into();
    let (closest, embedding) = match closest {
        Some((s, e)) => (Some(s), Some(e)),
        None => (None, None),
    };
    Ok(KsumOutcome::SearchFailed { closest, embedding, record })
}
