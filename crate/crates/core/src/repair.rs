//! Removing ghost edges by vertex exchanges, and the colour-lead pipeline on
//! dense hosts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::embedding::{ghost_count, ghost_edges_unchecked, profile_unchecked};
use crate::graph::{Embedding, HostColouredGraph, PatternGraph, TreeGraph};
use crate::record::Attempt;
use crate::seed::{self, STREAM_LEAD};
use crate::switching::pipeline::{finish_lead, lead_switch, lead_warnings};
use crate::switching::{find_free_family, FreeFamily, LeadOutcome, LeadParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeStep {
    /// Host vertices whose preimages were exchanged.
    pub a: usize,
    pub b: usize,
    pub ghosts_before: usize,
    pub ghosts_after: usize,
    /// Copy edges removed by the step.
    pub edge_diff: usize,
}

/// Swaps the preimages of host vertices `a` and `b`. If only one of them is
/// in the image, the copy moves onto the other.
pub fn exchange_vertices(emb: &Embedding, a: usize, b: usize) -> Result<Embedding> {
    if a == b {
        return Err(Error::InvalidParameters(format!("exchange of vertex {a} with itself")));
    }
    let mut out = emb.clone();
    for h in out.map.iter_mut() {
        if *h == a {
            *h = b;
        } else if *h == b {
            *h = a;
        }
    }
    Ok(out)
}

fn block_ball(t: &PatternGraph, v: usize, radius: usize, blocked: &mut [bool]) {
    for x in t.ball(v, radius) {
        blocked[x] = true;
    }
}

/// Greedy set of pattern vertices at pairwise distance at least 3, starting
/// from `must_include` and skipping `excluded`.
pub fn distance3_set(t: &PatternGraph, must_include: usize, excluded: &[usize]) -> Vec<usize> {
    let mut blocked = vec![false; t.n()];
    for &p in excluded {
        blocked[p] = true;
    }
    let mut s = vec![must_include];
    block_ball(t, must_include, 2, &mut blocked);
    for v in 0..t.n() {
        if !blocked[v] {
            s.push(v);
            block_ball(t, v, 2, &mut blocked);
        }
    }
    s
}

/// Which host edges would join `x`'s neighbours to host vertex `h`.
fn fits_at(t: &PatternGraph, host: &HostColouredGraph, emb: &Embedding, x: usize, h: usize, skip: usize) -> bool {
    t.neighbours(x).iter().all(|&y| y == skip || host.has_edge(h, emb.image(y)))
}

fn touched_pairs(family: &FreeFamily, x: usize, z: usize) -> usize {
    family.pairs.iter().filter(|p| p.edges().iter().any(|&(a, b)| a == x || b == x || a == z || b == z)).count()
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Candidate {
    touched: usize,
    host: usize,
    x: usize,
    /// Pattern vertex, or `None` for an unused host vertex.
    z: Option<usize>,
}

/// Exchanges that clear every ghost edge while keeping `protected` pattern
/// vertices in place. Each step swaps the images of a ghost-incident vertex
/// `x` and a vertex `z` at distance at least 3 such that all new edges are in
/// the host, so the ghost count strictly drops and at most `2Δ` copy edges
/// change. Candidates come first from a greedy distance-3 set, then from any
/// far vertex, then from host vertices outside the copy.
pub fn remove_ghost_edges(
    pattern: &PatternGraph,
    host: &HostColouredGraph,
    emb: &Embedding,
    protected: &[usize],
) -> Result<(Embedding, Vec<ExchangeStep>)> {
    remove_ghost_edges_with(pattern, host, emb, protected, None)
}

/// As [`remove_ghost_edges`], preferring exchanges that touch few pairs of
/// `family`.
pub fn remove_ghost_edges_with(
    pattern: &PatternGraph,
    host: &HostColouredGraph,
    emb: &Embedding,
    protected: &[usize],
    family: Option<&FreeFamily>,
) -> Result<(Embedding, Vec<ExchangeStep>)> {
    emb.check(pattern.n(), host.n())?;
    let n = pattern.n();
    let mut is_protected = vec![false; n];
    for &p in protected {
        is_protected[p] = true;
    }
    let mut near_protected = is_protected.clone();
    for &p in protected {
        for &y in pattern.neighbours(p) {
            near_protected[y] = true;
        }
    }
    let excluded: Vec<usize> = (0..n).filter(|&v| near_protected[v]).collect();
    let mut cur = emb.clone();
    let mut steps = Vec::new();
    loop {
        let ghosts = ghost_edges_unchecked(pattern, host, &cur);
        let Some(&(p, q)) = ghosts.first() else {
            return Ok((cur, steps));
        };
        let before = ghosts.len();
        let ends: Vec<usize> = [p, q].into_iter().filter(|&x| !is_protected[x]).collect();
        if ends.is_empty() {
            return Err(Error::ProtectedGhost(p));
        }
        let score = |x: usize, z: usize| family.map_or(0, |f| touched_pairs(f, x, z));
        let mut best: Option<Candidate> = None;
        let consider = |best: &mut Option<Candidate>, c: Candidate| {
            if best.as_ref().is_none_or(|b| c < *b) {
                *best = Some(c);
            }
        };
        for tier in 0..3 {
            for &x in &ends {
                match tier {
                    0 | 1 => {
                        let dist = pattern.bfs(x);
                        let pool: Vec<usize> = if tier == 0 {
                            distance3_set(pattern, x, &excluded.iter().copied().filter(|&v| v != x).collect::<Vec<_>>())
                        } else {
                            (0..n).collect()
                        };
                        for z in pool {
                            if z == x || is_protected[z] || dist[z].is_some_and(|d| d < 3) {
                                continue;
                            }
                            let (hx, hz) = (cur.image(x), cur.image(z));
                            if fits_at(pattern, host, &cur, x, hz, usize::MAX) && fits_at(pattern, host, &cur, z, hx, usize::MAX) {
                                consider(&mut best, Candidate { touched: score(x, z), host: hz, x, z: Some(z) });
                            }
                        }
                    }
                    _ => {
                        let inv = cur.inverse(host.n());
                        for h in 0..host.n() {
                            if inv[h].is_none() && fits_at(pattern, host, &cur, x, h, usize::MAX) {
                                consider(&mut best, Candidate { touched: score(x, x), host: h, x, z: None });
                            }
                        }
                    }
                }
            }
            if best.is_some() {
                break;
            }
        }
        let Some(c) = best else {
            return Err(Error::NoCandidate { vertex: p, ghosts: before });
        };
        let a = cur.image(c.x);
        let next = exchange_vertices(&cur, a, c.host)?;
        let old: std::collections::HashSet<_> = cur.copy_edges(pattern).into_iter().collect();
        let edge_diff = next.copy_edges(pattern).iter().filter(|e| !old.contains(e)).count();
        let after = ghost_count(pattern, host, &next);
        debug_assert!(after < before);
        steps.push(ExchangeStep { a, b: c.host, ghosts_before: before, ghosts_after: after, edge_diff });
        cur = next;
    }
}

/// Colours every pair missing from `host` round-robin in lexicographic order,
/// giving a complete host.
pub fn extend_colouring(host: &HostColouredGraph) -> HostColouredGraph {
    let mut out = host.clone();
    let r = host.r().max(1) as usize;
    let mut k = 0;
    for u in 0..host.n() {
        for v in u + 1..host.n() {
            if !host.has_edge(u, v) {
                out.set(u, v, (k % r + 1) as u8);
                k += 1;
            }
        }
    }
    out
}

/// Colour-lead pipeline on a dense host `G`: extend the colouring to `K_n`,
/// embed uniformly, clear ghost edges, then switch along marked cycles that
/// lie in `G`. With `G = K_n` this reproduces [`crate::switching::lead_colour_kn`].
pub fn lead_colour_dense(t: &TreeGraph, host: &HostColouredGraph, params: LeadParams) -> Result<LeadOutcome> {
    if t.n() > host.n() {
        return Err(Error::InvalidParameters(format!("pattern has {} vertices, host only {}", t.n(), host.n())));
    }
    let full = extend_colouring(host);
    let mut warnings = lead_warnings(&full, &params);
    if !host.is_complete() {
        warnings.push(format!("host minimum degree {} of {}", host.min_degree(), host.n().saturating_sub(1)));
    }
    let restarts = params.restarts.max(1);
    let family = find_free_family(t);
    let runs: Vec<(Result<Embedding>, Attempt)> = (0..restarts as u64)
        .into_par_iter()
        .map(|a| {
            let derived = seed::derive_seed(params.seed, STREAM_LEAD, a);
            let mut rng = seed::rng(derived);
            let emb = Embedding::random(t.n(), host.n(), &mut rng);
            let initial = profile_unchecked(t, &full, &emb);
            let mut rec = Attempt {
                index: a,
                derived_seed: derived,
                initial: Some(initial),
                final_profile: None,
                repair_steps: Vec::new(),
                switchings: Vec::new(),
                error: None,
            };
            match remove_ghost_edges_with(t, host, &emb, &[], Some(&family)) {
                Ok((emb, steps)) => {
                    let (emb, switchings, fin) = lead_switch(t, emb, &family, host);
                    rec.repair_steps = steps;
                    rec.switchings = switchings;
                    rec.final_profile = Some(fin);
                    (Ok(emb), rec)
                }
                Err(e) => {
                    rec.error = Some(e.to_string());
                    (Err(e), rec)
                }
            }
        })
        .collect();
    finish_lead("lead-dense", t, params, restarts, family.len(), runs, warnings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::gen_balanced_random;
    use crate::graph::{validate_embedding, BLUE};
    use crate::switching::lead_colour_kn;
    use rand::Rng;

    #[test]
    fn exchange_is_an_involution() {
        let e = Embedding::new(vec![3, 1, 4, 0]);
        let f = exchange_vertices(&e, 3, 0).unwrap();
        assert_eq!(f.map, vec![0, 1, 4, 3]);
        assert_eq!(exchange_vertices(&f, 3, 0).unwrap(), e);
        let g = exchange_vertices(&e, 4, 7).unwrap();
        assert_eq!(g.map, vec![3, 1, 7, 0]);
        assert!(exchange_vertices(&e, 2, 2).is_err());
    }

    #[test]
    fn distance3_on_paths_and_stars() {
        let p = TreeGraph::path(10);
        let s = distance3_set(&p, 0, &[]);
        for v in [0, 3, 6, 9] {
            assert!(s.contains(&v));
        }
        assert_eq!(distance3_set(&TreeGraph::star(8), 3, &[]), vec![3]);
    }

    #[test]
    fn clears_ghosts_in_dense_host() {
        let mut rng = seed::rng(4);
        for trial in 0..20 {
            let n = 60;
            let mut h = gen_balanced_random(n, 3, trial);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.02) {
                        h.remove(u, v);
                    }
                }
            }
            let t = TreeGraph::path(n);
            let e = Embedding::random(n, n, &mut rng);
            let g0 = validate_embedding(&t, &h, &e).unwrap().len();
            let (out, steps) = remove_ghost_edges(&t, &h, &e, &[0, 1]).unwrap();
            assert!(validate_embedding(&t, &h, &out).unwrap().is_empty());
            assert!(steps.len() <= g0);
            assert_eq!((out.image(0), out.image(1)), (e.image(0), e.image(1)));
            for s in &steps {
                assert!(s.ghosts_after < s.ghosts_before && s.edge_diff <= 4);
            }
        }
    }

    #[test]
    fn complete_host_matches_kn_pipeline() {
        let h = gen_balanced_random(24, 3, 1);
        let t = TreeGraph::path(24);
        let p = LeadParams { restarts: 4, seed: 11, ..Default::default() };
        let a = lead_colour_kn(&t, &h, p).unwrap();
        let b = lead_colour_dense(&t, &h, p).unwrap();
        assert_eq!(a.embedding, b.embedding);
        assert_eq!(a.leads, b.leads);
    }

    #[test]
    fn extension_is_round_robin() {
        let mut h = HostColouredGraph::monochromatic(5, 3, BLUE);
        h.remove(0, 1);
        h.remove(0, 2);
        h.remove(3, 4);
        let f = extend_colouring(&h);
        assert_eq!((f.colour(0, 1), f.colour(0, 2), f.colour(3, 4)), (1, 2, 3));
    }
}
