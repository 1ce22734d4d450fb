use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Embedding, HostColouredGraph, PatternGraph};

use super::sites::{path_pattern, BipartiteK22D, SiteKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance3Pairs {
    pub pairs: Vec<(usize, usize)>,
    pub degree: usize,
    /// Fewer pairs than the counting bound promises (or none at all).
    pub flagged: bool,
}

/// Pairs of pattern vertices sharing one positive degree, with every two
/// listed vertices at distance at least 3. The degree giving the most pairs
/// wins; ties go to the smaller degree.
pub fn distance3_pairs(h: &PatternGraph) -> Distance3Pairs {
    let delta = h.max_degree();
    let mut best: Option<(Vec<usize>, usize)> = None;
    for d in 1..=delta {
        let mut blocked = vec![false; h.n()];
        let mut chosen = Vec::new();
        for v in 0..h.n() {
            if h.degree(v) == d && !blocked[v] {
                chosen.push(v);
                for x in h.ball(v, 2) {
                    blocked[x] = true;
                }
            }
        }
        if best.as_ref().is_none_or(|(b, _)| chosen.len() / 2 > b.len() / 2) {
            best = Some((chosen, d));
        }
    }
    let (set, degree) = best.unwrap_or_default();
    let pairs: Vec<(usize, usize)> = set.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    let bound = if delta == 0 {
        0
    } else {
        let m = h.m() as f64;
        let d = delta as f64;
        ((m / d) / (d * d + d + 1.0) / d / 2.0).floor() as usize
    };
    let flagged = pairs.is_empty() || pairs.len() < bound;
    Distance3Pairs { pairs, degree, flagged }
}

/// A pattern pair `(a, b)` sitting on a `K_{2,2Δ}` site so that swapping the
/// images of `a` and `b` moves the signed sum by `delta` (`±4` gives order 1,
/// `±2` order 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub site: BipartiteK22D,
    pub a: usize,
    pub b: usize,
    /// Host images of `N(a) \ {a's y-neighbour}` and `N(b)`.
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub sign: i8,
    pub order: u8,
    pub delta: i64,
}

impl Gadget {
    /// Whether `emb` still realises this gadget in `pattern`.
    pub fn is_current(&self, pattern: &PatternGraph, emb: &Embedding) -> bool {
        if emb.image(self.a) != self.site.x || emb.image(self.b) != self.site.z {
            return false;
        }
        let mut na: Vec<usize> = pattern.neighbours(self.a).iter().map(|&v| emb.image(v)).collect();
        let mut nb: Vec<usize> = pattern.neighbours(self.b).iter().map(|&v| emb.image(v)).collect();
        let mut ea = self.b1.clone();
        ea.push(self.site.y);
        let mut eb = self.b2.clone();
        na.sort_unstable();
        nb.sort_unstable();
        ea.sort_unstable();
        eb.sort_unstable();
        na == ea && nb == eb
    }
}

fn signed(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding, v: usize, at: usize) -> i64 {
    pattern.neighbours(v).iter().map(|&y| host.sign(at, emb.image(y))).sum()
}

/// Sum change from exchanging the images of pattern vertices `a` and `b`
/// at distance at least 3; `None` if that creates a ghost edge.
pub(crate) fn pair_swap_delta(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding, a: usize, b: usize) -> Option<i64> {
    let (x, z) = (emb.image(a), emb.image(b));
    let ok = pattern.neighbours(a).iter().all(|&y| host.has_edge(z, emb.image(y)) && host.has_edge(x, emb.image(y)))
        && pattern.neighbours(b).iter().all(|&y| host.has_edge(x, emb.image(y)) && host.has_edge(z, emb.image(y)));
    if !ok {
        return None;
    }
    let old = signed(pattern, host, emb, a, x) + signed(pattern, host, emb, b, z);
    let new = signed(pattern, host, emb, a, z) + signed(pattern, host, emb, b, x);
    Some(new - old)
}

fn gadget_at(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding, a: usize, b: usize) -> Option<Gadget> {
    let d = pattern.degree(a);
    if d == 0 || pattern.degree(b) != d {
        return None;
    }
    let (x, z) = (emb.image(a), emb.image(b));
    let na: Vec<usize> = pattern.neighbours(a).iter().map(|&v| emb.image(v)).collect();
    let nb: Vec<usize> = pattern.neighbours(b).iter().map(|&v| emb.image(v)).collect();
    let mut ys = na.clone();
    ys.sort_unstable();
    for &y in &ys {
        let b1: Vec<usize> = na.iter().copied().filter(|&w| w != y).collect();
        let mut bp: Vec<usize> = b1.iter().chain(nb.iter()).copied().collect();
        bp.sort_unstable();
        let pats: Option<Vec<(i64, i64)>> = bp.iter().map(|&w| path_pattern(host, x, w, z)).collect();
        let Some(pats) = pats else { continue };
        if pats.windows(2).any(|p| p[0] != p[1]) {
            continue;
        }
        for kind in [SiteKind::Type1, SiteKind::Type2] {
            let site = BipartiteK22D { kind, x, z, y, b_prime: bp.clone(), delta: d };
            if site.verify(host) {
                let delta = site.swap_delta(host);
                if delta == 0 {
                    continue;
                }
                let mut b2 = nb.clone();
                b2.sort_unstable();
                let mut b1 = b1.clone();
                b1.sort_unstable();
                return Some(Gadget {
                    site,
                    a,
                    b,
                    b1,
                    b2,
                    sign: delta.signum() as i8,
                    order: if delta.abs() == 4 { 1 } else { 2 },
                    delta,
                });
            }
        }
    }
    None
}

/// Gadgets formed by the embedded neighbourhoods of the pairs in `m`. Each
/// pair is tried in both orientations; every returned gadget has been
/// checked against a direct recount of the swap.
pub fn detect_gadgets(pattern: &PatternGraph, emb: &Embedding, host: &HostColouredGraph, m: &[(usize, usize)]) -> Vec<Gadget> {
    let mut out = Vec::new();
    for &(a, b) in m {
        let g = gadget_at(pattern, host, emb, a, b).or_else(|| gadget_at(pattern, host, emb, b, a));
        if let Some(g) = g {
            debug_assert_eq!(pair_swap_delta(pattern, host, emb, g.a, g.b), Some(g.delta));
            out.push(g);
        }
    }
    out
}

/// Exchanges the images of the gadget's two small-part vertices.
pub fn activate_gadget(pattern: &PatternGraph, emb: &Embedding, g: &Gadget) -> Result<Embedding> {
    if !g.is_current(pattern, emb) {
        return Err(Error::StaleGadget(format!("pair ({}, {}) no longer sits on its site", g.a, g.b)));
    }
    let mut out = emb.clone();
    out.map.swap(g.a, g.b);
    Ok(out)
}
