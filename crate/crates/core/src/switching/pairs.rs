use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Embedding, HostColouredGraph, PatternGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairKind {
    I,
    II,
    III,
}

/// Tree edges `uw` and `vz` whose switch `uw, vz → uz, vw` keeps the tree's
/// isomorphism type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwitchablePair {
    pub kind: PairKind,
    pub u: usize,
    pub w: usize,
    pub v: usize,
    pub z: usize,
}

impl SwitchablePair {
    pub fn roles(&self) -> [usize; 4] {
        [self.u, self.w, self.v, self.z]
    }

    /// Pattern vertices whose images are exchanged by the switch.
    pub fn swapped(&self) -> [usize; 2] {
        match self.kind {
            PairKind::I => [self.w, self.z],
            PairKind::II | PairKind::III => [self.u, self.v],
        }
    }

    /// The two removed pattern edges, normalised.
    pub fn edges(&self) -> [(usize, usize); 2] {
        let e = |a: usize, b: usize| (a.min(b), a.max(b));
        [e(self.u, self.w), e(self.v, self.z)]
    }

    /// Host edges `(removed, added)` under `emb`.
    pub fn image_edges(&self, emb: &Embedding) -> ([(usize, usize); 2], [(usize, usize); 2]) {
        let (u, w, v, z) = (emb.image(self.u), emb.image(self.w), emb.image(self.v), emb.image(self.z));
        ([(u, w), (v, z)], [(u, z), (v, w)])
    }

    /// Checks the defining conditions for `kind` against `t`.
    pub fn is_valid_for(&self, t: &PatternGraph) -> bool {
        kind_holds(t, self.kind, self.u, self.w, self.v, self.z)
    }
}

fn kind_holds(t: &PatternGraph, kind: PairKind, u: usize, w: usize, v: usize, z: usize) -> bool {
    let distinct = u != w && u != v && u != z && w != v && w != z && v != z;
    if !distinct || !t.has_edge(u, w) || !t.has_edge(v, z) {
        return false;
    }
    match kind {
        PairKind::I => t.degree(w) == 1 && t.degree(z) == 1,
        PairKind::II => {
            t.degree(u) == 2
                && t.degree(v) == 2
                && t.neighbours(u).iter().any(|&c| c != w && c != z && t.has_edge(v, c))
        }
        PairKind::III => t.degree(u) == 2 && t.degree(v) == 2 && t.has_edge(u, v),
    }
}

/// Classifies the edge pair `e, f`. Kind III is preferred over II over I;
/// among valid role assignments of that kind the lexicographically smallest
/// `(u, w, v, z)` is returned.
pub fn is_switchable(t: &PatternGraph, e: (usize, usize), f: (usize, usize)) -> Option<SwitchablePair> {
    let (a, b) = e;
    let (c, d) = f;
    if !t.has_edge(a, b) || !t.has_edge(c, d) {
        return None;
    }
    if a == c || a == d || b == c || b == d {
        return None;
    }
    let assignments = [
        (a, b, c, d),
        (a, b, d, c),
        (b, a, c, d),
        (b, a, d, c),
        (c, d, a, b),
        (c, d, b, a),
        (d, c, a, b),
        (d, c, b, a),
    ];
    for kind in [PairKind::III, PairKind::II, PairKind::I] {
        let best = assignments.iter().copied().filter(|&(u, w, v, z)| kind_holds(t, kind, u, w, v, z)).min();
        if let Some((u, w, v, z)) = best {
            return Some(SwitchablePair { kind, u, w, v, z });
        }
    }
    None
}

/// Applies the switch `uw, vz → uz, vw` by exchanging the images of the two
/// swapped vertices. Fails if a replacement pair is absent from `host`.
pub fn apply_switching(emb: &Embedding, pair: &SwitchablePair, host: &HostColouredGraph) -> Result<Embedding> {
    let (_, added) = pair.image_edges(emb);
    for (p, q) in added {
        if !host.has_edge(p, q) {
            return Err(Error::GhostReplacement(p, q));
        }
    }
    Ok(apply_unchecked(emb, pair))
}

pub(crate) fn apply_unchecked(emb: &Embedding, pair: &SwitchablePair) -> Embedding {
    let mut out = emb.clone();
    let [a, b] = pair.swapped();
    out.map.swap(a, b);
    out
}
