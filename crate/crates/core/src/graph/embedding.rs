use serde::{Deserialize, Serialize};

use super::host::HostColouredGraph;
use super::pattern::PatternGraph;
use crate::error::{Error, Result};

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn identity(n: usize) -> Self {
        Embedding { map: (0..n).collect() }
    }

    /// Uniformly random injective map of `k` pattern vertices into `0..n`.
    pub fn random<R: rand::Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> Self {
        let mut hosts: Vec<usize> = (0..n).collect();
        // partial Fisher-Yates
        for i in 0..k {
            let j = rng.gen_range(i..n);
            hosts.swap(i, j);
        }
        hosts.truncate(k);
        Embedding { map: hosts }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Host vertex → pattern vertex, `None` off the image.
    pub fn inverse(&self, host_n: usize) -> Vec<Option<usize>> {
        let mut inv = vec![None; host_n];
        for (p, &h) in self.map.iter().enumerate() {
            inv[h] = Some(p);
        }
        inv
    }

    /// Checks totality and injectivity against the given sizes.
    pub fn check(&self, pattern_n: usize, host_n: usize) -> Result<()> {
        if self.map.len() != pattern_n {
            return Err(Error::Malformed(format!(
                "embedding covers {} of {} pattern vertices",
                self.map.len(),
                pattern_n
            )));
        }
        let mut seen = vec![false; host_n];
        for (p, &h) in self.map.iter().enumerate() {
            if h >= host_n {
                return Err(Error::Malformed(format!("vertex {p} maps to {h}, outside host of size {host_n}")));
            }
            if std::mem::replace(&mut seen[h], true) {
                return Err(Error::Malformed(format!("host vertex {h} used twice")));
            }
        }
        Ok(())
    }

    /// Image edge set `{min, max}` sorted, for copy comparison.
    pub fn copy_edges(&self, pattern: &PatternGraph) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = pattern
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.map[u], self.map[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e
    }
}

/// Per-colour edge counts of an embedded copy; index 0 is unused.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColourProfile {
    pub counts: Vec<usize>,
}

impl ColourProfile {
    pub fn get(&self, colour: u8) -> usize {
        self.counts[colour as usize]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `count(1) − count(i)` for every `i in 2..=r`, indexed by `i`.
    pub fn leads(&self) -> Vec<i64> {
        let c1 = self.counts.get(1).copied().unwrap_or(0) as i64;
        (0..self.counts.len()).map(|i| if i >= 2 { c1 - self.counts[i] as i64 } else { 0 }).collect()
    }

    pub fn min_lead(&self) -> i64 {
        self.leads().into_iter().skip(2).min().unwrap_or(0)
    }
}

/// Signed sum of a copy under the `{+1, −1}` view.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedSum {
    pub value: i64,
}

/// Pattern edges whose images are not host edges.
pub fn validate_embedding(
    pattern: &PatternGraph,
    host: &HostColouredGraph,
    emb: &Embedding,
) -> Result<Vec<(usize, usize)>> {
    emb.check(pattern.n(), host.n())?;
    Ok(ghost_edges_unchecked(pattern, host, emb))
}

pub(crate) fn ghost_edges_unchecked(
    pattern: &PatternGraph,
    host: &HostColouredGraph,
    emb: &Embedding,
) -> Vec<(usize, usize)> {
    pattern
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !host.has_edge(emb.map[u], emb.map[v]))
        .collect()
}

pub(crate) fn ghost_count(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding) -> usize {
    pattern.edges().iter().filter(|&&(u, v)| !host.has_edge(emb.map[u], emb.map[v])).count()
}

pub fn colour_profile(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding) -> Result<ColourProfile> {
    emb.check(pattern.n(), host.n())?;
    let mut counts = vec![0usize; host.r() as usize + 1];
    for &(u, v) in pattern.edges() {
        let c = host.colour(emb.map[u], emb.map[v]);
        if c == 0 {
            return Err(Error::GhostEdge(u, v));
        }
        counts[c as usize] += 1;
    }
    Ok(ColourProfile { counts })
}

/// Colour profile that tolerates ghost edges by reading colours from `host`
/// regardless of `G`; used when `host` is the extension to `K_n`.
pub(crate) fn profile_unchecked(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding) -> ColourProfile {
    let mut counts = vec![0usize; host.r() as usize + 1];
    for &(u, v) in pattern.edges() {
        counts[host.colour(emb.map[u], emb.map[v]) as usize] += 1;
    }
    counts[0] = 0;
    ColourProfile { counts }
}

pub fn signed_sum(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding) -> Result<SignedSum> {
    host.require_two_colours()?;
    let p = colour_profile(pattern, host, emb)?;
    Ok(SignedSum { value: p.get(1) as i64 - p.get(2) as i64 })
}

pub(crate) fn signed_sum_unchecked(pattern: &PatternGraph, host: &HostColouredGraph, emb: &Embedding) -> i64 {
    pattern.edges().iter().map(|&(u, v)| host.sign(emb.map[u], emb.map[v])).sum()
}
