use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Embedding, HostColouredGraph};
use crate::seed;

use super::family::FreeFamily;
use super::pairs::SwitchablePair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CyclePattern {
    /// `xy, yu, uv` in the target colour, `vx` not.
    I,
    /// `xy, uv` in the target colour, `yu, vx` not.
    II,
    /// only `xy` in the target colour.
    III,
}

/// A 4-cycle `x y u v` of the host with marked edges `yu` and `vx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedCycle {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
    pub pattern: CyclePattern,
    /// The colour playing "blue".
    pub target: u8,
    /// Colours of `xy, yu, uv, vx`.
    pub colours: [u8; 4],
}

impl MarkedCycle {
    pub fn marked_edges(&self) -> [(usize, usize); 2] {
        [(self.y, self.u), (self.v, self.x)]
    }

    /// Pattern (iii) whose only colour-`i` edge is `uv`, opposite the blue one.
    pub fn is_i_increasing(&self, i: u8) -> bool {
        self.pattern == CyclePattern::III && self.colours[2] == i && self.colours[1] != i && self.colours[3] != i
    }

    /// For pattern (iii), the colour of `uv`.
    pub fn sole_opposite_colour(&self) -> Option<u8> {
        (self.pattern == CyclePattern::III).then_some(self.colours[2])
    }

    /// Change in colour `c` when the marked pair is traded for the unmarked one.
    pub fn gain(&self, c: u8) -> i64 {
        let has = |k: usize| i64::from(self.colours[k] == c);
        has(0) + has(2) - has(1) - has(3)
    }
}

/// Classifies `x y u v` with marked edges `yu, vx`, using `target` as blue.
pub fn classify_marked_for(
    host: &HostColouredGraph,
    target: u8,
    x: usize,
    y: usize,
    u: usize,
    v: usize,
) -> Option<MarkedCycle> {
    let q = [x, y, u, v];
    for i in 0..4 {
        for j in i + 1..4 {
            if q[i] == q[j] {
                return None;
            }
        }
    }
    let colours = [host.colour(x, y), host.colour(y, u), host.colour(u, v), host.colour(v, x)];
    if colours.contains(&0) {
        return None;
    }
    let b = colours.map(|c| c == target);
    let pattern = match b {
        [true, true, true, false] => CyclePattern::I,
        [true, false, true, false] => CyclePattern::II,
        [true, false, false, false] => CyclePattern::III,
        _ => return None,
    };
    Some(MarkedCycle { x, y, u, v, pattern, target, colours })
}

/// [`classify_marked_for`] with colour 1 as blue.
pub fn classify_marked(host: &HostColouredGraph, x: usize, y: usize, u: usize, v: usize) -> Option<MarkedCycle> {
    classify_marked_for(host, 1, x, y, u, v)
}

/// A cycle with a chosen marked pair, classified under any labelling that
/// keeps the pair marked. Different labellings give the same pattern, so the
/// first hit is returned.
fn classify_object(host: &HostColouredGraph, target: u8, a: usize, b: usize, c: usize, d: usize) -> Option<MarkedCycle> {
    // cycle a b c d, marked ab and cd
    for (x, y, u, v) in [(d, a, b, c), (c, b, a, d), (b, c, d, a), (a, d, c, b)] {
        if let Some(m) = classify_marked_for(host, target, x, y, u, v) {
            return Some(m);
        }
    }
    None
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CycleFilter {
    pub target: u8,
    pub patterns: Vec<CyclePattern>,
    /// Drop cycles that are `i`-increasing for this colour.
    pub not_i_increasing_for: Option<u8>,
}

impl CycleFilter {
    pub fn all() -> Self {
        CycleFilter { target: 1, patterns: vec![CyclePattern::I, CyclePattern::II, CyclePattern::III], not_i_increasing_for: None }
    }

    /// Patterns (i), (ii) and the pattern-(iii) cycles that are not `i`-increasing.
    pub fn not_increasing(i: u8) -> Self {
        CycleFilter { not_i_increasing_for: Some(i), ..Self::all() }
    }

    pub fn accepts(&self, m: &MarkedCycle) -> bool {
        self.patterns.contains(&m.pattern) && self.not_i_increasing_for.is_none_or(|i| !m.is_i_increasing(i))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum CountMode {
    Exact,
    Sample { seed: u64, trials: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycleCount {
    pub estimate: f64,
    /// Zero in exact mode.
    pub std_error: f64,
    pub exact: Option<u64>,
}

pub const EXACT_CYCLE_LIMIT: usize = 120;

/// Number of marked 4-cycles (a 4-cycle together with one of its two
/// opposite edge pairs) passing `filter`. `K_n` has `n(n−1)(n−2)(n−3)/4`
/// such objects in total.
pub fn count_marked_cycles(host: &HostColouredGraph, filter: &CycleFilter, mode: CountMode) -> Result<CycleCount> {
    let n = host.n();
    match mode {
        CountMode::Exact => {
            if n > EXACT_CYCLE_LIMIT {
                return Err(Error::CostGuard(format!("exact marked-cycle count needs n <= {EXACT_CYCLE_LIMIT}, got {n}")));
            }
            let total: u64 = (0..n)
                .into_par_iter()
                .map(|a| {
                    let mut cnt = 0u64;
                    for b in a + 1..n {
                        for c in b + 1..n {
                            for d in c + 1..n {
                                for (p, q, r, s) in [(a, b, c, d), (a, b, d, c), (a, c, b, d)] {
                                    // two choices of marked pair per cycle
                                    for (w, x, y, z) in [(p, q, r, s), (q, r, s, p)] {
                                        if classify_object(host, filter.target, w, x, y, z).is_some_and(|m| filter.accepts(&m)) {
                                            cnt += 1;
                                        }
                                    }
                                }
                            }
                        }
                    }
                    cnt
                })
                .sum();
            Ok(CycleCount { estimate: total as f64, std_error: 0.0, exact: Some(total) })
        }
        CountMode::Sample { seed, trials } => {
            if n < 4 || trials == 0 {
                return Ok(CycleCount { estimate: 0.0, std_error: 0.0, exact: None });
            }
            let mut rng = seed::rng(seed);
            let mut hits = 0u64;
            for _ in 0..trials {
                let e = Embedding::random(4, n, &mut rng);
                let (a, b, c, d) = (e.image(0), e.image(1), e.image(2), e.image(3));
                if classify_object(host, filter.target, a, b, c, d).is_some_and(|m| filter.accepts(&m)) {
                    hits += 1;
                }
            }
            let objects = (n * (n - 1) * (n - 2) * (n - 3)) as f64 / 4.0;
            let p = hits as f64 / trials as f64;
            let se = objects * (p * (1.0 - p) / trials as f64).sqrt();
            Ok(CycleCount { estimate: p * objects, std_error: se, exact: None })
        }
    }
}

/// The marked cycle a pair's switch would use under `emb`: the removed
/// images are the marked edges and the added images the unmarked ones.
pub fn image_cycle(emb: &Embedding, pair: &SwitchablePair, host: &HostColouredGraph, target: u8) -> Option<MarkedCycle> {
    let (u, w, v, z) = (emb.image(pair.u), emb.image(pair.w), emb.image(pair.v), emb.image(pair.z));
    // cycle u w v z, marked uw and vz
    classify_object(host, target, u, w, v, z)
}

/// Pairs of `family` whose images sit on the marked edges of a cycle
/// accepted by `predicate`, with that cycle.
pub fn desirable_switchings(
    emb: &Embedding,
    family: &FreeFamily,
    host: &HostColouredGraph,
    target: u8,
    predicate: impl Fn(&MarkedCycle) -> bool,
) -> Vec<(SwitchablePair, MarkedCycle)> {
    family
        .pairs
        .iter()
        .filter_map(|p| image_cycle(emb, p, host, target).filter(|m| predicate(m)).map(|m| (*p, m)))
        .collect()
}
