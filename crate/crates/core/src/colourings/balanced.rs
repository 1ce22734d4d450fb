use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{HostColouredGraph, BLUE, RED};
use crate::seed;

/// Balanced random `r`-colouring of `K_n`: pairs are shuffled and then
/// coloured round-robin, so class sizes differ by at most one.
pub fn gen_balanced_random(n: usize, r: u8, seed: u64) -> HostColouredGraph {
    assert!(r >= 1, "need at least one colour");
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut rng = seed::rng(seed);
    pairs.shuffle(&mut rng);
    let mut h = HostColouredGraph::empty(n, r);
    for (i, (u, v)) in pairs.into_iter().enumerate() {
        h.set(u, v, (i % r as usize) as u8 + 1);
    }
    h
}

/// Random bipartite 2-colouring of `K_n` with the two colour classes as
/// close in size as a split allows: the part size `a` minimises
/// `|a(n − a) − C(n, 2)/2|`, the parts are a random vertex subset and the
/// inner colour is a coin flip.
pub fn gen_bipartite_random(n: usize, seed: u64) -> HostColouredGraph {
    let mut rng = seed::rng(seed);
    let half = (n * n.saturating_sub(1)) as i64;
    let a = (1..=n / 2).min_by_key(|&a| (4 * (a * (n - a)) as i64 - half).abs()).unwrap_or(0);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(&mut rng);
    let mut side = vec![false; n];
    for &v in &verts[..a] {
        side[v] = true;
    }
    let inner = if rng.gen_bool(0.5) { BLUE } else { RED };
    let cross = if inner == BLUE { RED } else { BLUE };
    HostColouredGraph::complete_with(n, 2, |u, v| if side[u] == side[v] { inner } else { cross })
}
