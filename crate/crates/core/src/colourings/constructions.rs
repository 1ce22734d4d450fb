use crate::error::{Error, Result};
use crate::graph::{HostColouredGraph, TreeGraph, BLUE, RED};

use super::projective::rebalance;

/// Circulant `d`-regular graph on `m` vertices: offsets `1..=d/2`, plus the
/// antipodal matching when `d` is odd (needs `m` even).
pub fn circulant_edges(m: usize, d: usize) -> Result<Vec<(usize, usize)>> {
    if d >= m.max(1) || (d % 2 == 1 && m % 2 == 1) {
        return Err(Error::InvalidParameters(format!("no circulant {d}-regular graph on {m} vertices")));
    }
    let mut edges = Vec::new();
    for off in 1..=d / 2 {
        for u in 0..m {
            let v = (u + off) % m;
            // offset m/2 with even m would double-count
            if 2 * off == m && u >= v {
                continue;
            }
            edges.push((u.min(v), u.max(v)));
        }
    }
    if d % 2 == 1 {
        for u in 0..m / 2 {
            edges.push((u, u + m / 2));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

/// The matching-decomposition colouring before rebalancing.
pub fn gen_prop14_colouring_unbalanced(n: usize, r: u8) -> Result<HostColouredGraph> {
    if r < 3 {
        return Err(Error::InvalidParameters(format!("needs r >= 3, got {r}")));
    }
    let parts = r as usize - 1;
    if n == 0 || !n.is_multiple_of(2 * parts) {
        return Err(Error::InvalidParameters(format!("2(r − 1) = {} does not divide n = {n}", 2 * parts)));
    }
    let t = n / parts;
    let num = n as i64 - (parts * parts) as i64;
    if num < 0 {
        return Err(Error::InvalidParameters(format!("n = {n} too small for r = {r}")));
    }
    let d = num as usize / (r as usize * parts);
    let inner = circulant_edges(t, d)?;
    let mut h = HostColouredGraph::complete_with(n, r, |_, _| 1);
    for a in 0..parts {
        for b in a + 1..parts {
            for s in 0..t {
                let c = if s < t / 2 { a + 2 } else { b + 2 };
                for u in 0..t {
                    h.set(a * t + u, b * t + (u + s) % t, c as u8);
                }
            }
        }
        for &(u, v) in &inner {
            h.set(a * t + u, a * t + v, (a + 2) as u8);
        }
    }
    Ok(h)
}

pub fn gen_prop14_colouring(n: usize, r: u8) -> Result<HostColouredGraph> {
    let mut h = gen_prop14_colouring_unbalanced(n, r)?;
    rebalance(&mut h);
    Ok(h)
}

/// `d = ⌊(n − (r−1)²) / r(r−1)⌋` used by the construction above.
pub fn prop14_inner_degree(n: usize, r: u8) -> usize {
    let parts = r as usize - 1;
    (n.saturating_sub(parts * parts)) / (r as usize * parts)
}

/// `K_{2N}`, 4 colours: colour 1 inside `0..N`, colour 2 inside `N..2N`,
/// crossing pairs in lexicographic order get colour 3 for the first
/// `⌊N²/2⌋` and colour 4 for the rest.
pub fn gen_example_15(big_n: usize) -> Result<HostColouredGraph> {
    if big_n == 0 {
        return Err(Error::InvalidParameters("N must be positive".into()));
    }
    let n = 2 * big_n;
    let mut h = HostColouredGraph::empty(n, 4);
    let threes = big_n * big_n / 2;
    let mut cross = 0;
    for u in 0..n {
        for v in u + 1..n {
            let c = match (u < big_n, v < big_n) {
                (true, true) => 1,
                (false, false) => 2,
                _ => {
                    cross += 1;
                    if cross <= threes { 3 } else { 4 }
                }
            };
            h.set(u, v, c);
        }
    }
    Ok(h)
}

/// `n = 4N`, `V1 = 0..N`, `V2 = N..4N`. The host misses every pair inside
/// `V1` and a circulant `(N−1)`-regular graph inside `V2`; edges touching
/// `V1` are blue, the rest red.
pub fn gen_example_17(big_n: usize) -> Result<HostColouredGraph> {
    if big_n == 0 {
        return Err(Error::InvalidParameters("N must be positive".into()));
    }
    if !(3 * big_n * (big_n - 1)).is_multiple_of(2) {
        return Err(Error::InvalidParameters("3N(N−1) must be even".into()));
    }
    let n = 4 * big_n;
    let deleted = circulant_edges(3 * big_n, big_n - 1)?;
    let mut h = HostColouredGraph::complete_with(n, 2, |u, v| if u < big_n || v < big_n { BLUE } else { RED });
    for u in 0..big_n {
        for v in u + 1..big_n {
            h.remove(u, v);
        }
    }
    for (u, v) in deleted {
        h.remove(big_n + u, big_n + v);
    }
    Ok(h)
}

/// Complete 2-colouring with parts `0..a` and `a..n`, red across.
pub fn gen_split_colouring(n: usize, a: usize) -> HostColouredGraph {
    HostColouredGraph::complete_with(n, 2, |u, v| if (u < a) == (v < a) { BLUE } else { RED })
}

/// `n = 4m + 6`, `|V1| = 2m + 1`, red across the parts.
pub fn gen_example_19(m: usize) -> Result<HostColouredGraph> {
    Ok(gen_split_colouring(4 * m + 6, 2 * m + 1))
}

/// `n = 16k²`, `|V1| = 8k² − 2k` for odd `k`, red across the parts.
pub fn gen_example_110(k: usize) -> Result<HostColouredGraph> {
    if k.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("k must be odd, got {k}")));
    }
    Ok(gen_split_colouring(16 * k * k, 8 * k * k - 2 * k))
}

/// Caterpillar with spine `0..=ℓ` and `n − ℓ − 1` leaves. Leaf counts per
/// spine vertex differ by at most one; surplus leaves go to the two spine
/// ends first so spine degrees also differ by at most one.
pub fn gen_caterpillar(ell: usize, n: usize) -> Result<TreeGraph> {
    if n < ell + 1 {
        return Err(Error::InvalidParameters(format!("n = {n} < ℓ + 1 = {}", ell + 1)));
    }
    let spine = ell + 1;
    let leaves = n - spine;
    let (q, extra) = (leaves / spine, leaves % spine);
    let mut order: Vec<usize> = vec![0];
    if ell > 0 {
        order.push(ell);
    }
    order.extend(1..ell);
    let mut count = vec![q; spine];
    for &s in order.iter().take(extra) {
        count[s] += 1;
    }
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for (s, &c) in count.iter().enumerate() {
        for _ in 0..c {
            edges.push((s, next));
            next += 1;
        }
    }
    TreeGraph::from_edges(n, &edges)
}
