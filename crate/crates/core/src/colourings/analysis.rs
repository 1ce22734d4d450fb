use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{HostColouredGraph, PatternGraph};
use crate::seed;

/// Largest `n` accepted by the exact η-standard decision.
pub const ETA_EXACT_MAX_N: usize = 24;

/// True iff every colour holds a `[1/r − ε, 1/r + ε]` share of the host edges.
pub fn is_eps_balanced(host: &HostColouredGraph, eps: f64) -> bool {
    let sizes = host.class_sizes();
    let total: usize = sizes.iter().sum();
    if total == 0 {
        return true;
    }
    let target = 1.0 / host.r() as f64;
    sizes[1..].iter().all(|&s| {
        let share = s as f64 / total as f64;
        share >= target - eps - 1e-12 && share <= target + eps + 1e-12
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionWitness {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub colour: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaMode {
    Exact,
    Search { seed: u64, restarts: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EtaStandard {
    /// Decided exactly: no violating partition exists.
    Standard,
    /// Search mode found nothing; this is not a proof.
    NoWitnessFound,
    Violated(PartitionWitness),
}

impl EtaStandard {
    pub fn is_violated(&self) -> bool {
        matches!(self, EtaStandard::Violated(_))
    }
}

/// Edges inside `set` with colour ≠ `keep`.
fn off_colour_inside(host: &HostColouredGraph, set: &[usize], keep: u8) -> usize {
    let mut k = 0;
    for (a, &u) in set.iter().enumerate() {
        for &v in &set[a + 1..] {
            let c = host.colour(u, v);
            if c != 0 && c != keep {
                k += 1;
            }
        }
    }
    k
}

/// Direct recount: does `w` violate η-standardness?
pub fn witness_violates(host: &HostColouredGraph, eta: f64, w: &PartitionWitness) -> bool {
    let n = host.n();
    let thr = eta * (n * n) as f64;
    let (a, b) = (w.v1.len(), w.v2.len());
    let sizes_ok = a + b == n && (a == b || a == b + 1);
    sizes_ok && (off_colour_inside(host, &w.v1, 1) as f64) < thr && (off_colour_inside(host, &w.v2, w.colour) as f64) < thr
}

/// Decides (exact) or searches for (search) a partition `V1, V2` with
/// `|V1| − |V2| ∈ {0, 1}` and a colour `i ≥ 2` such that `G[V1]` has fewer
/// than `ηn²` non-1 edges and `G[V2]` fewer than `ηn²` non-`i` edges.
pub fn is_eta_standard(host: &HostColouredGraph, eta: f64, mode: EtaMode) -> Result<EtaStandard> {
    if host.r() < 2 {
        return Err(Error::InvalidParameters("η-standard needs r >= 2".into()));
    }
    let res = match mode {
        EtaMode::Exact => eta_exact(host, eta)?,
        EtaMode::Search { seed, restarts } => eta_search(host, eta, seed, restarts),
    };
    if let EtaStandard::Violated(w) = &res {
        assert!(witness_violates(host, eta, w), "witness failed recount");
    }
    Ok(res)
}

fn eta_exact(host: &HostColouredGraph, eta: f64) -> Result<EtaStandard> {
    let n = host.n();
    if n > ETA_EXACT_MAX_N {
        return Err(Error::CostGuard(format!("exact η-standard check limited to n <= {ETA_EXACT_MAX_N}, got {n}")));
    }
    if n == 0 {
        return Ok(EtaStandard::Standard);
    }
    let r = host.r() as usize;
    let thr = eta * (n * n) as f64;
    // rows[c][u] = bitmask of colour-c neighbours (c = 0 collects all present edges)
    let mut rows = vec![vec![0u32; n]; r + 1];
    for (u, v, c) in host.edges() {
        rows[c as usize][u] |= 1 << v;
        rows[c as usize][v] |= 1 << u;
        rows[0][u] |= 1 << v;
        rows[0][v] |= 1 << u;
    }
    let k = n.div_ceil(2);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let count = |mask: u32, c: usize| -> usize {
        let mut s = 0;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            s += (rows[c][u] & mask).count_ones() as usize;
        }
        s / 2
    };
    let mut mask: u32 = (1u32 << k) - 1;
    loop {
        let comp = full & !mask;
        let v1_non1 = count(mask, 0) - count(mask, 1);
        if (v1_non1 as f64) < thr {
            let tot2 = count(comp, 0);
            for i in 2..=r {
                if ((tot2 - count(comp, i)) as f64) < thr {
                    let v1 = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
                    let v2 = (0..n).filter(|&u| comp >> u & 1 == 1).collect();
                    return Ok(EtaStandard::Violated(PartitionWitness { v1, v2, colour: i as u8 }));
                }
            }
        }
        // Gosper's hack: next mask with the same popcount
        let c = mask & mask.wrapping_neg();
        let rr = mask.wrapping_add(c);
        if rr == 0 || rr > full {
            break;
        }
        mask = (((rr ^ mask) >> 2) / c) | rr;
        if mask > full {
            break;
        }
    }
    Ok(EtaStandard::Standard)
}

fn eta_search(host: &HostColouredGraph, eta: f64, seed_v: u64, restarts: usize) -> EtaStandard {
    let n = host.n();
    let r = host.r();
    let thr = eta * (n * n) as f64;
    let k = n.div_ceil(2);
    for attempt in 0..restarts.max(1) {
        let mut rng = seed::derived_rng(seed_v, seed::STREAM_VERIFY, attempt as u64);
        for i in 2..=r {
            let mut side: Vec<bool> = vec![false; n];
            let mut perm: Vec<usize> = (0..n).collect();
            for a in 0..n {
                let b = rng.gen_range(a..n);
                perm.swap(a, b);
            }
            for &u in &perm[..k] {
                side[u] = true;
            }
            let bad1 = |u: usize, v: usize| -> i64 { i64::from(!matches!(host.colour(u, v), 0 | 1)) };
            let bad2 = |u: usize, v: usize| -> i64 {
                let c = host.colour(u, v);
                i64::from(c != 0 && c != i)
            };
            // c1[u]: bad edges from u into V1; c2[u]: bad edges from u into V2
            let mut c1 = vec![0i64; n];
            let mut c2 = vec![0i64; n];
            for u in 0..n {
                for v in 0..n {
                    if v != u {
                        if side[v] {
                            c1[u] += bad1(u, v);
                        } else {
                            c2[u] += bad2(u, v);
                        }
                    }
                }
            }
            loop {
                let mut best: Option<(i64, usize, usize)> = None;
                for a in (0..n).filter(|&a| side[a]) {
                    for b in (0..n).filter(|&b| !side[b]) {
                        let d = -c1[a] + (c1[b] - bad1(a, b)) - c2[b] + (c2[a] - bad2(a, b));
                        if d < 0 && best.is_none_or(|(bd, _, _)| d < bd) {
                            best = Some((d, a, b));
                        }
                    }
                }
                let Some((_, a, b)) = best else { break };
                side[a] = false;
                side[b] = true;
                for u in 0..n {
                    if u != a {
                        c1[u] -= bad1(u, a);
                        c2[u] += bad2(u, a);
                    }
                    if u != b {
                        c1[u] += bad1(u, b);
                        c2[u] -= bad2(u, b);
                    }
                }
            }
            let v1: Vec<usize> = (0..n).filter(|&u| side[u]).collect();
            let v2: Vec<usize> = (0..n).filter(|&u| !side[u]).collect();
            if (off_colour_inside(host, &v1, 1) as f64) < thr && (off_colour_inside(host, &v2, i) as f64) < thr {
                return EtaStandard::Violated(PartitionWitness { v1, v2, colour: i });
            }
        }
    }
    EtaStandard::NoWitnessFound
}

/// A bipartite 2-colouring: `inner` colours exactly the host edges inside
/// `v1` and inside `v2`; the other colour is exactly the crossing edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteColouring {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub inner: u8,
}

impl BipartiteColouring {
    pub fn side(&self, n: usize) -> Vec<bool> {
        let mut s = vec![false; n];
        for &u in &self.v1 {
            s[u] = true;
        }
        s
    }
}

struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu { parent: (0..n).collect(), parity: vec![0; n] }
    }

    fn find(&mut self, u: usize) -> (usize, u8) {
        if self.parent[u] == u {
            return (u, 0);
        }
        let (root, p) = self.find(self.parent[u]);
        self.parent[u] = root;
        self.parity[u] ^= p;
        (root, self.parity[u])
    }

    /// Requires `side(u) xor side(v) == d`; false on contradiction.
    fn unite(&mut self, u: usize, v: usize, d: u8) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return pu ^ pv == d;
        }
        let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
        self.parent[hi] = lo;
        self.parity[hi] = pu ^ pv ^ d;
        true
    }
}

/// Finds a partition witnessing a bipartite colouring, trying blue as the
/// inner colour first. The lowest vertex of each constraint component goes
/// to `v1`, so a colouring with no crossing edges returns `v2 = ∅`.
pub fn detect_bipartite_colouring(host: &HostColouredGraph) -> Option<BipartiteColouring> {
    if host.r() != 2 {
        return None;
    }
    let n = host.n();
    'inner: for inner in [1u8, 2] {
        let mut dsu = ParityDsu::new(n);
        for (u, v, c) in host.edges() {
            if !dsu.unite(u, v, u8::from(c != inner)) {
                continue 'inner;
            }
        }
        let mut v1 = Vec::new();
        let mut v2 = Vec::new();
        for u in 0..n {
            if dsu.find(u).1 == 0 {
                v1.push(u);
            } else {
                v2.push(u);
            }
        }
        return Some(BipartiteColouring { v1, v2, inner });
    }
    None
}

/// Every vertex of `h` (padded with isolated vertices up to the host size)
/// has the same degree parity, and the host colouring is bipartite.
pub fn is_inert(h: &PatternGraph, host: &HostColouredGraph) -> bool {
    if host.r() != 2 {
        return false;
    }
    let first = if h.n() < host.n() || h.n() == 0 { 0 } else { h.degree(0) % 2 };
    if (0..h.n()).any(|v| h.degree(v) % 2 != first) {
        return false;
    }
    detect_bipartite_colouring(host).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::{gen_balanced_random, gen_example_15, gen_example_19};
    use crate::graph::{BLUE, RED};

    fn exhaustive_bipartite(h: &HostColouredGraph) -> bool {
        let n = h.n();
        (0u32..1 << n).any(|mask| {
            [1u8, 2].iter().any(|&inner| {
                h.edges().all(|(u, v, c)| {
                    let same = (mask >> u & 1) == (mask >> v & 1);
                    same == (c == inner)
                })
            })
        })
    }

    #[test]
    fn bipartite_detector_agrees_with_scan() {
        for n in 2..=8usize {
            for s in 0..40u64 {
                let mut h = gen_balanced_random(n, 2, s);
                if s % 3 == 0 {
                    // plant a bipartite colouring on a random split
                    let mask = seed::mix(s) as u32;
                    h = HostColouredGraph::complete_with(n, 2, |u, v| {
                        if (mask >> u & 1) == (mask >> v & 1) { BLUE } else { RED }
                    });
                }
                let d = detect_bipartite_colouring(&h);
                assert_eq!(d.is_some(), exhaustive_bipartite(&h), "n={n} s={s}");
                if let Some(b) = d {
                    let side = b.side(n);
                    for (u, v, c) in h.edges() {
                        assert_eq!(side[u] == side[v], c == b.inner);
                    }
                }
            }
        }
    }

    #[test]
    fn all_blue_is_trivially_bipartite() {
        let h = HostColouredGraph::monochromatic(6, 2, BLUE);
        let b = detect_bipartite_colouring(&h).unwrap();
        assert_eq!(b.v1.len(), 6);
        assert!(b.v2.is_empty());
        assert_eq!(b.inner, BLUE);
    }

    #[test]
    fn example19_parts_recovered() {
        let h = gen_example_19(1).unwrap();
        let b = detect_bipartite_colouring(&h).unwrap();
        assert_eq!(b.v1, vec![0, 1, 2]);
        assert_eq!(b.v2.len(), 7);
        assert_eq!(b.inner, BLUE);
    }

    #[test]
    fn eta_exact_example15_and_monochromatic() {
        let h = gen_example_15(4).unwrap();
        match is_eta_standard(&h, 0.01, EtaMode::Exact).unwrap() {
            EtaStandard::Violated(w) => {
                assert_eq!(w.v1, vec![0, 1, 2, 3]);
                assert_eq!(w.v2, vec![4, 5, 6, 7]);
                assert_eq!(w.colour, 2);
            }
            other => panic!("{other:?}"),
        }
        let mono = HostColouredGraph::monochromatic(8, 2, BLUE);
        // colour 1 everywhere leaves no near-monochromatic side in colour i ≥ 2
        assert_eq!(is_eta_standard(&mono, 0.01, EtaMode::Exact).unwrap(), EtaStandard::Standard);
        let big = gen_balanced_random(25, 3, 1);
        assert!(matches!(is_eta_standard(&big, 0.01, EtaMode::Exact), Err(Error::CostGuard(_))));
    }

    #[test]
    fn eta_exact_balanced_is_standard() {
        let h = gen_balanced_random(12, 3, 4);
        assert_eq!(is_eta_standard(&h, 0.002, EtaMode::Exact).unwrap(), EtaStandard::Standard);
    }

    #[test]
    fn eta_search_finds_example15_violation() {
        let h = gen_example_15(6).unwrap();
        let r = is_eta_standard(&h, 0.01, EtaMode::Search { seed: 1, restarts: 20 }).unwrap();
        assert!(r.is_violated());
    }

    #[test]
    fn eps_balanced_checks() {
        assert!(is_eps_balanced(&gen_balanced_random(30, 3, 1), 0.01));
        assert!(!is_eps_balanced(&HostColouredGraph::monochromatic(10, 2, BLUE), 0.1));
        assert!(is_eps_balanced(&gen_example_15(100).unwrap(), 0.01));
    }

    #[test]
    fn inert_requires_parity_and_bipartite() {
        let h = gen_example_19(1).unwrap();
        assert!(is_inert(&PatternGraph::cycle(10).unwrap(), &h));
        assert!(!is_inert(&PatternGraph::path(4), &h));
        assert!(!is_inert(&PatternGraph::path(4), &gen_balanced_random(4, 2, 0)));
    }
}
