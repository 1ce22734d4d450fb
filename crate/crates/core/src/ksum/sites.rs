use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::HostColouredGraph;
use crate::seed;

/// A 4-cycle with three edges in one colour and one in the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneThreeCycle {
    /// Cycle order; the minority edge is `cycle[0] cycle[1]`.
    pub cycle: [usize; 4],
    pub minority: (usize, usize),
}

impl OneThreeCycle {
    pub fn verify(&self, host: &HostColouredGraph) -> bool {
        let c = self.cycle;
        let cols: Vec<u8> = (0..4).map(|i| host.colour(c[i], c[(i + 1) % 4])).collect();
        if cols.contains(&0) {
            return false;
        }
        let odd = cols[0];
        cols[1..].iter().all(|&x| x != odd && x == cols[1]) && self.minority == (c[0], c[1])
    }
}

/// First (1,3)-cycle in lexicographic scan order: minority edge `xy`, then
/// `z` adjacent to `y`, then `w` closing the cycle.
pub fn find_13_cycle(host: &HostColouredGraph) -> Result<Option<OneThreeCycle>> {
    host.require_two_colours()?;
    let rows = [host.colour_rows(1), host.colour_rows(2)];
    let n = host.n();
    for x in 0..n {
        for y in 0..n {
            let c = host.colour(x, y);
            if c == 0 || x == y {
                continue;
            }
            let other = &rows[if c == 1 { 1 } else { 0 }];
            for z in other[y].ones() {
                if z == x {
                    continue;
                }
                let w = other[x].ones().find(|&w| w != y && w != z && other[z].contains(w));
                if let Some(w) = w {
                    let cyc = OneThreeCycle { cycle: [x, y, z, w], minority: (x, y) };
                    debug_assert!(cyc.verify(host));
                    return Ok(Some(cyc));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SiteKind {
    Type1,
    Type2,
}

/// A copy of `K_{2,2Δ}` with small part `{x, z}`, distinguished `y` and
/// `2Δ − 1` further vertices `b_prime`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteK22D {
    pub kind: SiteKind,
    pub x: usize,
    pub z: usize,
    pub y: usize,
    pub b_prime: Vec<usize>,
    pub delta: usize,
}

/// Colours `(c(xw), c(wz))` as signs.
pub fn path_pattern(host: &HostColouredGraph, x: usize, w: usize, z: usize) -> Option<(i64, i64)> {
    if !host.has_edge(x, w) || !host.has_edge(w, z) {
        return None;
    }
    Some((host.sign(x, w), host.sign(w, z)))
}

impl BipartiteK22D {
    /// Re-checks every defining condition by direct recount.
    pub fn verify(&self, host: &HostColouredGraph) -> bool {
        let mut all = vec![self.x, self.z, self.y];
        all.extend(&self.b_prime);
        let mut s = all.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != all.len() || self.b_prime.len() + 1 != 2 * self.delta {
            return false;
        }
        let Some(py) = path_pattern(host, self.x, self.y, self.z) else {
            return false;
        };
        let mut common = None;
        for &w in &self.b_prime {
            match (path_pattern(host, self.x, w, self.z), common) {
                (None, _) => return false,
                (Some(p), None) => common = Some(p),
                (Some(p), Some(q)) if p != q => return false,
                _ => {}
            }
        }
        let Some(pb) = common else {
            return false;
        };
        match self.kind {
            SiteKind::Type1 => py.0 != py.1 && py != pb,
            SiteKind::Type2 => (py.0 + py.1).abs() != (pb.0 + pb.1).abs(),
        }
    }

    /// Signed-sum change when the images of `x` and `z` are exchanged in a
    /// copy where `x` sees `y` plus `k` of `B′` and `z` sees `k + 1` of `B′`.
    pub fn swap_delta(&self, host: &HostColouredGraph) -> i64 {
        let pb = path_pattern(host, self.x, self.b_prime[0], self.z).expect("site edges");
        (host.sign(self.z, self.y) - host.sign(self.x, self.y)) + (pb.0 - pb.1)
    }
}

fn classes(host: &HostColouredGraph, x: usize, z: usize) -> [Vec<usize>; 4] {
    let mut out: [Vec<usize>; 4] = Default::default();
    for w in 0..host.n() {
        if w == x || w == z {
            continue;
        }
        if let Some((a, b)) = path_pattern(host, x, w, z) {
            let idx = usize::from(a < 0) * 2 + usize::from(b < 0);
            out[idx].push(w);
        }
    }
    out
}

// class index: 0 = (+,+), 1 = (+,−), 2 = (−,+), 3 = (−,−)
fn is_mono(idx: usize) -> bool {
    idx == 0 || idx == 3
}

fn type2_at(host: &HostColouredGraph, x: usize, z: usize, delta: usize) -> Option<BipartiteK22D> {
    let cls = classes(host, x, z);
    let need = 2 * delta - 1;
    // case 1: y on a mixed path, B′ on a monochromatic class; case 2 the reverse
    for want_mono_big in [true, false] {
        let big = (0..4).filter(|&i| is_mono(i) == want_mono_big).find(|&i| cls[i].len() >= need);
        let y = (0..4).filter(|&i| is_mono(i) != want_mono_big).filter_map(|i| cls[i].first().copied()).min();
        if let (Some(b), Some(y)) = (big, y) {
            let site = BipartiteK22D { kind: SiteKind::Type2, x, z, y, b_prime: cls[b][..need].to_vec(), delta };
            debug_assert!(site.verify(host));
            return Some(site);
        }
    }
    None
}

/// A type-2 copy of `K_{2,2Δ}`. The pair `{x, z}` is first taken opposite in
/// a (1,3)-cycle, where one `xz`-path is monochromatic and the other mixed;
/// if the pigeonhole fails there, every pair is scanned.
pub fn find_type2_k22d(host: &HostColouredGraph, delta: usize) -> Result<Option<BipartiteK22D>> {
    host.require_two_colours()?;
    if delta == 0 {
        return Err(Error::InvalidParameters("Δ must be positive".into()));
    }
    if let Some(c) = find_13_cycle(host)? {
        for (x, z) in [(c.cycle[0], c.cycle[2]), (c.cycle[1], c.cycle[3])] {
            if let Some(s) = type2_at(host, x.min(z), x.max(z), delta) {
                return Ok(Some(s));
            }
        }
    }
    for x in 0..host.n() {
        for z in x + 1..host.n() {
            if let Some(s) = type2_at(host, x, z, delta) {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Vertices with at least `⌈ξn⌉` neighbours in each colour.
pub fn balanced_vertices(host: &HostColouredGraph, xi: f64) -> Result<Vec<usize>> {
    host.require_two_colours()?;
    let t = (xi * host.n() as f64).ceil() as usize;
    Ok((0..host.n()).filter(|&v| host.colour_degree(v, 1) >= t && host.colour_degree(v, 2) >= t).collect())
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Labelled type-1 copies with small part `(x, z)` in this order.
fn type1_at(host: &HostColouredGraph, x: usize, z: usize, need: usize) -> u128 {
    let cls = classes(host, x, z);
    let mut total = 0u128;
    for q in [1, 2] {
        let ys = cls[q].len() as u128;
        if ys == 0 {
            continue;
        }
        let rest: u128 = (0..4).filter(|&p| p != q).map(|p| binom(cls[p].len(), need)).sum();
        total += ys * rest;
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Type1Mode {
    Exact,
    Sample { seed: u64, trials: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Type1Count {
    pub estimate: f64,
    pub std_error: f64,
    pub exact: Option<u128>,
}

/// Largest `n` for exact type-1 counting (`O(n³)` per call).
pub const EXACT_TYPE1_LIMIT: usize = 300;

/// Number of labelled type-1 copies of `K_{2,2Δ}`: ordered `(x, z)`, the
/// distinguished `y` and the set `B′`. Exact mode sums a closed form per
/// ordered pair; sample mode averages it over random pairs.
pub fn count_type1_k22d(host: &HostColouredGraph, delta: usize, mode: Type1Mode) -> Result<Type1Count> {
    host.require_two_colours()?;
    let n = host.n();
    let need = (2 * delta).saturating_sub(1);
    match mode {
        Type1Mode::Exact => {
            if n > EXACT_TYPE1_LIMIT {
                return Err(Error::CostGuard(format!("exact type-1 count needs n <= {EXACT_TYPE1_LIMIT}, got {n}")));
            }
            let mut total = 0u128;
            for x in 0..n {
                for z in 0..n {
                    if x != z {
                        total += type1_at(host, x, z, need);
                    }
                }
            }
            Ok(Type1Count { estimate: total as f64, std_error: 0.0, exact: Some(total) })
        }
        Type1Mode::Sample { seed, trials } => {
            if n < 2 || trials == 0 {
                return Ok(Type1Count { estimate: 0.0, std_error: 0.0, exact: None });
            }
            let mut rng = seed::rng(seed);
            let (mut s1, mut s2) = (0f64, 0f64);
            for _ in 0..trials {
                let x = rng.gen_range(0..n);
                let mut z = rng.gen_range(0..n - 1);
                if z >= x {
                    z += 1;
                }
                let v = type1_at(host, x, z, need) as f64;
                s1 += v;
                s2 += v * v;
            }
            let k = trials as f64;
            let mean = s1 / k;
            let var = (s2 / k - mean * mean).max(0.0);
            let pairs = (n * (n - 1)) as f64;
            Ok(Type1Count { estimate: mean * pairs, std_error: pairs * (var / k).sqrt(), exact: None })
        }
    }
}
