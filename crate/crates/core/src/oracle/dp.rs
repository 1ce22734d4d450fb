use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use super::enumerate::search_order;
use crate::error::{Error, Result};
use crate::graph::{HostColouredGraph, PatternGraph};

/// Largest number of DP states held in one layer.
pub const DP_STATE_LIMIT: usize = 30_000_000;

const BITS: u32 = 7;

trait DpValue: Copy {
    fn shift(self, w: i64) -> Self;
    fn merge(&mut self, other: Self);
}

#[derive(Clone, Copy)]
struct Max(i64);

impl DpValue for Max {
    fn shift(self, w: i64) -> Self {
        Max(self.0 + w)
    }
    fn merge(&mut self, other: Self) {
        self.0 = self.0.max(other.0);
    }
}

/// Bit `j` marks sum `j − 64`.
#[derive(Clone, Copy)]
struct Sums(u128);

impl DpValue for Sums {
    fn shift(self, w: i64) -> Self {
        if w >= 0 {
            Sums(self.0 << w)
        } else {
            Sums(self.0 >> (-w))
        }
    }
    fn merge(&mut self, other: Self) {
        self.0 |= other.0;
    }
}

#[derive(Clone, Copy)]
struct Count(u64);

impl DpValue for Count {
    fn shift(self, _: i64) -> Self {
        self
    }
    fn merge(&mut self, other: Self) {
        self.0 += other.0;
    }
}

struct Step {
    v: usize,
    // frontier positions of v's placed neighbours
    back: Vec<usize>,
    // old frontier positions that survive, in order
    keep: Vec<usize>,
    enters: bool,
}

fn plan(p: &PatternGraph) -> (Vec<Step>, usize) {
    let order = search_order(p);
    let mut pos = vec![usize::MAX; p.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut frontier: Vec<usize> = Vec::new();
    let mut steps = Vec::new();
    let mut widest = 0;
    for (i, &v) in order.iter().enumerate() {
        let back: Vec<usize> = frontier.iter().enumerate().filter(|&(_, &f)| p.has_edge(f, v)).map(|(j, _)| j).collect();
        let open = |f: usize| p.neighbours(f).iter().any(|&y| pos[y] > i);
        let keep: Vec<usize> = (0..frontier.len()).filter(|&j| open(frontier[j])).collect();
        let enters = open(v);
        let mut next: Vec<usize> = keep.iter().map(|&j| frontier[j]).collect();
        if enters {
            next.push(v);
        }
        frontier = next;
        widest = widest.max(frontier.len());
        steps.push(Step { v, back, keep, enters });
    }
    (steps, widest)
}

#[inline]
fn slot(key: u128, j: usize) -> usize {
    ((key >> (BITS as usize * j)) & ((1 << BITS) - 1)) as usize
}

/// Dynamic programme over `(used host vertices, frontier images)`; each
/// transition adds `weight(colour)` for every edge it closes.
fn run<V: DpValue>(p: &PatternGraph, host: &HostColouredGraph, init: V, weight: impl Fn(u8) -> i64) -> Result<Option<V>> {
    let n = host.n();
    if n > 64 || p.n() > n {
        return Err(Error::CostGuard(format!("frontier oracle needs pattern order <= host order <= 64, got {} and {n}", p.n())));
    }
    let (steps, widest) = plan(p);
    if widest * BITS as usize > 128 {
        return Err(Error::CostGuard(format!("frontier width {widest} too large")));
    }
    let mut layer: FxHashMap<(u64, u128), V> = FxHashMap::default();
    layer.insert((0, 0), init);
    for st in &steps {
        let mut next: FxHashMap<(u64, u128), V> = FxHashMap::default();
        for (&(mask, key), &val) in &layer {
            for h in 0..n {
                if mask >> h & 1 == 1 {
                    continue;
                }
                let mut w = 0;
                let mut ok = true;
                for &j in &st.back {
                    let c = host.colour(h, slot(key, j));
                    if c == 0 {
                        ok = false;
                        break;
                    }
                    w += weight(c);
                }
                if !ok {
                    continue;
                }
                let mut nk: u128 = 0;
                for (t, &j) in st.keep.iter().enumerate() {
                    nk |= (slot(key, j) as u128) << (BITS as usize * t);
                }
                if st.enters {
                    nk |= (h as u128) << (BITS as usize * st.keep.len());
                }
                let nv = val.shift(w);
                next.entry((mask | 1 << h, nk)).and_modify(|e| e.merge(nv)).or_insert(nv);
            }
        }
        if next.len() > DP_STATE_LIMIT {
            return Err(Error::CostGuard(format!("frontier oracle exceeded {DP_STATE_LIMIT} states at vertex {}", st.v)));
        }
        layer = next;
    }
    let mut out: Option<V> = None;
    for (_, v) in layer {
        match &mut out {
            Some(o) => o.merge(v),
            None => out = Some(v),
        }
    }
    Ok(out)
}

/// Maximum number of colour-`i` edges over all ghost-free copies of
/// `pattern` in `host`, or `None` if there is no copy.
pub fn max_colour_oracle(pattern: &PatternGraph, host: &HostColouredGraph, i: u8) -> Result<Option<usize>> {
    if i == 0 || i > host.r() {
        return Err(Error::InvalidParameters(format!("colour {i} outside 1..={}", host.r())));
    }
    Ok(run(pattern, host, Max(0), |c| (c == i) as i64)?.map(|m| m.0 as usize))
}

/// Every signed sum attained by a ghost-free copy of `h` in a two-coloured
/// host.
pub fn reachable_sums(h: &PatternGraph, host: &HostColouredGraph) -> Result<BTreeSet<i64>> {
    host.require_two_colours()?;
    if h.m() > 63 {
        return Err(Error::CostGuard(format!("reachable sums supports m <= 63, got {}", h.m())));
    }
    let bits = run(h, host, Sums(1 << 64), |c| if c == 1 { 1 } else { -1 })?.map_or(0, |s| s.0);
    Ok((0..128).filter(|&j| bits >> j & 1 == 1).map(|j| j as i64 - 64).collect())
}

/// Number of ghost-free embeddings, for cross-checking the enumerator.
pub fn count_embeddings(pattern: &PatternGraph, host: &HostColouredGraph) -> Result<u64> {
    Ok(run(pattern, host, Count(1), |_| 0)?.map_or(0, |c| c.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::{gen_balanced_random, gen_example_19};
    use crate::graph::embedding::signed_sum_unchecked;
    use crate::graph::{colour_profile, TreeGraph, BLUE};
    use crate::oracle::enumerate::{enumerate_embeddings, DEFAULT_CAP};

    #[test]
    fn dp_matches_enumeration() {
        let trees = [TreeGraph::path(7), TreeGraph::star(7), TreeGraph::spider(3, 2)];
        for (s, t) in trees.iter().enumerate() {
            let mut host = gen_balanced_random(7, 3, s as u64);
            host.remove(0, 1);
            host.remove(2, 5);
            let embs: Vec<_> = enumerate_embeddings(t, &host, DEFAULT_CAP).unwrap().collect();
            assert_eq!(count_embeddings(t, &host).unwrap(), embs.len() as u64);
            for i in 1..=3 {
                let brute = embs.iter().map(|e| colour_profile(t, &host, e).unwrap().get(i)).max();
                assert_eq!(max_colour_oracle(t, &host, i).unwrap(), brute);
            }
        }
    }

    #[test]
    fn sums_match_enumeration() {
        let host = gen_balanced_random(8, 2, 9);
        for h in [PatternGraph::cycle(8).unwrap(), PatternGraph::matching(8).unwrap(), PatternGraph::path(6)] {
            let brute: BTreeSet<i64> =
                enumerate_embeddings(&h, &host, DEFAULT_CAP).unwrap().map(|e| signed_sum_unchecked(&h, &host, &e)).collect();
            assert_eq!(reachable_sums(&h, &host).unwrap(), brute);
        }
    }

    #[test]
    fn trivial_cases() {
        let host = gen_balanced_random(6, 2, 1);
        assert_eq!(reachable_sums(&PatternGraph::path(2), &host).unwrap(), BTreeSet::from([-1, 1]));
        let mono = HostColouredGraph::monochromatic(8, 2, BLUE);
        assert_eq!(max_colour_oracle(&TreeGraph::path(8), &mono, 1).unwrap(), Some(7));
        let h19 = gen_example_19(1).unwrap();
        let sums = reachable_sums(&PatternGraph::cycle(10).unwrap(), &h19).unwrap();
        assert!(sums.iter().all(|s| s.rem_euclid(4) == 2));
    }
}
