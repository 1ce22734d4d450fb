use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{PatternGraph, TreeGraph};
use crate::seed;

pub const LABELLED_TREE_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeMode {
    /// All `n^(n−2)` labelled trees in Prüfer odometer order.
    Labelled,
    /// `count` uniform labelled trees from random Prüfer sequences.
    Sample { seed: u64, count: usize },
}

pub struct Trees {
    n: usize,
    seq: Vec<usize>,
    rng: Option<ChaCha8Rng>,
    left: Option<usize>,
    done: bool,
}

pub fn enumerate_trees(n: usize, mode: TreeMode) -> Result<Trees> {
    if n == 0 {
        return Err(Error::InvalidParameters("trees need n >= 1".into()));
    }
    let seq = vec![0; n.saturating_sub(2)];
    match mode {
        TreeMode::Labelled => {
            if n > LABELLED_TREE_MAX_N {
                return Err(Error::CostGuard(format!("labelled enumeration limited to n <= {LABELLED_TREE_MAX_N}, got {n}")));
            }
            Ok(Trees { n, seq, rng: None, left: None, done: false })
        }
        TreeMode::Sample { seed: s, count } => Ok(Trees {
            n,
            seq,
            rng: Some(seed::derived_rng(s, seed::STREAM_GEN, n as u64)),
            left: Some(count),
            done: count == 0,
        }),
    }
}

fn decode(n: usize, seq: &[usize]) -> TreeGraph {
    match n {
        1 => TreeGraph::single_vertex(),
        2 => TreeGraph::try_from_pattern(PatternGraph::path(2)).expect("edge"),
        _ => TreeGraph::from_prufer(seq).expect("valid sequence"),
    }
}

impl Iterator for Trees {
    type Item = TreeGraph;

    fn next(&mut self) -> Option<TreeGraph> {
        if self.done {
            return None;
        }
        if let (Some(rng), Some(left)) = (self.rng.as_mut(), self.left.as_mut()) {
            for x in self.seq.iter_mut() {
                *x = rng.gen_range(0..self.n);
            }
            *left -= 1;
            self.done = *left == 0;
            return Some(decode(self.n, &self.seq));
        }
        let t = decode(self.n, &self.seq);
        // odometer, last digit fastest
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < self.n {
                break;
            }
            self.seq[i] = 0;
        }
        Some(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_histogram;

    #[test]
    fn cayley_counts() {
        assert_eq!(enumerate_trees(1, TreeMode::Labelled).unwrap().count(), 1);
        assert_eq!(enumerate_trees(2, TreeMode::Labelled).unwrap().count(), 1);
        assert_eq!(enumerate_trees(4, TreeMode::Labelled).unwrap().count(), 16);
        assert_eq!(enumerate_trees(5, TreeMode::Labelled).unwrap().count(), 125);
        let mut all: Vec<_> = enumerate_trees(5, TreeMode::Labelled).unwrap().map(|t| t.edges().to_vec()).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 125);
        assert!(enumerate_trees(11, TreeMode::Labelled).is_err());
    }

    #[test]
    fn sampled_degree_identities() {
        for t in enumerate_trees(50, TreeMode::Sample { seed: 4, count: 40 }).unwrap() {
            let h = degree_histogram(&t);
            let n: usize = h.iter().sum();
            let deg_sum: usize = h.iter().enumerate().map(|(d, &c)| d * c).sum();
            assert_eq!(n, 50);
            assert_eq!(deg_sum, 2 * 49);
            // leaves = 2 + Σ_{d≥3} (d − 2) n_d
            let extra: usize = h.iter().enumerate().skip(3).map(|(d, &c)| (d - 2) * c).sum();
            assert_eq!(h[1], 2 + extra);
        }
    }
}
