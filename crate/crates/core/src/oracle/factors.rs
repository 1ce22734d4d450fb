use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Embedding, HostColouredGraph, PatternGraph};

/// Largest number of factors [`enumerate_sfactors`] agrees to walk.
pub const SFACTOR_LIMIT: u128 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub centre: usize,
    pub leaves: Vec<usize>,
}

/// A spanning forest of `K_n` whose components are stars of one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarFactor {
    pub stars: Vec<Star>,
}

impl StarFactor {
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.stars.iter().flat_map(|s| s.leaves.iter().map(move |&l| (s.centre, l)))
    }

    /// Signed sum read straight off the host.
    pub fn signed_sum(&self, host: &HostColouredGraph) -> i64 {
        self.edges().map(|(a, b)| host.sign(a, b)).sum()
    }

    /// The factor as an embedding of [`PatternGraph::star_factor`].
    pub fn embedding(&self) -> Embedding {
        Embedding::new(self.stars.iter().flat_map(|s| std::iter::once(s.centre).chain(s.leaves.iter().copied())).collect())
    }
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of star factors of `K_n` with stars on `s` vertices.
pub fn sfactor_count(n: usize, s: usize) -> u128 {
    if s == 0 || !n.is_multiple_of(s) {
        return 0;
    }
    let centres = if s <= 2 { 1 } else { s as u128 };
    let mut left = n as u128;
    let mut total = 1u128;
    // the block holding the smallest free vertex picks its s−1 companions
    while left > 0 {
        total = total.saturating_mul(binom(left - 1, s as u128 - 1)).saturating_mul(centres);
        left -= s as u128;
    }
    total
}

struct Level {
    rest: Vec<usize>,
    comb: Vec<usize>,
    centre: usize,
}

/// Every star factor of `K_n` with stars on `star_size` vertices, each
/// once. Blocks are listed by smallest vertex; a two-vertex star takes its
/// smaller vertex as centre.
pub fn enumerate_sfactors(n: usize, star_size: usize) -> Result<SFactors> {
    if star_size == 0 || !n.is_multiple_of(star_size) {
        return Err(Error::InvalidParameters(format!("n = {n} is not a multiple of the star size {star_size}")));
    }
    let count = sfactor_count(n, star_size);
    if count > SFACTOR_LIMIT {
        return Err(Error::CostGuard(format!("{count} star factors exceed the limit {SFACTOR_LIMIT}")));
    }
    let mut it = SFactors { s: star_size, blocks: n / star_size, levels: Vec::new(), fresh: true, done: n == 0 };
    if !it.done {
        it.descend((0..n).collect());
    }
    Ok(it)
}

pub struct SFactors {
    s: usize,
    blocks: usize,
    levels: Vec<Level>,
    fresh: bool,
    done: bool,
}

impl SFactors {
    fn centres(&self) -> usize {
        if self.s <= 2 {
            1
        } else {
            self.s
        }
    }

    /// Pushes first-choice levels until every block is chosen.
    fn descend(&mut self, mut rest: Vec<usize>) {
        while self.levels.len() < self.blocks {
            let comb: Vec<usize> = (0..self.s - 1).collect();
            let lvl = Level { rest, comb, centre: 0 };
            rest = Self::remaining(&lvl);
            self.levels.push(lvl);
        }
    }

    fn remaining(l: &Level) -> Vec<usize> {
        let mut taken = vec![false; l.rest.len()];
        taken[0] = true;
        for &c in &l.comb {
            taken[c + 1] = true;
        }
        l.rest.iter().zip(taken).filter(|&(_, t)| !t).map(|(&v, _)| v).collect()
    }

    fn advance(l: &mut Level, centres: usize) -> bool {
        if l.centre + 1 < centres {
            l.centre += 1;
            return true;
        }
        l.centre = 0;
        // next combination of comb over 0..rest.len()−1
        let m = l.rest.len() - 1;
        let k = l.comb.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if l.comb[i] < m - k + i {
                l.comb[i] += 1;
                for j in i + 1..k {
                    l.comb[j] = l.comb[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> StarFactor {
        let stars = self
            .levels
            .iter()
            .map(|l| {
                let mut block = vec![l.rest[0]];
                block.extend(l.comb.iter().map(|&c| l.rest[c + 1]));
                let centre = block.remove(l.centre);
                Star { centre, leaves: block }
            })
            .collect();
        StarFactor { stars }
    }
}

impl Iterator for SFactors {
    type Item = StarFactor;

    fn next(&mut self) -> Option<StarFactor> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current());
        }
        let centres = self.centres();
        loop {
            let Some(mut l) = self.levels.pop() else {
                self.done = true;
                return None;
            };
            if Self::advance(&mut l, centres) {
                let rest = Self::remaining(&l);
                self.levels.push(l);
                self.descend(rest);
                return Some(self.current());
            }
        }
    }
}

/// The pattern matching [`StarFactor::embedding`].
pub fn sfactor_pattern(n: usize, star_size: usize) -> Result<PatternGraph> {
    PatternGraph::star_factor(n, star_size)
}
