use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Host graph `G ⊆ K_n` with an `r`-colouring of its edges.
///
/// Stored as a dense symmetric `n × n` byte matrix; entry 0 marks an absent
/// pair, entries `1..=r` are colours. In the two-colour view colour 1 is blue
/// (`+1`) and colour 2 is red (`-1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HostColouredGraph {
    n: usize,
    r: u8,
    colour: Vec<u8>,
}

pub const BLUE: u8 = 1;
pub const RED: u8 = 2;

impl HostColouredGraph {
    /// Edgeless host on `n` vertices.
    pub fn empty(n: usize, r: u8) -> Self {
        HostColouredGraph { n, r, colour: vec![0; n * n] }
    }

    /// `K_n` with every edge coloured by `f(u, v)` (called with `u < v`).
    pub fn complete_with(n: usize, r: u8, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut h = Self::empty(n, r);
        for u in 0..n {
            for v in u + 1..n {
                let c = f(u, v);
                h.set(u, v, c);
            }
        }
        h
    }

    pub fn monochromatic(n: usize, r: u8, c: u8) -> Self {
        Self::complete_with(n, r, |_, _| c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> u8 {
        self.colour[u * self.n + v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.colour[u * self.n + v] != 0
    }

    /// `+1` for blue, `-1` for red. Only meaningful when `r == 2`.
    #[inline]
    pub fn sign(&self, u: usize, v: usize) -> i64 {
        match self.colour(u, v) {
            BLUE => 1,
            RED => -1,
            _ => 0,
        }
    }

    /// Sets the colour of `uv` (0 removes the edge).
    pub fn set(&mut self, u: usize, v: usize, c: u8) {
        assert!(u != v, "loop at {u}");
        assert!(c <= self.r, "colour {c} exceeds r={}", self.r);
        self.colour[u * self.n + v] = c;
        self.colour[v * self.n + u] = c;
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        self.set(u, v, 0);
    }

    pub fn require_two_colours(&self) -> Result<()> {
        if self.r != 2 {
            return Err(Error::UnsupportedColouring(format!("needs r = 2, got r = {}", self.r)));
        }
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_edge(u, v)))
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn colour_degree(&self, u: usize, c: u8) -> usize {
        (0..self.n).filter(|&v| v != u && self.colour(u, v) == c).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Present edges `(u, v, colour)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                let c = self.colour(u, v);
                (c != 0).then_some((u, v, c))
            })
        })
    }

    /// Number of edges of each colour; index 0 is unused.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.r as usize + 1];
        for (_, _, c) in self.edges() {
            s[c as usize] += 1;
        }
        s
    }

    /// Adjacency rows as bitsets.
    pub fn adjacency_rows(&self) -> Vec<FixedBitSet> {
        (0..self.n)
            .map(|u| {
                let mut b = FixedBitSet::with_capacity(self.n);
                for v in 0..self.n {
                    if self.has_edge(u, v) {
                        b.insert(v);
                    }
                }
                b
            })
            .collect()
    }

    /// Rows of the colour-`c` subgraph as bitsets.
    pub fn colour_rows(&self, c: u8) -> Vec<FixedBitSet> {
        (0..self.n)
            .map(|u| {
                let mut b = FixedBitSet::with_capacity(self.n);
                for v in 0..self.n {
                    if v != u && self.colour(u, v) == c {
                        b.insert(v);
                    }
                }
                b
            })
            .collect()
    }

    /// Copy with every edge colour passed through `f`; `r` becomes `new_r`.
    pub fn recoloured(&self, new_r: u8, f: impl Fn(u8) -> u8) -> Self {
        let mut h = Self::empty(self.n, new_r);
        for (u, v, c) in self.edges() {
            h.set(u, v, f(c));
        }
        h
    }

    /// Raw matrix bytes, row-major.
    pub fn raw(&self) -> &[u8] {
        &self.colour
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_storage() {
        let mut h = HostColouredGraph::empty(4, 3);
        h.set(2, 1, 3);
        assert_eq!(h.colour(1, 2), 3);
        assert!(h.has_edge(1, 2));
        assert!(!h.has_edge(0, 1));
        assert_eq!(h.class_sizes(), vec![0, 0, 0, 1]);
        h.remove(1, 2);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn complete_host_degrees() {
        let h = HostColouredGraph::monochromatic(6, 2, BLUE);
        assert!(h.is_complete());
        assert_eq!(h.min_degree(), 5);
        assert_eq!(h.colour_degree(0, BLUE), 5);
        assert_eq!(h.sign(0, 1), 1);
        let rows = h.colour_rows(BLUE);
        assert_eq!(rows[3].count_ones(..), 5);
    }
}
