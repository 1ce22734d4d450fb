use std::collections::VecDeque;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Used for the pattern side (the graph `H`, or a tree `T`) of every embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    max_degree: usize,
}

impl PatternGraph {
    /// Builds a graph from an edge list. Duplicates and loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!("edge ({u}, {v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Malformed(format!("loop at {u}")));
            }
            norm.push((u.min(v), u.max(v)));
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut sorted = norm.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed("repeated edge".into()));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(PatternGraph { n, adj, edges: norm, max_degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs(0).iter().all(|d| d.is_some())
    }

    /// BFS distances from `s` (`None` when unreachable).
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices within distance `r` of `s`, `s` included.
    pub fn ball(&self, s: usize, r: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut out = vec![s];
        let mut frontier = vec![s];
        for _ in 0..r {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        out.push(w);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Self::from_edges(n, &edges)
    }

    /// Perfect matching `{2i, 2i+1}`.
    pub fn matching(n: usize) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidParameters(format!("matching needs even n, got {n}")));
        }
        let edges: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        Self::from_edges(n, &edges)
    }

    /// Disjoint copies of `K_{1,s-1}`; centres are `0, s, 2s, ...`.
    pub fn star_factor(n: usize, s: usize) -> Result<Self> {
        if s < 2 || !n.is_multiple_of(s) {
            return Err(Error::InvalidParameters(format!("star factor needs s >= 2 dividing n (n={n}, s={s})")));
        }
        let mut edges = Vec::new();
        for b in (0..n).step_by(s) {
            for leaf in b + 1..b + s {
                edges.push((b, leaf));
            }
        }
        Self::from_edges(n, &edges)
    }

    /// Disjoint triangles `{3i, 3i+1, 3i+2}`.
    pub fn triangle_factor(n: usize) -> Result<Self> {
        if !n.is_multiple_of(3) {
            return Err(Error::InvalidParameters(format!("triangle factor needs 3 | n, got {n}")));
        }
        let mut edges = Vec::new();
        for b in (0..n).step_by(3) {
            edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
        Self::from_edges(n, &edges)
    }
}

/// A tree: connected, acyclic, `n - 1` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeGraph(PatternGraph);

impl TreeGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let g = PatternGraph::from_edges(n, edges)?;
        Self::try_from_pattern(g)
    }

    pub fn try_from_pattern(g: PatternGraph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::Malformed("empty tree".into()));
        }
        if g.m() + 1 != g.n() || !g.is_connected() {
            return Err(Error::Malformed("not a tree".into()));
        }
        Ok(TreeGraph(g))
    }

    pub fn path(n: usize) -> Self {
        TreeGraph(PatternGraph::path(n))
    }

    /// `K_{1,n-1}` with centre 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        TreeGraph(PatternGraph::from_edges(n, &edges).expect("star"))
    }

    /// Decodes a Prüfer sequence over `0..seq.len()+2`.
    pub fn from_prufer(seq: &[usize]) -> Result<Self> {
        let n = seq.len() + 2;
        if seq.iter().any(|&x| x >= n) {
            return Err(Error::Malformed("Prüfer entry out of range".into()));
        }
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
            (0..n).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let std::cmp::Reverse(leaf) = heap.pop().expect("leaf");
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                heap.push(std::cmp::Reverse(x));
            }
        }
        let std::cmp::Reverse(a) = heap.pop().expect("leaf");
        let std::cmp::Reverse(b) = heap.pop().expect("leaf");
        edges.push((a, b));
        Self::from_edges(n, &edges)
    }

    /// A spider: centre 0 with `legs` paths of `len` edges each.
    pub fn spider(legs: usize, len: usize) -> Self {
        let n = 1 + legs * len;
        let mut edges = Vec::new();
        for l in 0..legs {
            let mut prev = 0;
            for j in 0..len {
                let v = 1 + l * len + j;
                edges.push((prev, v));
                prev = v;
            }
        }
        Self::from_edges(n, &edges).expect("spider")
    }

    pub fn single_vertex() -> Self {
        TreeGraph(PatternGraph::from_edges(1, &[]).expect("K1"))
    }

    pub fn as_pattern(&self) -> &PatternGraph {
        &self.0
    }

    pub fn into_pattern(self) -> PatternGraph {
        self.0
    }

    pub fn is_star(&self) -> bool {
        self.n() <= 2 || self.max_degree() == self.n() - 1
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }
}

impl Deref for TreeGraph {
    type Target = PatternGraph;
    fn deref(&self) -> &PatternGraph {
        &self.0
    }
}

impl AsRef<PatternGraph> for TreeGraph {
    fn as_ref(&self) -> &PatternGraph {
        &self.0
    }
}

impl AsRef<PatternGraph> for PatternGraph {
    fn as_ref(&self) -> &PatternGraph {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_round_trip_small() {
        let t = TreeGraph::from_prufer(&[3, 3, 3, 4]).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(t.degree(3), 4);
        assert_eq!(t.degree(4), 2);
    }

    #[test]
    fn rejects_cycles_and_forests() {
        assert!(TreeGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(TreeGraph::from_edges(4, &[(0, 1), (2, 3)]).is_err());
        assert!(PatternGraph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(PatternGraph::from_edges(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn constructors_have_expected_shape() {
        assert_eq!(PatternGraph::cycle(7).unwrap().m(), 7);
        assert_eq!(PatternGraph::matching(8).unwrap().max_degree(), 1);
        assert_eq!(TreeGraph::star(6).max_degree(), 5);
        assert_eq!(TreeGraph::spider(3, 3).n(), 10);
        assert_eq!(PatternGraph::star_factor(16, 8).unwrap().m(), 14);
        assert_eq!(TreeGraph::single_vertex().m(), 0);
    }

    #[test]
    fn ball_radius_two_on_path() {
        let p = PatternGraph::path(7);
        let mut b = p.ball(3, 2);
        b.sort();
        assert_eq!(b, vec![1, 2, 3, 4, 5]);
    }
}
