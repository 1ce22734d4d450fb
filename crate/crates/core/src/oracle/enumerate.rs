use crate::error::{Error, Result};
use crate::graph::{Embedding, HostColouredGraph, PatternGraph};

/// Default node cap for [`enumerate_embeddings`].
pub const DEFAULT_CAP: u128 = 1_000_000_000;

/// Pattern vertex order where each vertex after the first of its component
/// has a placed neighbour, preferring the vertex with the most placed
/// neighbours, then the one closing the most frontier entries.
pub fn search_order(p: &PatternGraph) -> Vec<usize> {
    let n = p.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut placed_nb = vec![0usize; n];
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (placed_nb[v], std::cmp::Reverse(p.degree(v) - placed_nb[v]), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &y in p.neighbours(v) {
            placed_nb[y] += 1;
        }
    }
    order
}

/// Upper bound on backtracking nodes for `order`: a vertex with an earlier
/// neighbour has at most `Δ(G)` candidates.
pub fn estimate_nodes(p: &PatternGraph, host: &HostColouredGraph, order: &[usize]) -> u128 {
    let n = host.n();
    let dmax = (0..n).map(|u| host.degree(u)).max().unwrap_or(0);
    let mut pos = vec![usize::MAX; p.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut level: u128 = 1;
    let mut total: u128 = 1;
    for (i, &v) in order.iter().enumerate() {
        let free = n.saturating_sub(i);
        let anchored = p.neighbours(v).iter().any(|&y| pos[y] < i);
        let c = if anchored { free.min(dmax) } else { free };
        level = level.saturating_mul(c as u128);
        total = total.saturating_add(level);
    }
    total
}

/// Every ghost-free embedding of `pattern` into `host`, by backtracking in
/// [`search_order`] with host candidates ascending.
///
/// Fails up front when the node estimate exceeds `cap`; never truncates.
pub fn enumerate_embeddings<'a>(pattern: &'a PatternGraph, host: &'a HostColouredGraph, cap: u128) -> Result<Embeddings<'a>> {
    if pattern.n() > host.n() {
        return Ok(Embeddings::exhausted(pattern, host));
    }
    let order = search_order(pattern);
    let estimate = estimate_nodes(pattern, host, &order);
    if estimate > cap {
        return Err(Error::CapExceeded { estimate, cap });
    }
    let mut pos = vec![0; pattern.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back: Vec<Vec<usize>> =
        order.iter().enumerate().map(|(i, &v)| pattern.neighbours(v).iter().copied().filter(|&y| pos[y] < i).collect()).collect();
    Ok(Embeddings {
        pattern,
        host,
        order,
        back,
        map: vec![usize::MAX; pattern.n()],
        used: vec![false; host.n()],
        next: vec![0],
        done: false,
    })
}

/// Iterator returned by [`enumerate_embeddings`].
pub struct Embeddings<'a> {
    pattern: &'a PatternGraph,
    host: &'a HostColouredGraph,
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    // next[d] = next host candidate to try at depth d
    next: Vec<usize>,
    done: bool,
}

impl<'a> Embeddings<'a> {
    fn exhausted(pattern: &'a PatternGraph, host: &'a HostColouredGraph) -> Self {
        Embeddings { pattern, host, order: vec![], back: vec![], map: vec![], used: vec![], next: vec![], done: true }
    }
}

impl Iterator for Embeddings<'_> {
    type Item = Embedding;

    fn next(&mut self) -> Option<Embedding> {
        if self.done {
            return None;
        }
        let k = self.pattern.n();
        if k == 0 {
            self.done = true;
            return Some(Embedding::new(vec![]));
        }
        let n = self.host.n();
        loop {
            let d = self.next.len() - 1;
            let v = self.order[d];
            let start = self.next[d];
            let found = (start..n).find(|&h| {
                !self.used[h] && self.back[d].iter().all(|&y| self.host.has_edge(h, self.map[y]))
            });
            match found {
                Some(h) => {
                    self.next[d] = h + 1;
                    self.map[v] = h;
                    self.used[h] = true;
                    if d + 1 == k {
                        let e = Embedding::new(self.map.clone());
                        self.used[h] = false;
                        return Some(e);
                    }
                    self.next.push(0);
                }
                None => {
                    self.next.pop();
                    if self.next.is_empty() {
                        self.done = true;
                        return None;
                    }
                    let pd = self.next.len() - 1;
                    let pv = self.order[pd];
                    self.used[self.map[pv]] = false;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_embedding, BLUE};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn closed_form_counts() {
        let k3 = HostColouredGraph::monochromatic(3, 2, BLUE);
        assert_eq!(enumerate_embeddings(&PatternGraph::path(3), &k3, DEFAULT_CAP).unwrap().count(), 6);
        let k4 = HostColouredGraph::monochromatic(4, 2, BLUE);
        let star = crate::graph::TreeGraph::star(4);
        assert_eq!(enumerate_embeddings(&star, &k4, DEFAULT_CAP).unwrap().count(), 24);
        let k7 = HostColouredGraph::monochromatic(7, 2, BLUE);
        assert_eq!(enumerate_embeddings(&PatternGraph::path(7), &k7, DEFAULT_CAP).unwrap().count(), 5040);
    }

    #[test]
    fn p4_in_k4_minus_edge_matches_permutation_filter() {
        let mut h = HostColouredGraph::monochromatic(4, 2, BLUE);
        h.remove(1, 3);
        let p = PatternGraph::path(4);
        let mut got: Vec<Vec<usize>> = enumerate_embeddings(&p, &h, DEFAULT_CAP).unwrap().map(|e| e.map).collect();
        let mut want: Vec<Vec<usize>> = permutations(4)
            .into_iter()
            .filter(|m| validate_embedding(&p, &h, &Embedding::new(m.clone())).unwrap().is_empty())
            .collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(got.len(), 12);
    }

    #[test]
    fn partial_image_and_cap() {
        let k6 = HostColouredGraph::monochromatic(6, 2, BLUE);
        // 6·5·4 embeddings of P3 into K6
        assert_eq!(enumerate_embeddings(&PatternGraph::path(3), &k6, DEFAULT_CAP).unwrap().count(), 120);
        assert!(matches!(
            enumerate_embeddings(&PatternGraph::path(6), &k6, 100),
            Err(Error::CapExceeded { .. })
        ));
    }
}
