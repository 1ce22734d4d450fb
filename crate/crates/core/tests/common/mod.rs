#![allow(dead_code)]

use rand::Rng;
use treedisc::graph::{PatternGraph, TreeGraph};

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// `n − 1` edges, no loops or repeats, connected.
pub fn is_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() + 1 != n {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in edges {
        if a == b || a >= n || b >= n || !seen.insert((a.min(b), a.max(b))) {
            return false;
        }
    }
    let adj = adjacency(n, edges);
    let mut vis = vec![false; n];
    let mut stack = vec![0];
    vis[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !vis[y] {
                vis[y] = true;
                stack.push(y);
            }
        }
    }
    vis.into_iter().all(|v| v)
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&c| c != parent).map(|&c| rooted_code(adj, c, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &y in &adj[leaf] {
                deg[y] -= 1;
                if deg[y] == 1 {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    layer
}

/// AHU canonical string; equal strings iff isomorphic trees.
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    centres(&adj).into_iter().map(|c| rooted_code(&adj, c, usize::MAX)).min().unwrap_or_default()
}

/// Next lexicographic permutation in place.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Random recursive tree whose degrees stay at most `max_deg`.
pub fn bounded_degree_tree<R: Rng>(n: usize, max_deg: usize, rng: &mut R) -> TreeGraph {
    let mut deg = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let p = loop {
            let p = rng.gen_range(0..v);
            if deg[p] < max_deg {
                break p;
            }
        };
        deg[p] += 1;
        deg[v] += 1;
        edges.push((p, v));
    }
    TreeGraph::from_edges(n, &edges).expect("tree")
}

/// Independent signed sums of every copy of `h` in `K_n`, by permutation.
pub fn brute_sums(h: &PatternGraph, host: &treedisc::graph::HostColouredGraph) -> std::collections::BTreeSet<i64> {
    let n = host.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = std::collections::BTreeSet::new();
    loop {
        if h.edges().iter().all(|&(a, b)| host.has_edge(perm[a], perm[b])) {
            out.insert(h.edges().iter().map(|&(a, b)| host.sign(perm[a], perm[b])).sum());
        }
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}
