use serde::Serialize;

use super::pattern::TreeGraph;

/// Maximal bare paths of a tree together with the counts `ℓ_i`.
#[derive(Clone, Debug, Serialize)]
pub struct BarePaths {
    /// Vertex sequences; endpoints have degree ≠ 2, internals degree 2.
    pub paths: Vec<Vec<usize>>,
    /// `ell[i]` = number of paths with exactly `i` internal vertices.
    pub ell: Vec<usize>,
}

impl BarePaths {
    pub fn ell(&self, i: usize) -> usize {
        self.ell.get(i).copied().unwrap_or(0)
    }
}

pub fn bare_path_decomposition(t: &TreeGraph) -> BarePaths {
    let n = t.n();
    let mut paths = Vec::new();
    let mut used = vec![false; n]; // internal vertices already walked
    for s in 0..n {
        if t.degree(s) == 2 {
            continue;
        }
        for &first in t.neighbours(s) {
            if t.degree(first) == 2 && used[first] {
                continue;
            }
            let mut path = vec![s];
            let (mut prev, mut cur) = (s, first);
            while t.degree(cur) == 2 {
                used[cur] = true;
                path.push(cur);
                let nb = t.neighbours(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            path.push(cur);
            // each path is met from both ends; keep the one starting lower
            if path.len() == 2 && s > cur {
                continue;
            }
            paths.push(path);
        }
    }
    let mut ell = vec![0usize; n.max(1)];
    for p in &paths {
        ell[p.len() - 2] += 1;
    }
    while ell.len() > 1 && *ell.last().unwrap() == 0 {
        ell.pop();
    }
    BarePaths { paths, ell }
}

/// `d[i]` = number of vertices of degree `i`, for `i in 0..=Δ`.
pub fn degree_histogram(t: &TreeGraph) -> Vec<usize> {
    let mut d = vec![0usize; t.max_degree() + 1];
    for v in 0..t.n() {
        d[t.degree(v)] += 1;
    }
    d
}
