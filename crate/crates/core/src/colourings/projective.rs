use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::HostColouredGraph;

/// `PG(2, p)` for a prime `p`, built from homogeneous coordinates over `F_p`.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectivePlane {
    pub p: u64,
    /// Normalised coordinate triples (first non-zero entry is 1).
    pub points: Vec<[u64; 3]>,
    /// Each line as the sorted indices of its points.
    pub lines: Vec<Vec<usize>>,
}

fn normalised_triples(p: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let t = [a, b, c];
                if let Some(&f) = t.iter().find(|&&x| x != 0) {
                    if f == 1 {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

pub fn gen_pg(p: u64) -> Result<ProjectivePlane> {
    if !is_prime(p) {
        return Err(Error::InvalidParameters(format!("{p} is not prime")));
    }
    let points = normalised_triples(p);
    let lines = points
        .iter()
        .map(|l| {
            (0..points.len())
                .filter(|&j| {
                    let q = points[j];
                    (l[0] * q[0] + l[1] * q[1] + l[2] * q[2]).is_multiple_of(p)
                })
                .collect()
        })
        .collect();
    Ok(ProjectivePlane { p, points, lines })
}

impl ProjectivePlane {
    pub fn order(&self) -> usize {
        (self.p * self.p + self.p + 1) as usize
    }

    /// Index of the unique common point of two distinct lines.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let (la, lb) = (&self.lines[a], &self.lines[b]);
        *la.iter().find(|x| lb.binary_search(x).is_ok()).expect("lines meet")
    }

    /// Checks all plane axioms exhaustively; returns the first failure.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let q = self.order();
        let k = self.p as usize + 1;
        if self.points.len() != q || self.lines.len() != q {
            return Err(format!("expected {q} points and lines"));
        }
        if let Some(i) = self.lines.iter().position(|l| l.len() != k) {
            return Err(format!("line {i} has wrong size"));
        }
        let mut on = vec![0usize; q];
        for l in &self.lines {
            for &x in l {
                on[x] += 1;
            }
        }
        if let Some(x) = on.iter().position(|&c| c != k) {
            return Err(format!("point {x} lies on {} lines", on[x]));
        }
        for a in 0..q {
            for b in a + 1..q {
                let common = self.lines[a].iter().filter(|x| self.lines[b].binary_search(x).is_ok()).count();
                if common != 1 {
                    return Err(format!("lines {a},{b} share {common} points"));
                }
            }
        }
        for x in 0..q {
            for y in x + 1..q {
                let joins = self.lines.iter().filter(|l| l.binary_search(&x).is_ok() && l.binary_search(&y).is_ok()).count();
                if joins != 1 {
                    return Err(format!("points {x},{y} lie on {joins} common lines"));
                }
            }
        }
        Ok(())
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'base: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= x`.
pub fn next_prime(x: u64) -> u64 {
    let mut c = x.max(2);
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Moves edges until colour class sizes differ by at most one. Each move
/// takes the lexicographically first edge of the largest class (ties prefer
/// colour 1, then the lowest id) and gives it to the smallest class (ties
/// prefer the lowest id).
pub fn rebalance(host: &mut HostColouredGraph) -> usize {
    let r = host.r() as usize;
    let mut classes: Vec<BTreeSet<(usize, usize)>> = vec![BTreeSet::new(); r + 1];
    for (u, v, c) in host.edges() {
        classes[c as usize].insert((u, v));
    }
    let mut moves = 0;
    loop {
        let big = (1..=r).max_by_key(|&c| (classes[c].len(), usize::from(c == 1), std::cmp::Reverse(c))).unwrap();
        let small = (1..=r).min_by_key(|&c| (classes[c].len(), c)).unwrap();
        if classes[big].len() <= classes[small].len() + 1 {
            break;
        }
        let e = classes[big].pop_first().unwrap();
        classes[small].insert(e);
        host.set(e.0, e.1, small as u8);
        moves += 1;
    }
    moves
}

/// The blow-up colouring before rebalancing: `k − 1` parts (one per line of
/// `PG(2,p)`, `k = p² + p + 2`), colour 1 inside parts, the colour of the
/// meeting point between parts, and matching groups recoloured `k+1..=r`.
pub fn gen_projective_colouring_unbalanced(p: u64, r: u8, n: usize) -> Result<HostColouredGraph> {
    let pg = gen_pg(p)?;
    let lines = pg.order();
    let k = lines + 1;
    let mut failed = Vec::new();
    if (r as usize) < k {
        failed.push(format!("r = {r} < k = p²+p+2 = {k}"));
    }
    if n == 0 || !n.is_multiple_of(lines) {
        failed.push(format!("k − 1 = {lines} does not divide n = {n}"));
    }
    if !failed.is_empty() {
        return Err(Error::InvalidParameters(failed.join("; ")));
    }
    let s = n / lines;
    let groups = r as usize - 1;
    let mut h = HostColouredGraph::empty(n, r);
    for a in 0..lines {
        for u in 0..s {
            for v in u + 1..s {
                h.set(a * s + u, a * s + v, 1);
            }
        }
        for b in a + 1..lines {
            let point_colour = (pg.meet(a, b) + 2) as u8;
            for t in 0..s {
                // matching t joins u in part a with u + t (mod s) in part b
                let g = 2 + t * groups / s;
                let c = if g > k { g as u8 } else { point_colour };
                for u in 0..s {
                    h.set(a * s + u, b * s + (u + t) % s, c);
                }
            }
        }
    }
    Ok(h)
}

pub fn gen_projective_colouring(p: u64, r: u8, n: usize) -> Result<HostColouredGraph> {
    let mut h = gen_projective_colouring_unbalanced(p, r, n)?;
    rebalance(&mut h);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planes_satisfy_axioms() {
        for p in [2, 3, 5, 7] {
            let pg = gen_pg(p).unwrap();
            assert_eq!(pg.points.len() as u64, p * p + p + 1);
            pg.check_axioms().unwrap();
        }
        assert!(gen_pg(4).is_err());
    }

    #[test]
    fn next_prime_matches_sieve() {
        assert_eq!(next_prime(8), 11);
        assert_eq!(next_prime(2), 2);
        assert_eq!(next_prime(1_000_000), 1_000_003);
        let limit = 5000;
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..=limit {
            if sieve[i] {
                let mut j = i * i;
                while j <= limit {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        for (i, &pr) in sieve.iter().enumerate() {
            assert_eq!(is_prime(i as u64), pr, "{i}");
        }
    }

    #[test]
    fn fano_colouring_structure() {
        let h = gen_projective_colouring_unbalanced(2, 8, 14).unwrap();
        assert_eq!(h.class_sizes()[1], 7);
        for u in 0..14 {
            let mut cs: Vec<u8> = (0..14).filter(|&v| v != u).map(|v| h.colour(u, v)).collect();
            cs.sort();
            cs.dedup();
            assert_eq!(cs.len(), 4);
        }
        let b = gen_projective_colouring(2, 8, 14).unwrap();
        let s = &b.class_sizes()[1..];
        assert!(s.iter().max().unwrap() - s.iter().min().unwrap() <= 1);
    }

    #[test]
    fn extra_colours_share_equally() {
        // s = 9 matchings per part pair, r − 1 = 9 groups
        let h = gen_projective_colouring_unbalanced(2, 10, 63).unwrap();
        let s = h.class_sizes();
        assert!(s[2..].iter().all(|&x| x == s[2]), "{s:?}");
        assert!(s[1] > s[2]);
    }

    #[test]
    fn parameter_errors_listed() {
        let e = gen_projective_colouring(2, 7, 15).unwrap_err().to_string();
        assert!(e.contains("r = 7") && e.contains("does not divide"));
    }
}
