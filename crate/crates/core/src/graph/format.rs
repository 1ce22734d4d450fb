//! Line-oriented text format.
//!
//! Graphs: a header `n r`, then one `u v colour` line per edge with `u < v`,
//! sorted. Absent pairs are not listed; colour 0 is rejected. Pattern graphs
//! are written with `r = 1` and every edge coloured 1.
//!
//! Embeddings: one `patternVertex hostVertex` line per pattern vertex, in
//! pattern order.
//!
//! Blank lines and lines starting with `#` are ignored on input.

use std::fmt::Write as _;

use super::embedding::Embedding;
use super::host::HostColouredGraph;
use super::pattern::{PatternGraph, TreeGraph};
use crate::error::{Error, Result};

fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_nums<const K: usize>(line: usize, s: &str) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut it = s.split_whitespace();
    for slot in out.iter_mut() {
        let tok = it.next().ok_or_else(|| Error::parse(line, format!("expected {K} fields")))?;
        *slot = tok.parse().map_err(|_| Error::parse(line, format!("bad integer {tok:?}")))?;
    }
    if it.next().is_some() {
        return Err(Error::parse(line, format!("expected {K} fields")));
    }
    Ok(out)
}

pub fn write_host(h: &HostColouredGraph) -> String {
    let mut s = format!("{} {}\n", h.n(), h.r());
    for (u, v, c) in h.edges() {
        let _ = writeln!(s, "{u} {v} {c}");
    }
    s
}

pub fn read_host(s: &str) -> Result<HostColouredGraph> {
    let mut lines = content_lines(s);
    let (ln, head) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let [n, r] = parse_nums::<2>(ln, head)?;
    if r == 0 || r > u8::MAX as usize {
        return Err(Error::parse(ln, format!("colour count {r} out of range")));
    }
    let mut h = HostColouredGraph::empty(n, r as u8);
    for (ln, l) in lines {
        let [u, v, c] = parse_nums::<3>(ln, l)?;
        if u >= n || v >= n || u == v {
            return Err(Error::parse(ln, format!("bad pair ({u}, {v})")));
        }
        if c == 0 || c > r {
            return Err(Error::parse(ln, format!("colour {c} outside 1..={r}")));
        }
        if h.has_edge(u, v) {
            return Err(Error::parse(ln, format!("pair ({u}, {v}) listed twice")));
        }
        h.set(u, v, c as u8);
    }
    Ok(h)
}

pub fn write_pattern(p: &PatternGraph) -> String {
    let mut e = p.edges().to_vec();
    e.sort_unstable();
    let mut s = format!("{} 1\n", p.n());
    for (u, v) in e {
        let _ = writeln!(s, "{u} {v} 1");
    }
    s
}

pub fn read_pattern(s: &str) -> Result<PatternGraph> {
    let mut lines = content_lines(s);
    let (ln, head) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let [n, _r] = parse_nums::<2>(ln, head)?;
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let [u, v, c] = parse_nums::<3>(ln, l)?;
        if c == 0 {
            return Err(Error::parse(ln, "colour 0 is not allowed"));
        }
        edges.push((u, v));
    }
    PatternGraph::from_edges(n, &edges)
}

pub fn read_tree(s: &str) -> Result<TreeGraph> {
    TreeGraph::try_from_pattern(read_pattern(s)?)
}

pub fn write_embedding(e: &Embedding) -> String {
    let mut s = String::new();
    for (p, h) in e.map.iter().enumerate() {
        let _ = writeln!(s, "{p} {h}");
    }
    s
}

pub fn read_embedding(s: &str) -> Result<Embedding> {
    let mut pairs = Vec::new();
    for (ln, l) in content_lines(s) {
        let [p, h] = parse_nums::<2>(ln, l)?;
        pairs.push((ln, p, h));
    }
    let mut map = vec![usize::MAX; pairs.len()];
    for (ln, p, h) in pairs {
        if p >= map.len() || map[p] != usize::MAX {
            return Err(Error::parse(ln, format!("pattern vertex {p} out of range or repeated")));
        }
        map[p] = h;
    }
    Ok(Embedding::new(map))
}
