use crate::error::{Error, Result};
use crate::graph::HostColouredGraph;

pub const HAMILTON_CYCLE_MAX_N: usize = 12;
pub const HAMILTON_PATH_MAX_N: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Cycle,
    Path,
}

/// Depth-first walk over Hamilton cycles or paths, yielding vertex
/// sequences. Cycles start at 0 with `seq[1] < seq[n−1]`; paths have
/// `seq[0] < seq[n−1]`.
pub struct Hamilton<'a> {
    host: &'a HostColouredGraph,
    kind: Kind,
    seq: Vec<usize>,
    used: u64,
    next: Vec<usize>,
    done: bool,
}

fn start(host: &HostColouredGraph, kind: Kind, limit: usize) -> Result<Hamilton<'_>> {
    let n = host.n();
    if n > limit {
        return Err(Error::CostGuard(format!("Hamilton enumeration limited to n <= {limit}, got {n}")));
    }
    let min = if kind == Kind::Cycle { 3 } else { 1 };
    Ok(Hamilton { host, kind, seq: Vec::with_capacity(n), used: 0, next: vec![0], done: n < min })
}

/// Every Hamilton cycle of `host` once up to rotation and reflection.
pub fn hamilton_cycles(host: &HostColouredGraph) -> Result<Hamilton<'_>> {
    start(host, Kind::Cycle, HAMILTON_CYCLE_MAX_N)
}

/// Every Hamilton path of `host` once up to reversal.
pub fn hamilton_paths(host: &HostColouredGraph) -> Result<Hamilton<'_>> {
    start(host, Kind::Path, HAMILTON_PATH_MAX_N)
}

impl Iterator for Hamilton<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.host.n();
        while !self.done {
            let d = self.next.len() - 1;
            let from = self.next[d];
            let cand = (from..n).find(|&h| {
                if self.used >> h & 1 == 1 {
                    return false;
                }
                if d == 0 {
                    // cycles are rooted at 0
                    return self.kind == Kind::Path || h == 0;
                }
                let prev = self.seq[d - 1];
                if !self.host.has_edge(prev, h) {
                    return false;
                }
                if d == n - 1 {
                    return match self.kind {
                        Kind::Cycle => self.host.has_edge(h, 0) && self.seq[1] < h,
                        Kind::Path => self.seq[0] < h,
                    };
                }
                true
            });
            match cand {
                Some(h) => {
                    self.next[d] = h + 1;
                    if d == n - 1 {
                        let mut out = self.seq.clone();
                        out.push(h);
                        if n == 1 {
                            self.done = true;
                        }
                        return Some(out);
                    }
                    self.seq.push(h);
                    self.used |= 1 << h;
                    self.next.push(0);
                }
                None => {
                    self.next.pop();
                    match self.seq.pop() {
                        Some(h) => self.used &= !(1 << h),
                        None => self.done = true,
                    }
                }
            }
        }
        None
    }
}

/// Edges of a vertex sequence, closing it up when `closed`.
pub fn sequence_edges(seq: &[usize], closed: bool) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
    if closed && seq.len() >= 3 {
        e.push((seq[seq.len() - 1], seq[0]));
    }
    e
}
