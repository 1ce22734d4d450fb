use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::factors::enumerate_sfactors;
use super::hamilton::{hamilton_cycles, hamilton_paths, sequence_edges};
use crate::colourings::{gen_example_110, gen_example_15, gen_example_17, gen_example_19};
use crate::error::Result;
use crate::graph::BLUE;

/// Outcome of an exhaustive check: how many objects were inspected, how
/// many satisfied the claim, and the distribution of the measured value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleReport {
    pub name: String,
    pub cases: u64,
    pub passing: u64,
    pub histogram: BTreeMap<i64, u64>,
    pub pass: bool,
}

impl ExampleReport {
    fn new(name: impl Into<String>) -> Self {
        ExampleReport { name: name.into(), cases: 0, passing: 0, histogram: BTreeMap::new(), pass: false }
    }

    fn record(&mut self, value: i64, ok: bool) {
        self.cases += 1;
        self.passing += ok as u64;
        *self.histogram.entry(value).or_default() += 1;
    }

    fn close(mut self) -> Self {
        self.pass = self.cases > 0 && self.cases == self.passing;
        self
    }
}

/// Four-colour `K_{2N}`: every Hamilton cycle has as many colour-1 as
/// colour-2 edges. The histogram is over `count(1) − count(2)`.
pub fn verify_example_15(big_n: usize) -> Result<ExampleReport> {
    let h = gen_example_15(big_n)?;
    let mut rep = ExampleReport::new(format!("ex15 N={big_n}"));
    for c in hamilton_cycles(&h)? {
        let mut counts = [0i64; 5];
        for (a, b) in sequence_edges(&c, true) {
            counts[h.colour(a, b) as usize] += 1;
        }
        rep.record(counts[1] - counts[2], counts[1] == counts[2]);
    }
    Ok(rep.close())
}

/// Every Hamilton path of the `4N`-vertex host has `2N − e` blue edges,
/// where `e` is the number of its ends in `V1 = 0..N`.
pub fn verify_example_17(big_n: usize) -> Result<ExampleReport> {
    let h = gen_example_17(big_n)?;
    let mut rep = ExampleReport::new(format!("ex17 N={big_n}"));
    let n2 = 2 * big_n as i64;
    for p in hamilton_paths(&h)? {
        let blue = sequence_edges(&p, false).iter().filter(|&&(a, b)| h.colour(a, b) == BLUE).count() as i64;
        let ends_in_v1 = [p[0], p[p.len() - 1]].iter().filter(|&&v| v < big_n).count() as i64;
        let ok = (n2 - 2..=n2).contains(&blue) && blue == n2 - ends_in_v1;
        rep.record(blue, ok);
    }
    Ok(rep.close())
}

/// Bipartite colouring of `K_{4m+6}`: every Hamilton cycle has signed sum
/// `≡ 2 (mod 4)`.
pub fn verify_example_19(m: usize) -> Result<ExampleReport> {
    let h = gen_example_19(m)?;
    let mut rep = ExampleReport::new(format!("ex19 m={m}"));
    for c in hamilton_cycles(&h)? {
        let s: i64 = sequence_edges(&c, true).iter().map(|&(a, b)| h.sign(a, b)).sum();
        rep.record(s, s.rem_euclid(4) == 2);
    }
    Ok(rep.close())
}

/// Bipartite colouring of `K_{16k²}`: every factor into 8-vertex stars has
/// signed sum `≡ 2 (mod 4)`, so none is 0-sum.
pub fn verify_example_110(k: usize) -> Result<ExampleReport> {
    let h = gen_example_110(k)?;
    let mut rep = ExampleReport::new(format!("ex110 k={k}"));
    for f in enumerate_sfactors(h.n(), 8)? {
        let s = f.signed_sum(&h);
        rep.record(s, s.rem_euclid(4) == 2);
    }
    Ok(rep.close())
}
