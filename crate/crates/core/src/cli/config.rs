use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::colourings::{
    gen_balanced_random, gen_bipartite_random, gen_caterpillar, gen_example_110, gen_example_15, gen_example_17,
    gen_example_19, gen_pg, gen_projective_colouring, gen_prop14_colouring, gen_split_colouring,
};
use crate::error::{Error, Result};
use crate::graph::{HostColouredGraph, PatternGraph, TreeGraph};
use crate::seed;

/// Instance description for `gen`.
///
/// ```toml
/// kind = "balanced"
/// n = 12
/// r = 3
/// seed = 7
/// pattern = "path"
/// out = "inst"
/// ```
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenConfig {
    pub kind: String,
    pub n: Option<usize>,
    pub r: Option<u8>,
    pub seed: Option<u64>,
    /// Prime order for `projective`.
    pub p: Option<u64>,
    /// Parameter of `example19`.
    pub m: Option<usize>,
    /// Parameter of `example110`.
    pub k: Option<usize>,
    /// Parameter `N` of `example15` and `example17`.
    pub big_n: Option<usize>,
    /// Part size for `split`.
    pub a: Option<usize>,
    /// Colour for `monochromatic`.
    pub colour: Option<u8>,
    pub pattern: Option<String>,
    pub pattern_n: Option<usize>,
    /// Spine length for `caterpillar`.
    pub ell: Option<usize>,
    pub star_size: Option<usize>,
    pub legs: Option<usize>,
    pub leg_len: Option<usize>,
    pub out: Option<String>,
}

fn need<T: Copy>(v: Option<T>, key: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameters(format!("kind {kind:?} needs `{key}`")))
}

/// Host construction by name.
pub fn build_host(c: &GenConfig) -> Result<HostColouredGraph> {
    let kind = c.kind.as_str();
    let seed = c.seed.unwrap_or(0);
    match kind {
        "balanced" => Ok(gen_balanced_random(need(c.n, "n", kind)?, c.r.unwrap_or(2), seed)),
        "bipartite" => Ok(gen_bipartite_random(need(c.n, "n", kind)?, seed)),
        "split" => {
            let n = need(c.n, "n", kind)?;
            let a = need(c.a, "a", kind)?;
            if a > n {
                return Err(Error::InvalidParameters(format!("part size {a} exceeds n = {n}")));
            }
            Ok(gen_split_colouring(n, a))
        }
        "monochromatic" => {
            let r = c.r.unwrap_or(2);
            let col = c.colour.unwrap_or(1);
            if col == 0 || col > r {
                return Err(Error::InvalidParameters(format!("colour {col} outside 1..={r}")));
            }
            Ok(HostColouredGraph::monochromatic(need(c.n, "n", kind)?, r, col))
        }
        "example15" => gen_example_15(need(c.big_n, "big_n", kind)?),
        "example17" => gen_example_17(need(c.big_n, "big_n", kind)?),
        "example19" => gen_example_19(need(c.m, "m", kind)?),
        "example110" => gen_example_110(need(c.k, "k", kind)?),
        "prop14" => gen_prop14_colouring(need(c.n, "n", kind)?, c.r.unwrap_or(3)),
        "projective" => {
            let p = need(c.p, "p", kind)?;
            let lines = (p * p + p + 1) as usize;
            let r = c.r.unwrap_or((lines + 1) as u8);
            gen_projective_colouring(p, r, c.n.unwrap_or(4 * lines))
        }
        other => Err(Error::InvalidParameters(format!("unknown host kind {other:?}"))),
    }
}

/// Uniform labelled tree on `n` vertices that is not a star (`n ≥ 4`).
pub fn random_non_star_tree(n: usize, seed: u64) -> Result<TreeGraph> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!("every tree on {n} vertices is a star")));
    }
    let mut rng = seed::derived_rng(seed, seed::STREAM_GEN, n as u64);
    loop {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let t = TreeGraph::from_prufer(&seq)?;
        if !t.is_star() {
            return Ok(t);
        }
    }
}

/// Pattern construction by name.
pub fn build_pattern(c: &GenConfig, host_n: usize) -> Result<Option<PatternGraph>> {
    let Some(kind) = c.pattern.as_deref() else { return Ok(None) };
    let n = c.pattern_n.unwrap_or(host_n);
    let g = match kind {
        "path" => PatternGraph::path(n),
        "cycle" => PatternGraph::cycle(n)?,
        "matching" => PatternGraph::matching(n)?,
        "star" => TreeGraph::star(n).into_pattern(),
        "triangle-factor" => PatternGraph::triangle_factor(n)?,
        "sfactor" => PatternGraph::star_factor(n, need(c.star_size, "star_size", kind)?)?,
        "caterpillar" => gen_caterpillar(need(c.ell, "ell", kind)?, n)?.into_pattern(),
        "spider" => TreeGraph::spider(need(c.legs, "legs", kind)?, need(c.leg_len, "leg_len", kind)?).into_pattern(),
        "random-tree" => random_non_star_tree(n, c.seed.unwrap_or(0))?.into_pattern(),
        other => return Err(Error::InvalidParameters(format!("unknown pattern kind {other:?}"))),
    };
    Ok(Some(g))
}

/// Re-checks a generated host after a write/read round trip.
pub fn check_host_invariants(c: &GenConfig, h: &HostColouredGraph) -> Vec<String> {
    let mut bad = Vec::new();
    let sizes = &h.class_sizes()[1..];
    let spread = sizes.iter().max().unwrap_or(&0) - sizes.iter().min().unwrap_or(&0);
    match c.kind.as_str() {
        "balanced" | "projective" | "prop14" if spread > 1 => {
            bad.push(format!("class sizes {sizes:?} differ by more than one"));
        }
        _ => {}
    }
    if c.kind == "projective" {
        match c.p.map(gen_pg) {
            Some(Ok(pg)) => {
                if let Err(e) = pg.check_axioms() {
                    bad.push(e);
                }
            }
            Some(Err(e)) => bad.push(e.to_string()),
            None => {}
        }
    }
    if c.kind != "example17" && !h.is_complete() {
        bad.push("host is not complete".into());
    }
    bad
}

/// Matrix description for `sweep`; every list is one axis.
///
/// ```toml
/// pipeline = "maximize"
/// n = [8, 10, 12]
/// r = [2, 3]
/// construction = ["balanced"]
/// tree = ["path"]
/// seeds = 2
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub pipeline: String,
    pub n: Vec<usize>,
    #[serde(default = "default_r")]
    pub r: Vec<u8>,
    #[serde(default = "default_construction")]
    pub construction: Vec<String>,
    #[serde(default = "default_tree")]
    pub tree: Vec<String>,
    /// Seeds `0..seeds` per cell.
    #[serde(default = "one")]
    pub seeds: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_restarts")]
    pub restarts: usize,
    /// Compute the exact oracle value where it is cheap.
    #[serde(default = "yes")]
    pub oracle: bool,
    /// Largest `n` for which the oracle column is filled.
    #[serde(default = "default_oracle_n")]
    pub oracle_max_n: usize,
    /// Target sum for `ksum`.
    #[serde(default)]
    pub k: i64,
    pub threads: Option<usize>,
}

fn default_r() -> Vec<u8> {
    vec![2]
}
fn default_construction() -> Vec<String> {
    vec!["balanced".into()]
}
fn default_tree() -> Vec<String> {
    vec!["path".into()]
}
fn one() -> u64 {
    1
}
fn default_restarts() -> usize {
    8
}
fn yes() -> bool {
    true
}
fn default_oracle_n() -> usize {
    12
}

/// Host for one sweep cell; `example15` and `example19` derive their
/// parameter from `n`.
pub fn sweep_host(construction: &str, n: usize, r: u8, seed: u64) -> Result<HostColouredGraph> {
    let c = match construction {
        "example15" => {
            if r != 4 || !n.is_multiple_of(2) {
                return Err(Error::InvalidParameters("example15 needs r = 4 and even n".into()));
            }
            GenConfig { kind: construction.into(), big_n: Some(n / 2), ..Default::default() }
        }
        "example19" => {
            if r != 2 || n < 6 || !(n - 6).is_multiple_of(4) {
                return Err(Error::InvalidParameters("example19 needs r = 2 and n = 4m + 6".into()));
            }
            GenConfig { kind: construction.into(), m: Some((n - 6) / 4), ..Default::default() }
        }
        "bipartite" if r != 2 => return Err(Error::InvalidParameters("bipartite needs r = 2".into())),
        _ => GenConfig { kind: construction.into(), n: Some(n), r: Some(r), seed: Some(seed), ..Default::default() },
    };
    build_host(&c)
}

/// Pattern for one sweep cell: `random` is a random non-star tree,
/// `caterpillar` has spine length `n/3`.
pub fn sweep_pattern(kind: &str, n: usize, seed: u64) -> Result<PatternGraph> {
    let c = match kind {
        "random" => GenConfig { pattern: Some("random-tree".into()), seed: Some(seed), ..Default::default() },
        "caterpillar" => GenConfig { pattern: Some(kind.into()), ell: Some(n / 3), ..Default::default() },
        _ => GenConfig { pattern: Some(kind.into()), ..Default::default() },
    };
    Ok(build_pattern(&c, n)?.expect("pattern set"))
}
