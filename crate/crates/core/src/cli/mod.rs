//! Batch front end behind the `treedisc` binary.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 infeasible instance,
//! failed search or failed claim.

pub mod args;
pub mod config;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::format::{read_host, read_pattern, read_tree, write_host, write_pattern};
use crate::graph::{signed_sum, HostColouredGraph, PatternGraph, TreeGraph};
use crate::ksum::{ksum_embed, predict_residue, KsumOutcome, KsumParams};
use crate::oracle::{
    enumerate_embeddings, enumerate_sfactors, enumerate_trees, hamilton_cycles, hamilton_paths, instance_digest,
    max_colour_oracle, reachable_sums, sequence_edges, OracleCache, TreeMode, DEFAULT_CAP,
};
use crate::repair::lead_colour_dense;
use crate::seed::{self, STREAM_SWEEP};
use crate::switching::{lead_colour_kn, maximize_colour, LeadParams};
use crate::verify::{verify_claim, Claim, VerifyParams};

use args::{Cli, Command, Format, GenArgs, OracleArgs, OracleOp, Pipeline, RunArgs, SweepArgs, VerifyArgs};
use config::{build_host, build_pattern, check_host_invariants, sweep_host, sweep_pattern, GenConfig, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Text to emit and the exit code to return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
    pub out: Option<PathBuf>,
}

impl Output {
    fn new(text: String, code: i32, out: Option<PathBuf>) -> Self {
        Output { text, code, out }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output; returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let written = match &o.out {
                Some(p) => fs::write(p, &o.text).map_err(Error::from),
                None => {
                    print!("{}", o.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => o.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn execute(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Gen(a) => cmd_gen(&a),
        Command::Run(a) => cmd_run(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Sweep(a) => cmd_sweep(&a),
        Command::Oracle(a) => cmd_oracle(&a),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidParameters(format!("{}: {e}", path.display())))
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn gen_config(a: &GenArgs) -> Result<GenConfig> {
    let text = read(&a.config)?;
    let mut c: GenConfig = toml::from_str(&text).map_err(|e| Error::InvalidParameters(format!("config: {e}")))?;
    if let Some(s) = a.seed {
        c.seed = Some(s);
    }
    Ok(c)
}

pub fn cmd_gen(a: &GenArgs) -> Result<Output> {
    let c = gen_config(a)?;
    let host = build_host(&c)?;
    let pattern = build_pattern(&c, host.n())?;
    let stem = match (&a.out, &c.out) {
        (Some(p), _) => p.clone(),
        (None, Some(s)) => PathBuf::from(s),
        (None, None) => PathBuf::from(&c.kind),
    };
    let with_ext = |ext: &str| {
        let mut s = stem.clone().into_os_string();
        s.push(ext);
        PathBuf::from(s)
    };
    let host_path = with_ext(".host");
    fs::write(&host_path, write_host(&host))?;
    let reread = read_host(&read(&host_path)?)?;
    let mut problems = check_host_invariants(&c, &reread);
    if reread != host {
        problems.push("host changed in a write/read round trip".into());
    }
    if !problems.is_empty() {
        return Err(Error::InvalidParameters(problems.join("; ")));
    }
    let mut files = vec![host_path.display().to_string()];
    if let Some(p) = &pattern {
        let pp = with_ext(".pattern");
        fs::write(&pp, write_pattern(p))?;
        files.push(pp.display().to_string());
    }
    let digest = hex::encode(Sha256::digest(serde_json::to_vec(&c)?));
    let manifest = json!({
        "kind": c.kind,
        "config_digest": digest,
        "n": host.n(),
        "r": host.r(),
        "class_sizes": &host.class_sizes()[1..],
        "pattern": pattern.as_ref().map(|p| json!({"n": p.n(), "m": p.m(), "max_degree": p.max_degree()})),
        "files": files,
    });
    Ok(Output::new(pretty(&manifest), EXIT_OK, None))
}

fn largest_class(host: &HostColouredGraph) -> u8 {
    let sizes = host.class_sizes();
    (1..=host.r()).max_by_key(|&c| (sizes[c as usize], std::cmp::Reverse(c))).unwrap_or(1)
}

fn load_tree(path: &Path) -> Result<TreeGraph> {
    read_tree(&read(path)?)
}

pub fn cmd_run(a: &RunArgs) -> Result<Output> {
    let host = read_host(&read(&a.host)?)?;
    let text = read(&a.pattern)?;
    let (json, code) = match a.pipeline {
        Pipeline::Maximize => {
            let t = load_tree(&a.pattern)?;
            let i = a.colour.unwrap_or_else(|| largest_class(&host));
            let out = maximize_colour(&t, &host, i, a.restarts.unwrap_or(50), a.seed)?;
            (pretty(&out), EXIT_OK)
        }
        Pipeline::Lead | Pipeline::LeadDense => {
            let t = load_tree(&a.pattern)?;
            let d = LeadParams::default();
            let params = LeadParams {
                eta: a.eta.unwrap_or(d.eta),
                eps: a.eps.unwrap_or(d.eps),
                restarts: a.restarts.unwrap_or(d.restarts),
                seed: a.seed,
            };
            let out = if a.pipeline == Pipeline::Lead {
                lead_colour_kn(&t, &host, params)?
            } else {
                lead_colour_dense(&t, &host, params)?
            };
            (pretty(&out), EXIT_OK)
        }
        Pipeline::Ksum => {
            let h = read_pattern(&text)?;
            let d = KsumParams::default();
            let params = KsumParams {
                restarts: a.restarts.unwrap_or(d.restarts),
                seed: a.seed,
                gadget_budget: a.gadget_budget.unwrap_or(d.gadget_budget),
                ..d
            };
            let k = a.k.as_deref().ok_or_else(|| Error::InvalidParameters("ksum needs --k".into()))?;
            if k == "sweep" {
                let res = predict_residue(&h, &host)?;
                let m = h.m() as i64;
                let mut runs = Vec::new();
                let mut code = EXIT_OK;
                for k in (-m..=m).filter(|&k| res.admits(k)) {
                    let o = ksum_embed(&h, &host, k, params)?;
                    if !matches!(o, KsumOutcome::Found { .. }) {
                        code = EXIT_FAILED;
                    }
                    runs.push(json!({"k": k, "outcome": o}));
                }
                (pretty(&json!({"pipeline": "ksum", "residue": res, "runs": runs})), code)
            } else {
                let k: i64 = k.parse().map_err(|_| Error::InvalidParameters(format!("--k expects an integer or `sweep`, got {k:?}")))?;
                let o = ksum_embed(&h, &host, k, params)?;
                let code = if matches!(o, KsumOutcome::Found { .. }) { EXIT_OK } else { EXIT_FAILED };
                (pretty(&json!({"pipeline": "ksum", "k": k, "outcome": o})), code)
            }
        }
    };
    if a.format != Format::Json {
        return Err(Error::InvalidParameters("run emits JSON only".into()));
    }
    Ok(Output::new(json, code, a.out.clone()))
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Output> {
    let claim: Claim = a.claim.parse()?;
    let rep = verify_claim(claim, &VerifyParams { seed: a.seed, size: a.size, samples: a.samples });
    let code = if rep.pass { EXIT_OK } else { EXIT_FAILED };
    let text = match a.format {
        Format::Json => pretty(&rep),
        _ => {
            let mut s = String::new();
            for l in &rep.lines {
                s.push_str(l);
                s.push('\n');
            }
            s.push_str(&format!("{} {}: {}/{}\n", if rep.pass { "PASS" } else { "FAIL" }, rep.claim, rep.passing, rep.cases));
            s
        }
    };
    Ok(Output::new(text, code, a.out.clone()))
}

/// One row of a sweep table.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub r: u8,
    pub construction: String,
    pub tree: String,
    pub seed: u64,
    pub pipeline: String,
    pub status: String,
    /// Achieved count (maximize), minimum lead (lead) or signed sum (ksum).
    pub value: Option<i64>,
    pub lead2: Option<i64>,
    pub oracle: Option<i64>,
    pub wall_ms: Option<f64>,
}

fn run_cell(cfg: &SweepConfig, n: usize, r: u8, construction: &str, tree: &str, s: u64, timing: bool) -> SweepRow {
    let start = Instant::now();
    let cell_seed = seed::derive_seed(cfg.seed, STREAM_SWEEP, s);
    let mut row = SweepRow {
        n,
        r,
        construction: construction.into(),
        tree: tree.into(),
        seed: s,
        pipeline: cfg.pipeline.clone(),
        ..Default::default()
    };
    let res = sweep_cell(cfg, n, r, construction, tree, cell_seed, &mut row);
    row.status = match res {
        Ok(st) => st,
        Err(e) => format!("error: {e}"),
    };
    if timing {
        row.wall_ms = Some((start.elapsed().as_secs_f64() * 1e3 * 100.0).round() / 100.0);
    }
    row
}

fn sweep_cell(cfg: &SweepConfig, n: usize, r: u8, construction: &str, tree: &str, s: u64, row: &mut SweepRow) -> Result<String> {
    let host = sweep_host(construction, n, r, s)?;
    let pattern = sweep_pattern(tree, n, s)?;
    let oracle_ok = cfg.oracle && n <= cfg.oracle_max_n;
    match cfg.pipeline.as_str() {
        "maximize" => {
            let t = TreeGraph::try_from_pattern(pattern.clone())?;
            let i = largest_class(&host);
            let out = maximize_colour(&t, &host, i, cfg.restarts, s)?;
            row.value = Some(out.achieved as i64);
            if oracle_ok {
                row.oracle = max_colour_oracle(&pattern, &host, i)?.map(|v| v as i64);
            }
            Ok("ok".into())
        }
        "lead" | "lead-dense" => {
            let t = TreeGraph::try_from_pattern(pattern)?;
            let p = LeadParams { restarts: cfg.restarts, seed: s, ..Default::default() };
            let out = if cfg.pipeline == "lead" { lead_colour_kn(&t, &host, p)? } else { lead_colour_dense(&t, &host, p)? };
            row.value = Some(out.min_lead);
            row.lead2 = out.leads.get(2).copied();
            Ok(if out.flagged { "flagged".into() } else { "ok".into() })
        }
        "ksum" => {
            let o = ksum_embed(&pattern, &host, cfg.k, KsumParams { restarts: cfg.restarts, seed: s, ..Default::default() })?;
            if oracle_ok {
                row.oracle = Some(reachable_sums(&pattern, &host)?.contains(&cfg.k) as i64);
            }
            Ok(match o {
                KsumOutcome::Found { embedding, .. } => {
                    row.value = Some(signed_sum(&pattern, &host, &embedding)?.value);
                    "found".into()
                }
                KsumOutcome::Infeasible { a, b } => format!("infeasible ({a}, {b})"),
                KsumOutcome::SearchFailed { closest, .. } => {
                    row.value = closest;
                    "search failed".into()
                }
            })
        }
        other => Err(Error::InvalidParameters(format!("unknown sweep pipeline {other:?}"))),
    }
}

/// Runs every cell of the matrix; rows come back in matrix order.
pub fn run_sweep(cfg: &SweepConfig, threads: Option<usize>, timing: bool) -> Result<Vec<SweepRow>> {
    let mut cells = Vec::new();
    for &n in &cfg.n {
        for &r in &cfg.r {
            for c in &cfg.construction {
                for t in &cfg.tree {
                    for s in 0..cfg.seeds {
                        cells.push((n, r, c.clone(), t.clone(), s));
                    }
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.or(cfg.threads).unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    Ok(pool.install(|| cells.par_iter().map(|(n, r, c, t, s)| run_cell(cfg, *n, *r, c, t, *s, timing)).collect()))
}

pub fn rows_to_csv(rows: &[SweepRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::InvalidParameters(format!("csv: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidParameters(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

pub fn cmd_sweep(a: &SweepArgs) -> Result<Output> {
    let mut cfg: SweepConfig =
        toml::from_str(&read(&a.config)?).map_err(|e| Error::InvalidParameters(format!("config: {e}")))?;
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(r) = a.restarts {
        cfg.restarts = r;
    }
    let rows = run_sweep(&cfg, a.threads, !a.no_timing)?;
    let text = match a.format {
        Format::Json => pretty(&rows),
        _ => rows_to_csv(&rows)?,
    };
    Ok(Output::new(text, EXIT_OK, a.out.clone()))
}

fn need_host(a: &OracleArgs) -> Result<HostColouredGraph> {
    let p = a.host.as_ref().ok_or_else(|| Error::InvalidParameters("this oracle needs --host".into()))?;
    read_host(&read(p)?)
}

fn need_pattern(a: &OracleArgs) -> Result<PatternGraph> {
    let p = a.pattern.as_ref().ok_or_else(|| Error::InvalidParameters("this oracle needs --pattern".into()))?;
    read_pattern(&read(p)?)
}

fn cached<T: Serialize + serde::de::DeserializeOwned>(
    a: &OracleArgs,
    digest: &str,
    op: &str,
    f: impl FnOnce() -> Result<T>,
) -> Result<T> {
    match &a.cache {
        Some(dir) => OracleCache::new(dir).get_or_compute(digest, op, f),
        None => f(),
    }
}

pub fn cmd_oracle(a: &OracleArgs) -> Result<Output> {
    let value = match a.op {
        OracleOp::MaxColour => {
            let (h, p) = (need_host(a)?, need_pattern(a)?);
            let i = a.colour.unwrap_or_else(|| largest_class(&h));
            let d = instance_digest(&p, &h);
            let v = cached(a, &d, &format!("max-colour-{i}"), || max_colour_oracle(&p, &h, i))?;
            json!({"op": "max-colour", "colour": i, "digest": d, "value": v})
        }
        OracleOp::ReachableSums => {
            let (h, p) = (need_host(a)?, need_pattern(a)?);
            let d = instance_digest(&p, &h);
            let v = cached(a, &d, "reachable-sums", || reachable_sums(&p, &h))?;
            json!({"op": "reachable-sums", "digest": d, "value": v})
        }
        OracleOp::Embeddings => {
            let (h, p) = (need_host(a)?, need_pattern(a)?);
            let d = instance_digest(&p, &h);
            let cap = a.cap.unwrap_or(DEFAULT_CAP);
            let count = cached(a, &d, "embeddings", || Ok(enumerate_embeddings(&p, &h, cap)?.count() as u64))?;
            json!({"op": "embeddings", "digest": d, "count": count})
        }
        OracleOp::HamiltonCycles | OracleOp::HamiltonPaths => {
            let h = need_host(a)?;
            let closed = a.op == OracleOp::HamiltonCycles;
            let seqs: Box<dyn Iterator<Item = Vec<usize>>> =
                if closed { Box::new(hamilton_cycles(&h)?) } else { Box::new(hamilton_paths(&h)?) };
            let mut profiles: BTreeMap<String, u64> = BTreeMap::new();
            let mut count = 0u64;
            for s in seqs {
                let mut c = vec![0usize; h.r() as usize + 1];
                for (x, y) in sequence_edges(&s, closed) {
                    c[h.colour(x, y) as usize] += 1;
                }
                let key = c[1..].iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
                *profiles.entry(key).or_default() += 1;
                count += 1;
            }
            json!({"op": if closed { "hamilton-cycles" } else { "hamilton-paths" }, "count": count, "colour_profiles": profiles})
        }
        OracleOp::Sfactors => {
            let n = a.n.ok_or_else(|| Error::InvalidParameters("sfactors needs --n".into()))?;
            let s = a.star_size.ok_or_else(|| Error::InvalidParameters("sfactors needs --star-size".into()))?;
            let host = a.host.as_ref().map(|p| read(p).and_then(|t| read_host(&t))).transpose()?;
            let mut sums: BTreeMap<i64, u64> = BTreeMap::new();
            let mut count = 0u64;
            for f in enumerate_sfactors(n, s)? {
                count += 1;
                if let Some(h) = &host {
                    *sums.entry(f.signed_sum(h)).or_default() += 1;
                }
            }
            json!({"op": "sfactors", "count": count, "signed_sums": host.map(|_| sums)})
        }
        OracleOp::Trees => {
            let n = a.n.ok_or_else(|| Error::InvalidParameters("trees needs --n".into()))?;
            let mode = match a.samples {
                Some(count) => TreeMode::Sample { seed: a.seed, count },
                None => TreeMode::Labelled,
            };
            let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
            let mut count = 0u64;
            for t in enumerate_trees(n, mode)? {
                count += 1;
                *hist.entry(t.max_degree()).or_default() += 1;
            }
            json!({"op": "trees", "n": n, "count": count, "max_degree_histogram": hist})
        }
    };
    if a.format != Format::Json {
        return Err(Error::InvalidParameters("oracle emits JSON only".into()));
    }
    Ok(Output::new(pretty(&value), EXIT_OK, a.out.clone()))
}
