//! Copies with a prescribed signed sum, and the mod-4 obstruction.

use treedisc::prelude::*;

fn report(label: &str, h: &PatternGraph, host: &HostColouredGraph, ks: &[i64]) -> Result<()> {
    let res = predict_residue(h, host)?;
    println!("{label}: residue a={} b={}", res.a, res.b);
    for &k in ks {
        match ksum_embed(h, host, k, KsumParams { seed: 7, ..Default::default() })? {
            KsumOutcome::Found { embedding, record } => {
                let s = signed_sum(h, host, &embedding)?.value;
                println!("  k={k:>3}: found (sum {s}, {} rounds)", record.attempts.len());
            }
            KsumOutcome::Infeasible { a, b } => println!("  k={k:>3}: infeasible, sums are {b} mod {a}"),
            KsumOutcome::SearchFailed { closest, .. } => println!("  k={k:>3}: not found, closest {closest:?}"),
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    let host = gen_balanced_random(24, 2, 5);
    report("path P_24, random colouring", &PatternGraph::path(24), &host, &[-5, -1, 0, 1, 3])?;
    report("matching, random colouring", &PatternGraph::matching(24)?, &host, &[-2, 0, 2])?;

    let split = gen_example_19(2)?;
    let cycle = PatternGraph::cycle(split.n())?;
    report("Hamilton cycle, bipartite colouring", &cycle, &split, &[-4, -2, 0, 2, 4])?;
    Ok(())
}
