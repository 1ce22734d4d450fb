//! Clearing ghost edges when the host misses a few pairs.

use rand::Rng;
use treedisc::prelude::*;

fn main() -> Result<()> {
    let n = 50;
    let mut host = gen_balanced_random(n, 2, 8);
    let mut rng = treedisc::seed::rng(8);
    for _ in 0..200 {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && host.degree(u) > 46 && host.degree(v) > 46 {
            host.remove(u, v);
        }
    }
    println!("host: n={n} min degree {}", host.min_degree());

    let tree = gen_caterpillar(10, n)?;
    let emb = Embedding::random(n, n, &mut rng);
    let ghosts = validate_embedding(&tree, &host, &emb)?;
    println!("uniform copy has {} ghost edges", ghosts.len());
    let (fixed, steps) = remove_ghost_edges(&tree, &host, &emb, &[0])?;
    for s in &steps {
        println!("  exchange {} <-> {}: ghosts {} -> {}, {} copy edges moved", s.a, s.b, s.ghosts_before, s.ghosts_after, s.edge_diff);
    }
    assert!(validate_embedding(&tree, &host, &fixed)?.is_empty());
    assert_eq!(fixed.image(0), emb.image(0));

    let out = lead_colour_dense(&tree, &host, LeadParams { restarts: 10, seed: 3, ..Default::default() })?;
    println!("dense lead pipeline: lead {} flagged {}", out.min_lead, out.flagged);
    Ok(())
}
