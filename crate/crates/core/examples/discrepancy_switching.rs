//! Push one colour up in a copy of a tree inside a balanced 3-coloured K_n.

use treedisc::prelude::*;

fn main() -> Result<()> {
    let n = 30;
    let host = gen_balanced_random(n, 3, 11);
    let tree = gen_caterpillar(8, n)?;

    // one switch by hand
    let mut rng = treedisc::seed::rng(5);
    let emb = Embedding::random(n, n, &mut rng);
    let fam = find_free_family(&tree);
    let before = colour_profile(&tree, &host, &emb)?;
    println!("uniform copy: colour counts {:?}", &before.counts[1..]);
    if let Some((pair, cycle)) = fam.pairs.iter().find_map(|p| image_cycle(&emb, p, &host, 1).map(|c| (p, c))) {
        let after = apply_switching(&emb, pair, &host)?;
        let prof = colour_profile(&tree, &host, &after)?;
        println!("switch {:?} on a {:?} cycle: gain {} -> counts {:?}", pair.kind, cycle.pattern, cycle.gain(1), &prof.counts[1..]);
    }

    for i in 1..=3 {
        let out = maximize_colour(&tree, &host, i, 20, 42)?;
        println!(
            "maximize colour {i}: {} of {} edges (average share {:.1}, advisory bound {:.2})",
            out.achieved,
            n - 1,
            (n - 1) as f64 / 3.0,
            out.reported_bound
        );
    }
    Ok(())
}
