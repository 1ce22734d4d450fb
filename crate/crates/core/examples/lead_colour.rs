//! Colour-lead pipeline: make colour 1 strictly ahead of every other colour.

use treedisc::prelude::*;

fn main() -> Result<()> {
    let n = 40;
    let host = gen_balanced_random(n, 4, 3);
    let tree = TreeGraph::spider(3, 13);
    let params = LeadParams { restarts: 20, seed: 1, ..Default::default() };
    let out = lead_colour_kn(&tree, &host, params)?;
    println!("balanced 4-colouring: leads {:?} min {} flagged {}", &out.leads[2..], out.min_lead, out.flagged);

    // four colours where every Hamilton cycle has as many colour-2 as colour-1 edges
    let ex = gen_example_15(5)?;
    let out = lead_colour_kn(&TreeGraph::path(10), &ex, LeadParams { restarts: 20, seed: 2, ..Default::default() })?;
    println!("four-colour construction, P_10: leads {:?}", &out.leads[2..]);
    let rep = verify_example_15(4)?;
    println!("  {}: {}/{} Hamilton cycles with colours 1 and 2 tied", rep.name, rep.passing, rep.cases);
    Ok(())
}
