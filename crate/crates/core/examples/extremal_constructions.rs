//! Exhaustive checks of the small extremal colourings.

use treedisc::prelude::*;

fn main() -> Result<()> {
    for rep in [verify_example_15(4)?, verify_example_17(2)?, verify_example_19(1)?, verify_example_110(1)?] {
        println!("{}: {}/{} pass={} histogram {:?}", rep.name, rep.passing, rep.cases, rep.pass, rep.histogram);
    }

    let h = gen_prop14_colouring(48, 3)?;
    let worst = (0..48)
        .map(|c| {
            let d = |k| h.colour_degree(c, k) as i64;
            d(1) - d(2).max(d(3))
        })
        .max()
        .unwrap();
    println!("three colours on K_48: every star has colour 1 behind by at least {}", -worst);
    Ok(())
}
