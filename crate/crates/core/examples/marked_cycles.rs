//! Marked 4-cycles and the sites used by the k-sum search.

use treedisc::prelude::*;

fn main() -> Result<()> {
    for n in [20, 40] {
        let h = gen_balanced_random(n, 3, 1);
        let exact = count_marked_cycles(&h, &CycleFilter::not_increasing(2), CountMode::Exact)?;
        let est = count_marked_cycles(&h, &CycleFilter::not_increasing(2), CountMode::Sample { seed: 1, trials: 200_000 })?;
        println!(
            "n={n}: exact {} ({:.4} n^4), sampled {:.0} ± {:.0}",
            exact.exact.unwrap(),
            exact.estimate / (n as f64).powi(4),
            est.estimate,
            est.std_error
        );
    }

    let h = gen_balanced_random(30, 2, 4);
    if let Some(c) = find_13_cycle(&h)? {
        println!("(1,3)-cycle {:?}, minority edge {:?}", c.cycle, c.minority);
    }
    if let Some(s) = find_type2_k22d(&h, 3)? {
        println!("type-2 K_2,6 at x={} z={} y={} with {} common neighbours", s.x, s.z, s.y, s.b_prime.len());
    }
    let t1 = count_type1_k22d(&h, 3, Type1Mode::Exact)?;
    println!("type-1 K_2,6 sites: {:?}", t1.exact);
    Ok(())
}
