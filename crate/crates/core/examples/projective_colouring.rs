//! Many-colour construction from the projective plane of order p.

use std::collections::HashSet;

use treedisc::prelude::*;

fn main() -> Result<()> {
    for p in [2, 3] {
        let pg = gen_pg(p)?;
        pg.check_axioms().map_err(Error::InvalidParameters)?;
        let lines = pg.order();
        let r = (lines + 1) as u8;
        let n = 4 * lines;
        let pre = gen_projective_colouring_unbalanced(p, r, n)?;
        let seen: HashSet<usize> = (0..n).map(|v| (0..n).filter(|&u| u != v).map(|u| pre.colour(u, v)).collect::<HashSet<_>>().len()).collect();
        let post = gen_projective_colouring(p, r, n)?;
        let sizes = &post.class_sizes()[1..];
        println!(
            "p={p}: {lines} points and lines, n={n}, r={r}; colours per vertex {seen:?}; classes {}..{}",
            sizes.iter().min().unwrap(),
            sizes.iter().max().unwrap()
        );
        let star = TreeGraph::star(n);
        let out = maximize_colour(&star, &post, 1, 4, 0)?;
        println!("  best star gets {} colour-1 edges of {}", out.achieved, n - 1);
    }
    Ok(())
}
