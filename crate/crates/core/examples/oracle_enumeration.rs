//! Ground truth at small sizes: embeddings, best colour counts, reachable sums.

use treedisc::prelude::*;

fn main() -> Result<()> {
    let host = gen_balanced_random(9, 2, 2);
    let tree = TreeGraph::spider(2, 4);
    let all = enumerate_embeddings(&tree, &host, DEFAULT_CAP)?.count();
    println!("spider in K_9: {all} embeddings, DP count {}", count_embeddings(&tree, &host)?);
    println!("best colour-1 copy: {:?}", max_colour_oracle(&tree, &host, 1)?);
    println!("reachable signed sums: {:?}", reachable_sums(&tree, &host)?);

    let cycles = hamilton_cycles(&host)?.count();
    let paths = hamilton_paths(&host)?.count();
    println!("K_9: {cycles} Hamilton cycles, {paths} Hamilton paths");

    let labelled = enumerate_trees(7, TreeMode::Labelled)?.count();
    let stars = enumerate_trees(7, TreeMode::Labelled)?.filter(|t| t.is_star()).count();
    println!("labelled trees on 7 vertices: {labelled} ({stars} stars)");
    println!("star factors of K_12 into 4-stars: {}", sfactor_count(12, 4));

    let dir = std::env::temp_dir().join("treedisc-oracle-cache");
    let cache = OracleCache::new(&dir);
    let digest = instance_digest(&tree, &host);
    let sums: Vec<i64> = cache.get_or_compute(&digest, "reachable-sums", || Ok(reachable_sums(&tree, &host)?.into_iter().collect()))?;
    println!("cached under {}: {sums:?}", dir.display());
    Ok(())
}
