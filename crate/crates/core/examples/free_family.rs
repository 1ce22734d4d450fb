//! Free families of switchable pairs on a few tree shapes.

use treedisc::prelude::*;

fn main() -> Result<()> {
    let trees = [
        ("path P_20", TreeGraph::path(20)),
        ("spider 4x5", TreeGraph::spider(4, 5)),
        ("caterpillar", gen_caterpillar(6, 20)?),
        ("star K_1,19", TreeGraph::star(20)),
        ("Prüfer tree", TreeGraph::from_prufer(&[3, 3, 7, 0, 12, 7, 7, 1, 5, 14, 3, 9, 2, 2, 16, 0, 11, 4])?),
    ];
    for (name, t) in &trees {
        let fam = find_free_family(t);
        println!("{name}: n={} Δ={} family={} bound={}", t.n(), t.max_degree(), fam.len(), family_size_bound(t));
        for p in &fam.pairs {
            println!("  {:?}: uw=({},{}) vz=({},{})", p.kind, p.u, p.w, p.v, p.z);
        }
        assert!(fam.is_free_for(t));
    }
    Ok(())
}
