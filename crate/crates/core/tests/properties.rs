mod common;

use proptest::prelude::*;
use treedisc::prelude::*;

fn tree_from(seq: &[usize], n: usize) -> TreeGraph {
    let s: Vec<usize> = seq.iter().map(|x| x % n).collect();
    TreeGraph::from_prufer(&s).unwrap()
}

fn permuted(host: &HostColouredGraph, perm: &[usize]) -> HostColouredGraph {
    HostColouredGraph::complete_with(host.n(), host.r(), |u, v| host.colour(perm[u], perm[v]))
}

fn perm_of(keys: Vec<u32>) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by_key(|&i| (keys[i], i));
    idx
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn switching_twice_is_the_identity(seq in prop::collection::vec(0usize..64, 4..14), seed in any::<u64>(), pick in any::<usize>()) {
        let n = seq.len() + 2;
        let t = tree_from(&seq, n);
        let edges = t.edges().to_vec();
        let pairs: Vec<SwitchablePair> = (0..edges.len())
            .flat_map(|i| (i + 1..edges.len()).map(move |j| (i, j)))
            .filter_map(|(i, j)| is_switchable(&t, edges[i], edges[j]))
            .collect();
        prop_assume!(!pairs.is_empty());
        let host = gen_balanced_random(n + 2, 3, seed);
        let mut rng = treedisc::seed::rng(seed);
        let emb = Embedding::random(n, n + 2, &mut rng);
        let p = pairs[pick % pairs.len()];
        let once = apply_switching(&emb, &p, &host).unwrap();
        prop_assert_ne!(&once, &emb);
        prop_assert_eq!(apply_switching(&once, &p, &host).unwrap(), emb);
    }

    #[test]
    fn residue_and_sums_ignore_vertex_names(seed in any::<u64>(), keys in prop::collection::vec(any::<u32>(), 8), shape in 0usize..3) {
        let h = match shape {
            0 => PatternGraph::matching(8).unwrap(),
            1 => PatternGraph::path(8),
            _ => PatternGraph::cycle(8).unwrap(),
        };
        let host = if seed % 2 == 0 { gen_bipartite_random(8, seed) } else { gen_balanced_random(8, 2, seed) };
        let moved = permuted(&host, &perm_of(keys));
        prop_assert_eq!(predict_residue(&h, &host).unwrap(), predict_residue(&h, &moved).unwrap());
        prop_assert_eq!(reachable_sums(&h, &host).unwrap(), reachable_sums(&h, &moved).unwrap());
    }

    #[test]
    fn max_colour_oracle_matches_permutations(seq in prop::collection::vec(0usize..7, 5), seed in any::<u64>()) {
        let t = tree_from(&seq, 7);
        let host = gen_balanced_random(7, 3, seed);
        let mut perm: Vec<usize> = (0..7).collect();
        let mut best = 0;
        loop {
            best = best.max(t.edges().iter().filter(|&&(a, b)| host.colour(perm[a], perm[b]) == 1).count());
            if !common::next_permutation(&mut perm) {
                break;
            }
        }
        prop_assert_eq!(max_colour_oracle(&t, &host, 1).unwrap(), Some(best));
    }

    #[test]
    fn repair_clears_ghosts(seed in any::<u64>(), drop in prop::collection::vec((0usize..20, 0usize..20), 0..12)) {
        let mut host = gen_balanced_random(20, 2, seed);
        for (u, v) in drop {
            if u != v && host.degree(u) > 17 && host.degree(v) > 17 {
                host.remove(u, v);
            }
        }
        let mut rng = treedisc::seed::rng(seed);
        let t = common::bounded_degree_tree(14, 3, &mut rng);
        let emb = Embedding::random(14, 20, &mut rng);
        let (out, steps) = remove_ghost_edges(&t, &host, &emb, &[]).unwrap();
        prop_assert!(validate_embedding(&t, &host, &out).unwrap().is_empty());
        prop_assert!(steps.iter().all(|s| s.ghosts_after < s.ghosts_before));
    }
}
