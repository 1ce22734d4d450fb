//! Colouring generators and the classes the theorems quantify over.

pub mod analysis;
pub mod balanced;
pub mod constructions;
pub mod projective;

pub use analysis::{
    detect_bipartite_colouring, is_eps_balanced, is_eta_standard, is_inert, witness_violates, BipartiteColouring,
    EtaMode, EtaStandard, PartitionWitness,
};
pub use balanced::{gen_balanced_random, gen_bipartite_random};
pub use constructions::{
    circulant_edges, gen_caterpillar, gen_example_110, gen_example_15, gen_example_17, gen_example_19,
    gen_prop14_colouring, gen_prop14_colouring_unbalanced, gen_split_colouring, prop14_inner_degree,
};
pub use projective::{
    gen_pg, gen_projective_colouring, gen_projective_colouring_unbalanced, is_prime, next_prime, rebalance,
    ProjectivePlane,
};
