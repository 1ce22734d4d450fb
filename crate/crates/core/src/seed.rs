//! Seed splitting.
//!
//! Every random choice in the crate flows from one top-level `u64` seed.
//! Sub-seeds are derived as
//!
//! ```text
//! derive_seed(seed, stream, index) = mix(mix(seed ^ mix(stream)) ^ mix(index + GOLDEN))
//! ```
//!
//! where `mix` is the SplitMix64 finaliser. `stream` names the consumer
//! (see the `STREAM_*` constants) and `index` numbers attempts or cells.
//! Each derived value seeds its own `ChaCha8Rng`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

pub const STREAM_MAXIMIZE: u64 = 1;
pub const STREAM_LEAD: u64 = 2;
pub const STREAM_KSUM: u64 = 3;
pub const STREAM_SWEEP: u64 = 4;
pub const STREAM_GEN: u64 = 5;
pub const STREAM_VERIFY: u64 = 6;

#[inline]
pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive_seed(seed: u64, stream: u64, index: u64) -> u64 {
    mix(mix(seed ^ mix(stream)) ^ mix(index.wrapping_add(GOLDEN)))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn derived_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    rng(derive_seed(seed, stream, index))
}
