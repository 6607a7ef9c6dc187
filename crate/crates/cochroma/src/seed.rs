//! Reproducible seed derivation.
//!
//! Every random quantity in the crate is drawn from a ChaCha12 stream (a
//! counter-based generator: output is a pure function of key and block
//! counter). Sub-streams are split off a root seed by hashing the root
//! together with integer tags through SplitMix64:
//!
//! ```text
//! derived = splitmix(splitmix(... splitmix(root) ⊕ tag_1 ...) ⊕ tag_k)
//! ```
//!
//! The derivation is associative-free by design: the same `(root, tags)`
//! always yields the same stream no matter which thread asks for it, so
//! parallel sampling is reproducible independent of scheduling.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// One round of SplitMix64.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Derives a child seed from a root seed and a list of integer tags.
pub fn derive(root: u64, tags: &[u64]) -> u64 {
    let mut s = splitmix64(root);
    for &t in tags {
        s = splitmix64(s ^ t);
    }
    s
}

/// A ChaCha12 stream keyed by the derived seed.
pub fn rng(root: u64, tags: &[u64]) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(derive(root, tags))
}
