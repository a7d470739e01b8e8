//! Seed derivation and chunked RNG streams.
//!
//! Every stochastic routine takes the run seed plus a stable 64-bit tag and
//! draws from ChaCha streams keyed by (seed, tag, chunk). Chunk streams are
//! independent, so parallel evaluation order cannot change the samples.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; decorrelates (seed, tag) pairs.
fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    mix64(seed ^ mix64(tag))
}

/// Stable tag for a textual case identity.
pub fn tag_of(label: &str) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf29ce484222325;
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// The RNG for one chunk of one tagged stream.
pub fn chunk_rng(seed: u64, tag: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, tag));
    rng.set_stream(chunk);
    rng
}
