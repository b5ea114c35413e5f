//! Reproducible seeding.
//!
//! Two schemes are used. Per-pair random decisions (edges of a random
//! graph) use a counter-based SplitMix64 draw keyed on `(seed, a, b)`, so
//! the decision for a pair never depends on iteration order. Campaign
//! seeds are derived with SHA-256 over a fixed little-endian byte layout,
//! which makes them identical on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

const DOMAIN: &[u8] = b"quas-seed-v1";

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform draw in `[0, 1)` that is a pure function of `(seed, a, b)`.
pub fn counter_uniform(seed: u64, a: u64, b: u64) -> f64 {
    let h = splitmix64(seed ^ splitmix64(a ^ splitmix64(b.wrapping_add(0x2545_F491_4F6C_DD1D))));
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Derives a child seed from a base seed, a textual role and integer
/// coordinates.
pub fn derive_seed(base: u64, role: &str, coords: &[u64]) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(DOMAIN);
    hasher.update(base.to_le_bytes());
    hasher.update((role.len() as u64).to_le_bytes());
    hasher.update(role.as_bytes());
    for c in coords {
        hasher.update(c.to_le_bytes());
    }
    let digest = hasher.finalize();
    let mut bytes = [0u8; 8];
    bytes.copy_from_slice(&digest[..8]);
    u64::from_le_bytes(bytes)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
