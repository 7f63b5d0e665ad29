//! The global seed and per-operation random streams derived from it.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Default global seed, the ASCII bytes of "LIEM".
pub const DEFAULT_SEED: u64 = 0x4C49454D;

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

pub fn global_seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

pub fn set_global_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

/// A deterministic stream for one operation, derived from the global seed and a salt.
pub fn stream(salt: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(global_seed().to_le_bytes());
    h.update(salt.as_bytes());
    let digest = h.finalize();
    let mut seed = [0u8; 32];
    seed.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(seed)
}
