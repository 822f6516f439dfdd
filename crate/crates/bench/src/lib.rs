//! Fixtures shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sublce::{generate, CorpusKind, Text};

pub const SEED: u64 = 0x5eed;

pub fn corpus(kind: CorpusKind, n: usize, sigma: usize) -> Text {
    let raw = generate(kind, n, sigma, SEED).expect("valid corpus parameters");
    Text::normalize(&raw)
}

/// Uniform random pairs, distinct positions.
pub fn pairs(n: usize, count: usize) -> Vec<(usize, usize)> {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    (0..count)
        .map(|_| loop {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i != j {
                break (i, j);
            }
        })
        .collect()
}
