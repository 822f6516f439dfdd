//! Deterministic test corpora.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LceError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    Random,
    Periodic,
    Fibonacci,
    ThueMorse,
}

impl CorpusKind {
    pub const ALL: [CorpusKind; 4] = [
        CorpusKind::Random,
        CorpusKind::Periodic,
        CorpusKind::Fibonacci,
        CorpusKind::ThueMorse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorpusKind::Random => "random",
            CorpusKind::Periodic => "periodic",
            CorpusKind::Fibonacci => "fibonacci",
            CorpusKind::ThueMorse => "thue-morse",
        }
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorpusKind {
    type Err = LceError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| LceError::Inconsistent(format!("unknown corpus kind {s:?}")))
    }
}

/// Letter `x` of an alphabet of size `sigma`: `a, b, ...` up to 26, raw
/// bytes beyond.
fn letter(x: usize, sigma: usize) -> u8 {
    if sigma <= 26 {
        b'a' + x as u8
    } else {
        x as u8
    }
}

/// `n` bytes of the given kind. Random and periodic texts use `sigma`
/// letters; Fibonacci and Thue-Morse words are binary.
pub fn generate(kind: CorpusKind, n: usize, sigma: usize, seed: u64) -> Result<Vec<u8>> {
    if sigma == 0 || sigma > 256 {
        return Err(LceError::Inconsistent(format!("alphabet size {sigma} is outside 1..=256")));
    }
    Ok(match kind {
        CorpusKind::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| letter(rng.gen_range(0..sigma), sigma)).collect()
        }
        CorpusKind::Periodic => (0..n).map(|i| letter(i % sigma, sigma)).collect(),
        CorpusKind::Fibonacci => {
            let (mut a, mut b) = (vec![b'a'], vec![b'a', b'b']);
            while b.len() < n {
                let next = [b.as_slice(), a.as_slice()].concat();
                a = std::mem::replace(&mut b, next);
            }
            b.truncate(n);
            b
        }
        CorpusKind::ThueMorse => (0..n)
            .map(|i| if i.count_ones() % 2 == 0 { b'a' } else { b'b' })
            .collect(),
    })
}
