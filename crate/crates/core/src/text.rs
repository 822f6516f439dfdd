//! Integer-alphabet texts with virtual zero padding, and the naive LCE scan.

use crate::error::{LceError, Result};
use crate::stats::QueryStats;

/// An immutable text over the alphabet `1..=sigma`.
///
/// Symbol `0` never occurs in the text; [`Text::char_at`] returns it for every
/// position at or past the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    symbols: Vec<u32>,
    sigma: u32,
}

impl Text {
    /// Maps raw bytes to their 1-based ranks among the distinct bytes present.
    pub fn normalize(raw: &[u8]) -> Text {
        let mut present = [false; 256];
        for &b in raw {
            present[b as usize] = true;
        }
        let mut rank = [0u32; 256];
        let mut sigma = 0;
        for (b, &p) in present.iter().enumerate() {
            if p {
                sigma += 1;
                rank[b] = sigma;
            }
        }
        Text {
            symbols: raw.iter().map(|&b| rank[b as usize]).collect(),
            sigma,
        }
    }

    pub fn from_symbols(symbols: Vec<u32>, sigma: u32) -> Result<Text> {
        if let Some((index, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s == 0 || s > sigma)
        {
            return Err(LceError::InvalidSymbol {
                index,
                symbol,
                sigma,
            });
        }
        Ok(Text { symbols, sigma })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    #[inline]
    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    #[inline]
    pub fn char_at(&self, i: usize) -> u32 {
        self.symbols.get(i).copied().unwrap_or(0)
    }

    pub(crate) fn check_position(&self, pos: usize) -> Result<()> {
        if pos < self.len() {
            Ok(())
        } else {
            Err(LceError::PositionOutOfRange {
                pos,
                n: self.len(),
            })
        }
    }

    pub(crate) fn check_tau(&self, tau: usize) -> Result<()> {
        if tau >= 1 && tau <= self.len() {
            Ok(())
        } else {
            Err(LceError::InvalidTau {
                tau,
                n: self.len(),
            })
        }
    }
}

/// Longest common extension of the suffixes at `i` and `j` by direct scan.
///
/// Positions may equal `n` (the empty suffix). Each inspected position pair,
/// including the final mismatching or out-of-text one, counts as one
/// character comparison.
pub fn naive_lce(text: &Text, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
    let n = text.len();
    for pos in [i, j] {
        if pos > n {
            return Err(LceError::PositionOutOfRange { pos, n });
        }
    }
    if i == j {
        return Ok(n - i);
    }
    let s = text.symbols();
    let mut l = 0;
    loop {
        stats.char_cmps += 1;
        let (a, b) = (i + l, j + l);
        if a >= n || b >= n || s[a] != s[b] {
            return Ok(l);
        }
        l += 1;
    }
}

/// Why [`extend`] stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Mismatch,
    Cap,
    Hit,
}

/// Compares `w[a+d]` with `w[b+d]` for `d = 0, 1, ...` until a mismatch,
/// until `d == cap`, or until `hit(a+d, b+d)` holds (checked before comparing).
#[inline]
pub(crate) fn extend(
    text: &Text,
    a: usize,
    b: usize,
    cap: usize,
    hit: impl Fn(usize, usize) -> bool,
    stats: &mut QueryStats,
) -> (usize, Stop) {
    let s = text.symbols();
    let n = s.len();
    let mut d = 0;
    loop {
        if d == cap {
            return (d, Stop::Cap);
        }
        let (x, y) = (a + d, b + d);
        if hit(x, y) {
            return (d, Stop::Hit);
        }
        stats.char_cmps += 1;
        if x >= n || y >= n || s[x] != s[y] {
            return (d, Stop::Mismatch);
        }
        d += 1;
    }
}
