//! Constant-time range-minimum queries in linear space.
//!
//! The array is cut into 64-wide blocks. Inside a block, `masks[r]` holds the
//! positions of the min-stack ending at `r` (strictly greater values popped),
//! so the leftmost minimum of `[l..=r]` is the lowest stack bit at or after
//! `l`. A sparse table over the block minima answers the whole-block middle
//! part of longer ranges.

use crate::error::{LceError, Result};

const BLOCK: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmqIndex {
    values: Vec<usize>,
    masks: Vec<u64>,
    /// `blocks[k][b]`: argmin over blocks `b .. b + 2^k`.
    blocks: Vec<Vec<usize>>,
}

impl RmqIndex {
    pub fn new(values: Vec<usize>) -> Self {
        let n = values.len();
        let mut masks = vec![0u64; n];
        for start in (0..n).step_by(BLOCK) {
            let end = (start + BLOCK).min(n);
            let mut stack = 0u64;
            for r in start..end {
                while stack != 0 {
                    let top = 63 - stack.leading_zeros() as usize;
                    if values[start + top] > values[r] {
                        stack ^= 1 << top;
                    } else {
                        break;
                    }
                }
                stack |= 1 << (r - start);
                masks[r] = stack;
            }
        }

        let nblocks = n.div_ceil(BLOCK);
        let mut blocks = Vec::new();
        if nblocks > 0 {
            let level0: Vec<usize> = (0..nblocks)
                .map(|b| {
                    let end = ((b + 1) * BLOCK).min(n) - 1;
                    b * BLOCK + masks[end].trailing_zeros() as usize
                })
                .collect();
            blocks.push(level0);
            let mut k = 1;
            while (1 << k) <= nblocks {
                let prev = &blocks[k - 1];
                let half = 1 << (k - 1);
                let level: Vec<usize> = (0..=nblocks - (1 << k))
                    .map(|b| pick(&values, prev[b], prev[b + half]))
                    .collect();
                blocks.push(level);
                k += 1;
            }
        }
        RmqIndex {
            values,
            masks,
            blocks,
        }
    }

    #[inline]
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Machine words held by the index, the values included.
    pub fn entries(&self) -> usize {
        self.values.len() + self.masks.len() + self.blocks.iter().map(Vec::len).sum::<usize>()
    }

    /// Leftmost index of a minimum of `values[l..=r]`.
    pub fn query(&self, l: usize, r: usize) -> Result<usize> {
        if l > r || r >= self.values.len() {
            return Err(LceError::Inconsistent(format!(
                "rmq range [{l}..{r}] invalid for length {}",
                self.values.len()
            )));
        }
        Ok(self.argmin(l, r))
    }

    /// Minimum value of `values[l..=r]`; unchecked apart from slice bounds.
    #[inline]
    pub fn min_value(&self, l: usize, r: usize) -> usize {
        self.values[self.argmin(l, r)]
    }

    #[inline]
    pub(crate) fn argmin(&self, l: usize, r: usize) -> usize {
        debug_assert!(l <= r && r < self.values.len());
        let (bl, br) = (l / BLOCK, r / BLOCK);
        if bl == br {
            return self.in_block(l, r);
        }
        let mut best = self.in_block(l, bl * BLOCK + BLOCK - 1);
        if br > bl + 1 {
            let (lo, hi) = (bl + 1, br - 1);
            let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
            let x = self.blocks[k][lo];
            let y = self.blocks[k][hi + 1 - (1 << k)];
            best = pick(&self.values, best, pick(&self.values, x, y));
        }
        pick(&self.values, best, self.in_block(br * BLOCK, r))
    }

    #[inline]
    fn in_block(&self, l: usize, r: usize) -> usize {
        let start = l & !(BLOCK - 1);
        let m = self.masks[r] & (!0u64 << (l - start));
        start + m.trailing_zeros() as usize
    }
}

/// `a` must precede `b`; ties keep `a`.
#[inline]
fn pick(values: &[usize], a: usize, b: usize) -> usize {
    if values[b] < values[a] {
        b
    } else {
        a
    }
}
