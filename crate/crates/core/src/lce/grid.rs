use crate::error::Result;
use crate::text::Text;

/// `ceil(log2 x)` for `x >= 1`; `0` for `x <= 1`.
#[inline]
pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// `ceil(log2(n / d))`: the least `L` with `d * 2^L >= n`.
#[inline]
pub fn ceil_log2_ratio(n: usize, d: usize) -> usize {
    let mut l = 0;
    while d << l < n {
        l += 1;
    }
    l
}

/// Sampled positions `{ i < n : i mod t = p }` with `p = (n-1) mod t`, so the
/// last position is always sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingGrid {
    pub n: usize,
    pub tau: usize,
    pub t: usize,
    pub p: usize,
}

impl SamplingGrid {
    pub fn new(n: usize, tau: usize, t: usize) -> Self {
        debug_assert!(n >= 1 && t >= 1 && t % tau == 0);
        SamplingGrid {
            n,
            tau,
            t,
            p: (n - 1) % t,
        }
    }

    /// `t = tau * ceil(log2 tau)`, raised to `tau` when the logarithm is 0.
    pub fn for_new(n: usize, tau: usize) -> Self {
        Self::new(n, tau, tau * ceil_log2(tau).max(1))
    }

    /// `t = tau * ceil(log2(n / tau))`, raised to `tau` when the logarithm is 0.
    pub fn for_tree(n: usize, tau: usize) -> Self {
        Self::new(n, tau, tau * ceil_log2_ratio(n, tau).max(1))
    }

    #[inline]
    pub fn is_sampled(&self, i: usize) -> bool {
        i < self.n && i % self.t == self.p
    }

    /// Distance from `i` to the nearest sampled position at or after `i`.
    #[inline]
    pub fn distance(&self, i: usize) -> usize {
        (self.p + self.t - i % self.t) % self.t
    }

    /// The class `k` with `distance(i)` in `[2^(k-1) .. 2^k - 1]`, or `None`
    /// for sampled positions.
    #[inline]
    pub fn class(&self, i: usize) -> Option<usize> {
        match self.distance(i) {
            0 => None,
            d => Some((usize::BITS - d.leading_zeros()) as usize),
        }
    }

    /// Number of distance classes, `ceil(log2 t)`.
    #[inline]
    pub fn classes(&self) -> usize {
        ceil_log2(self.t)
    }

    #[inline]
    pub fn sampled_count(&self) -> usize {
        (self.n - 1 - self.p) / self.t + 1
    }

    #[inline]
    pub fn sampled_index(&self, i: usize) -> usize {
        debug_assert!(self.is_sampled(i));
        (i - self.p) / self.t
    }

    #[inline]
    pub fn sampled_at(&self, idx: usize) -> usize {
        self.p + idx * self.t
    }
}

/// Class of position `i` in the grid: `Ok(None)` when `i` is sampled.
pub fn classify_sk(text: &Text, grid: &SamplingGrid, i: usize) -> Result<Option<usize>> {
    text.check_position(i)?;
    Ok(grid.class(i))
}
