use std::cmp::Ordering;

use super::grid::SamplingGrid;
use crate::error::Result;
use crate::sparse::{sparse_isa_rep, PairRound};
use crate::suffix::RmqIndex;

/// Sparse suffix array, sparse inverse and RMQ-backed sparse LCP over the
/// sampled positions: O(1) lcp between any two sampled positions.
#[derive(Debug, Clone)]
pub struct SampledSuffixes {
    t: usize,
    p: usize,
    ssa: Vec<usize>,
    x: Vec<usize>,
    slcp: RmqIndex,
}

impl SampledSuffixes {
    /// Filters the first round (`q = p`), whose positions include every
    /// sampled one, down to the grid.
    pub(crate) fn from_round(round: &PairRound, grid: &SamplingGrid) -> Self {
        debug_assert_eq!(round.p, round.q);
        let mut ssa = Vec::with_capacity(grid.sampled_count());
        let mut slcp = Vec::with_capacity(grid.sampled_count());
        let mut prev_rank = 0;
        for (rank, &pos) in round.ssa.iter().enumerate() {
            if !grid.is_sampled(pos) {
                continue;
            }
            let l = if ssa.is_empty() {
                0
            } else {
                round.rmq().min_value(prev_rank + 1, rank)
            };
            ssa.push(pos);
            slcp.push(l);
            prev_rank = rank;
        }
        let x = sparse_isa_rep(&ssa, grid.t, grid.p).expect("grid positions are evenly spaced");
        SampledSuffixes {
            t: grid.t,
            p: grid.p,
            ssa,
            x,
            slcp: RmqIndex::new(slcp),
        }
    }

    pub(crate) fn from_parts(grid: &SamplingGrid, ssa: Vec<usize>, slcp: Vec<usize>) -> Result<Self> {
        let x = sparse_isa_rep(&ssa, grid.t, grid.p)?;
        Ok(SampledSuffixes {
            t: grid.t,
            p: grid.p,
            ssa,
            x,
            slcp: RmqIndex::new(slcp),
        })
    }

    pub fn ssa(&self) -> &[usize] {
        &self.ssa
    }

    pub fn slcp(&self) -> &[usize] {
        self.slcp.values()
    }

    /// lcp of two sampled positions.
    #[inline]
    pub fn lcp(&self, n: usize, a: usize, b: usize) -> usize {
        let ra = self.x[(a - self.p) / self.t];
        let rb = self.x[(b - self.p) / self.t];
        match ra.cmp(&rb) {
            Ordering::Equal => n - a,
            Ordering::Less => self.slcp.min_value(ra + 1, rb),
            Ordering::Greater => self.slcp.min_value(rb + 1, ra),
        }
    }

    pub fn entries(&self) -> usize {
        self.ssa.len() + self.x.len() + self.slcp.entries()
    }
}
