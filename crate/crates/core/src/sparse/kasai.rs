use crate::error::{LceError, Result};
use crate::stats::BuildStats;
use crate::text::Text;

/// Sparse inverse of an evenly spaced sparse suffix array: `x[pos / tau]` is
/// the rank of `pos`.
pub fn sparse_isa_rep(ssa: &[usize], tau: usize, offset: usize) -> Result<Vec<usize>> {
    if tau == 0 || offset >= tau {
        return Err(LceError::InvalidOffset { offset, tau });
    }
    let mut x = vec![usize::MAX; ssa.len()];
    for (rank, &pos) in ssa.iter().enumerate() {
        if pos % tau != offset || pos / tau >= ssa.len() {
            return Err(LceError::OffGrid {
                pos,
                step: tau,
                offset,
            });
        }
        let slot = &mut x[pos / tau];
        if *slot != usize::MAX {
            return Err(LceError::DuplicatePosition { pos });
        }
        *slot = rank;
    }
    Ok(x)
}

/// Kasai's scan restricted to one residue class: positions are visited in
/// text order, and the carried lcp drops by at most `tau` per step.
pub fn sparse_kasai(
    text: &Text,
    ssa: &[usize],
    x: &[usize],
    tau: usize,
    stats: &mut BuildStats,
) -> Result<Vec<usize>> {
    if ssa.len() != x.len() {
        return Err(LceError::Inconsistent(
            "sparse inverse and suffix array differ in length".into(),
        ));
    }
    let m = ssa.len();
    let mut slcp = vec![0; m];
    let Some(&first) = ssa.first() else {
        return Ok(slcp);
    };
    let offset = first % tau;
    let s = text.symbols();
    let n = s.len();
    let mut h: usize = 0;
    let mut ops = 0;
    for idx in 0..m {
        let pos = offset + tau * idx;
        let r = x[idx];
        if r == 0 {
            h = 0;
            continue;
        }
        let prev = ssa[r - 1];
        while pos + h < n && prev + h < n && s[pos + h] == s[prev + h] {
            h += 1;
            ops += 1;
        }
        ops += 1;
        slcp[r] = h;
        h = h.saturating_sub(tau);
    }
    stats.ops(ops);
    Ok(slcp)
}
