//! Sparse suffix and LCP arrays over two evenly spaced position sets, and
//! the driver producing them for every second offset in turn.

use std::cmp::Ordering;

use super::meta::{build_ca, cmp_blocks, extend_ca_prev_offset, meta_len, CharSortArray};
use crate::error::{LceError, Result};
use crate::stats::BuildStats;
use crate::suffix::{build_isa, build_lcp_kasai, build_sa_int, RmqIndex};
use crate::text::Text;

/// `SSA` and `SLCP` over `P ∪ Q`, where `P` and `Q` are the positions
/// congruent to `p` and `q` modulo `tau`, with the sparse inverse and an RMQ
/// over the lcp values.
#[derive(Debug, Clone)]
pub struct PairRound {
    pub tau: usize,
    pub p: usize,
    pub q: usize,
    pub ssa: Vec<usize>,
    slcp: RmqIndex,
    x_p: Vec<usize>,
    x_q: Vec<usize>,
}

impl PairRound {
    /// `slcp[r]` is the lcp of `ssa[r-1]` and `ssa[r]`; `slcp[0] = 0`.
    #[inline]
    pub fn slcp(&self) -> &[usize] {
        self.slcp.values()
    }

    pub fn rmq(&self) -> &RmqIndex {
        &self.slcp
    }

    /// Rank of `pos` in `ssa`, if `pos` belongs to `P ∪ Q`.
    #[inline]
    pub fn rank(&self, pos: usize) -> Option<usize> {
        let idx = pos / self.tau;
        if pos % self.tau == self.p {
            self.x_p.get(idx).copied()
        } else if pos % self.tau == self.q {
            self.x_q.get(idx).copied()
        } else {
            None
        }
    }

    /// lcp of two members of `P ∪ Q` in O(1).
    pub fn lcp(&self, n: usize, a: usize, b: usize) -> Option<usize> {
        let (ra, rb) = (self.rank(a)?, self.rank(b)?);
        Some(match ra.cmp(&rb) {
            Ordering::Equal => n - a,
            Ordering::Less => self.slcp.min_value(ra + 1, rb),
            Ordering::Greater => self.slcp.min_value(rb + 1, ra),
        })
    }

    /// Machine words held by the round.
    pub fn entries(&self) -> usize {
        self.ssa.len() + self.slcp.entries() + self.x_p.len() + self.x_q.len()
    }
}

/// Builds the round for offsets `p` and `q` from their sort arrays.
///
/// The meta-strings of both offsets are joined around a separator smaller
/// than every meta-character, renamed to dense ranks, and suffix sorted; the
/// separator suffix (always first) is dropped and meta indices are mapped
/// back to text positions. Meta-level lcps are scaled by `tau` and extended
/// by at most `tau` direct comparisons.
pub fn build_pair_round(
    text: &Text,
    tau: usize,
    ca_p: &CharSortArray,
    ca_q: &CharSortArray,
    stats: &mut BuildStats,
) -> Result<PairRound> {
    text.check_tau(tau)?;
    let n = text.len();
    for ca in [ca_p, ca_q] {
        if ca.offset >= tau {
            return Err(LceError::InvalidOffset {
                offset: ca.offset,
                tau,
            });
        }
        if ca.order.len() != meta_len(n, tau, ca.offset) {
            return Err(LceError::Inconsistent(format!(
                "sort array for offset {} has {} entries",
                ca.offset,
                ca.order.len()
            )));
        }
    }
    Ok(pair_round(text, tau, ca_p, ca_q, stats))
}

pub(crate) fn pair_round(
    text: &Text,
    tau: usize,
    ca_p: &CharSortArray,
    ca_q: &CharSortArray,
    stats: &mut BuildStats,
) -> PairRound {
    let n = text.len();
    let (p, q) = (ca_p.offset, ca_q.offset);
    let len_p = ca_p.order.len();
    let same = p == q;
    let len_q = if same { 0 } else { ca_q.order.len() };
    let q_base = len_p + 1;
    let w_len = if same { len_p } else { len_p + 1 + len_q };

    // Start position in the text of the meta-character at index `k` of w'.
    let start = |k: usize| -> usize {
        if k < len_p {
            p + tau * k
        } else {
            q + tau * (k - q_base)
        }
    };

    // Merge both sort arrays into one over w' (separator excluded).
    let mut ops = 0usize;
    let mut merged: Vec<usize> = Vec::with_capacity(len_p + len_q);
    if same {
        merged.extend_from_slice(&ca_p.order);
    } else {
        let (mut a, mut b) = (0, 0);
        while a < len_p && b < len_q {
            let ka = ca_p.order[a];
            let kb = q_base + ca_q.order[b];
            if cmp_blocks(text, tau, start(ka), start(kb), &mut ops) != Ordering::Greater {
                merged.push(ka);
                a += 1;
            } else {
                merged.push(kb);
                b += 1;
            }
        }
        merged.extend_from_slice(&ca_p.order[a..]);
        merged.extend(ca_q.order[b..].iter().map(|&k| q_base + k));
    }

    // Rename to dense ranks; the separator takes rank 1.
    let mut renamed = vec![0u32; w_len];
    let mut rank: u32 = if same { 0 } else { 1 };
    if !same {
        renamed[len_p] = 1;
    }
    for (idx, &k) in merged.iter().enumerate() {
        if idx == 0
            || cmp_blocks(text, tau, start(merged[idx - 1]), start(k), &mut ops) != Ordering::Equal
        {
            rank += 1;
        }
        renamed[k] = rank;
    }
    stats.observe_live(ca_p.order.len() + ca_q.order.len() + merged.len() + renamed.len());
    drop(merged);

    let sa = build_sa_int(&renamed);
    let isa = build_isa(&sa);
    let meta_lcp = build_lcp_kasai(&renamed, &sa, &isa);
    stats.observe_live(
        ca_p.order.len() + ca_q.order.len() + renamed.len() + sa.len() + isa.len() + meta_lcp.len(),
    );
    ops += 3 * w_len;
    drop(isa);
    drop(renamed);

    let skip = usize::from(!same);
    debug_assert!(same || sa[0] == len_p);
    let m = w_len - skip;
    let mut ssa = Vec::with_capacity(m);
    let mut slcp = Vec::with_capacity(m);
    let s = text.symbols();
    for r in skip..w_len {
        let pos = start(sa[r]);
        let l = if r == skip {
            0
        } else {
            let prev = *ssa.last().unwrap();
            let mut l = tau * meta_lcp[r];
            let stop = l + tau;
            while l < stop && pos + l < n && prev + l < n && s[pos + l] == s[prev + l] {
                l += 1;
            }
            ops += l + 1 - tau * meta_lcp[r];
            l
        };
        ssa.push(pos);
        slcp.push(l);
    }
    drop(sa);
    drop(meta_lcp);

    let mut x_p = vec![usize::MAX; len_p];
    let mut x_q = vec![usize::MAX; len_q];
    for (r, &pos) in ssa.iter().enumerate() {
        if pos % tau == p {
            x_p[pos / tau] = r;
        } else {
            x_q[pos / tau] = r;
        }
    }
    ops += 2 * m;
    stats.ops(ops);

    PairRound {
        tau,
        p,
        q,
        ssa,
        slcp: RmqIndex::new(slcp),
        x_p,
        x_q,
    }
}

/// The round sequence for `q = p, p-1, ..., p-tau+1 (mod tau)` with
/// `p = (n-1) mod tau`.
///
/// Only the fixed sort array of `p` and the current one of `q` are retained
/// between rounds; each new `q` array derives from the previous one.
pub struct Rounds<'a> {
    text: &'a Text,
    tau: usize,
    ca_p: CharSortArray,
    ca_q: Option<CharSortArray>,
    emitted: usize,
    stats: BuildStats,
}

impl<'a> Rounds<'a> {
    pub fn new(text: &'a Text, tau: usize) -> Result<Self> {
        text.check_tau(tau)?;
        let p = (text.len() - 1) % tau;
        let mut stats = BuildStats::default();
        let ca_p = build_ca(text, tau, p, &mut stats)?;
        Ok(Rounds {
            text,
            tau,
            ca_p,
            ca_q: None,
            emitted: 0,
            stats,
        })
    }

    pub fn p(&self) -> usize {
        self.ca_p.offset
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn stats(&self) -> &BuildStats {
        &self.stats
    }

    /// Words held between rounds (the two sort arrays).
    pub fn retained_entries(&self) -> usize {
        self.ca_p.len() + self.ca_q.as_ref().map_or(0, CharSortArray::len)
    }

    /// Adds a consumer's live words to the peak observed for the current round.
    pub fn observe_consumer(&mut self, words: usize) {
        let base = self.retained_entries();
        self.stats.observe_live(base + words);
    }

    pub fn charge(&mut self, ops: u64) {
        self.stats.symbol_ops += ops;
    }

    pub fn into_stats(self) -> BuildStats {
        self.stats
    }
}

impl Iterator for Rounds<'_> {
    type Item = PairRound;

    fn next(&mut self) -> Option<PairRound> {
        if self.emitted == self.tau {
            return None;
        }
        if self.emitted > 0 {
            let prev = self.ca_q.as_ref().unwrap_or(&self.ca_p);
            let next = extend_ca_prev_offset(self.text, self.tau, prev, &mut self.stats)
                .expect("sort array offsets stay in range");
            self.ca_q = Some(next);
        }
        let ca_q = self.ca_q.as_ref().unwrap_or(&self.ca_p);
        let round = pair_round(self.text, self.tau, &self.ca_p, ca_q, &mut self.stats);
        let live = self.retained_entries() + round.entries();
        self.stats.observe_live(live);
        self.stats.rounds += 1;
        self.emitted += 1;
        Some(round)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.tau - self.emitted;
        (left, Some(left))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::QueryStats;
    use crate::text::naive_lce;

    fn direct(text: &Text, positions: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let s = text.symbols();
        let mut ssa = positions.to_vec();
        ssa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        let mut st = QueryStats::new();
        let mut slcp = vec![0; ssa.len()];
        for r in 1..ssa.len() {
            slcp[r] = naive_lce(text, ssa[r - 1], ssa[r], &mut st).unwrap();
        }
        (ssa, slcp)
    }

    fn round_for(text: &Text, tau: usize, p: usize, q: usize) -> PairRound {
        let mut st = BuildStats::default();
        let cp = build_ca(text, tau, p, &mut st).unwrap();
        let cq = build_ca(text, tau, q, &mut st).unwrap();
        build_pair_round(text, tau, &cp, &cq, &mut st).unwrap()
    }

    #[test]
    fn banana_full_cover() {
        let t = Text::normalize(b"banana");
        let r = round_for(&t, 2, 0, 1);
        assert_eq!(r.ssa, vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(r.slcp(), &[0, 1, 3, 0, 0, 2]);
    }

    #[test]
    fn banana_tau_three() {
        let t = Text::normalize(b"banana");
        let r = round_for(&t, 3, 2, 1);
        assert_eq!(r.ssa, vec![5, 1, 4, 2]);
        assert_eq!(r.slcp(), &[0, 1, 0, 2]);
        assert_eq!(r.rank(4), Some(2));
        assert_eq!(r.rank(0), None);
        assert_eq!(r.lcp(6, 4, 2), Some(2));
        assert_eq!(r.lcp(6, 1, 1), Some(5));
    }

    #[test]
    fn equal_offsets_collapse() {
        let t = Text::normalize(b"banana");
        let r = round_for(&t, 2, 1, 1);
        assert_eq!(r.ssa, vec![5, 3, 1]);
        assert_eq!(r.slcp(), &[0, 1, 3]);
    }

    #[test]
    fn rejects_mismatched_arrays() {
        let t = Text::normalize(b"banana");
        let mut st = BuildStats::default();
        let cp = build_ca(&t, 2, 0, &mut st).unwrap();
        let bad = CharSortArray {
            offset: 1,
            order: vec![0],
        };
        assert!(build_pair_round(&t, 2, &cp, &bad, &mut st).is_err());
        assert!(build_pair_round(&t, 3, &cp, &cp, &mut st).is_err());
    }

    #[test]
    fn rounds_banana() {
        let t = Text::normalize(b"banana");
        let rounds: Vec<_> = Rounds::new(&t, 2).unwrap().collect();
        assert_eq!(rounds.iter().map(|r| r.q).collect::<Vec<_>>(), vec![1, 0]);
        let mut covered: Vec<usize> = rounds
            .iter()
            .flat_map(|r| r.ssa.iter().copied().filter(|pos| pos % 2 == r.q))
            .collect();
        covered.sort();
        assert_eq!(covered, vec![0, 1, 2, 3, 4, 5]);

        let one: Vec<_> = Rounds::new(&t, 1).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].ssa, vec![5, 3, 1, 0, 4, 2]);
    }

    #[test]
    fn every_round_matches_direct_sort() {
        for raw in [
            &b"mississippi"[..],
            b"abaababaabaab",
            b"aaaaaaaaaaaaaaaaaa",
            b"zyxwvutsrqponm",
            b"abcabcabcabcab",
        ] {
            let t = Text::normalize(raw);
            let n = t.len();
            for tau in 1..=n {
                for r in Rounds::new(&t, tau).unwrap() {
                    let mut set: Vec<usize> =
                        (0..n).filter(|i| i % tau == r.p || i % tau == r.q).collect();
                    set.dedup();
                    let (ssa, slcp) = direct(&t, &set);
                    assert_eq!(r.ssa, ssa, "{raw:?} tau={tau} q={}", r.q);
                    assert_eq!(r.slcp(), &slcp[..]);
                    for (rank, &pos) in r.ssa.iter().enumerate() {
                        assert_eq!(r.rank(pos), Some(rank));
                    }
                }
            }
        }
    }
}
