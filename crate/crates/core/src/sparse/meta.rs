//! Meta-characters and their character-sort arrays.

use std::cmp::Ordering;

use crate::error::{LceError, Result};
use crate::stats::BuildStats;
use crate::text::Text;

/// The text read in blocks of `tau` symbols starting at `offset`; block `i`
/// covers `w[offset + tau*i .. offset + tau*(i+1) - 1]`, zero-padded past `n`.
#[derive(Debug, Clone, Copy)]
pub struct MetaView<'a> {
    text: &'a Text,
    tau: usize,
    offset: usize,
}

impl<'a> MetaView<'a> {
    pub fn new(text: &'a Text, tau: usize, offset: usize) -> Result<Self> {
        text.check_tau(tau)?;
        if offset >= tau {
            return Err(LceError::InvalidOffset { offset, tau });
        }
        Ok(MetaView { text, tau, offset })
    }

    #[inline]
    pub fn len(&self) -> usize {
        meta_len(self.text.len(), self.tau, self.offset)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn start(&self, i: usize) -> usize {
        self.offset + self.tau * i
    }

    /// Symbol `r` (0-based) of meta-character `i`.
    #[inline]
    pub fn symbol(&self, i: usize, r: usize) -> u32 {
        self.text.char_at(self.start(i) + r)
    }

    pub fn cmp(&self, a: usize, b: usize) -> Ordering {
        cmp_blocks(self.text, self.tau, self.start(a), self.start(b), &mut 0)
    }
}

#[inline]
pub(crate) fn meta_len(n: usize, tau: usize, offset: usize) -> usize {
    if offset >= n {
        0
    } else {
        (n - offset).div_ceil(tau)
    }
}

/// Compares the `tau`-symbol blocks starting at text positions `a` and `b`,
/// counting compared symbols into `ops`.
#[inline]
pub(crate) fn cmp_blocks(text: &Text, tau: usize, a: usize, b: usize, ops: &mut usize) -> Ordering {
    for r in 0..tau {
        *ops += 1;
        match text.char_at(a + r).cmp(&text.char_at(b + r)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Meta-character indices (relative to `offset`) in non-decreasing
/// meta-character order. Equal meta-characters may appear in any order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSortArray {
    pub offset: usize,
    pub order: Vec<usize>,
}

impl CharSortArray {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Checks the sortedness invariant against the text.
    pub fn is_valid_for(&self, text: &Text, tau: usize) -> bool {
        let Ok(view) = MetaView::new(text, tau, self.offset) else {
            return false;
        };
        let len = view.len();
        if self.order.len() != len {
            return false;
        }
        let mut seen = vec![false; len];
        for &i in &self.order {
            if i >= len || std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        self.order
            .windows(2)
            .all(|w| view.cmp(w[0], w[1]) != Ordering::Greater)
    }
}

/// Radix digit width: `max(1, floor(log2(n / tau)))` bits, so a pass never
/// uses more than `n / tau` buckets.
pub(crate) fn digit_bits(n: usize, tau: usize) -> u32 {
    let ratio = (n / tau).max(1);
    (usize::BITS - 1 - ratio.leading_zeros()).max(1)
}

fn symbol_bits(sigma: u32) -> u32 {
    (u32::BITS - sigma.leading_zeros()).max(1)
}

/// Stable LSD passes over one symbol per item, `bits` at a time, low digits first.
/// `key(item)` yields the symbol for an item of `order`.
pub(crate) fn radix_by_symbol(
    order: &mut Vec<usize>,
    scratch: &mut Vec<usize>,
    counts: &mut Vec<usize>,
    sym_bits: u32,
    digit: u32,
    key: impl Fn(usize) -> u32,
    stats: &mut BuildStats,
) {
    let mut shift = 0;
    while shift < sym_bits {
        let width = digit.min(sym_bits - shift);
        let buckets = 1usize << width;
        let mask = (buckets - 1) as u32;
        counts.clear();
        counts.resize(buckets + 1, 0);
        for &item in order.iter() {
            counts[((key(item) >> shift) & mask) as usize + 1] += 1;
        }
        for b in 1..=buckets {
            counts[b] += counts[b - 1];
        }
        scratch.clear();
        scratch.resize(order.len(), 0);
        for &item in order.iter() {
            let d = ((key(item) >> shift) & mask) as usize;
            scratch[counts[d]] = item;
            counts[d] += 1;
        }
        std::mem::swap(order, scratch);
        stats.ops(order.len());
        shift += width;
    }
}

/// Sorts the meta-characters of offset `p` by LSD radix sort, symbol `tau-1`
/// first.
pub fn build_ca(text: &Text, tau: usize, p: usize, stats: &mut BuildStats) -> Result<CharSortArray> {
    let view = MetaView::new(text, tau, p)?;
    let len = view.len();
    let digit = digit_bits(text.len(), tau);
    let sym_bits = symbol_bits(text.sigma());

    let mut order: Vec<usize> = (0..len).collect();
    let mut scratch = Vec::with_capacity(len);
    let mut counts = Vec::new();
    for r in (0..tau).rev() {
        radix_by_symbol(
            &mut order,
            &mut scratch,
            &mut counts,
            sym_bits,
            digit,
            |i| view.symbol(i, r),
            stats,
        );
    }
    stats.observe_live(order.len() + scratch.len() + counts.len());
    Ok(CharSortArray { offset: p, order })
}

/// Derives the sort array of offset `(p' - 1) mod tau` from the one at `p'`
/// by prepending one symbol to every meta-character and continuing the radix
/// sort on it.
///
/// The order is handled in absolute start positions: every start `s >= 1`
/// becomes `s - 1`; when offset `p` has one more meta-character than `p'`
/// (its block starts at `n - 1`), that start is put first since its
/// `p'`-block is all padding.
pub fn extend_ca_prev_offset(
    text: &Text,
    tau: usize,
    ca: &CharSortArray,
    stats: &mut BuildStats,
) -> Result<CharSortArray> {
    let n = text.len();
    let prev = MetaView::new(text, tau, ca.offset)?;
    if ca.order.len() != prev.len() {
        return Err(LceError::Inconsistent(format!(
            "sort array has {} entries, offset {} has {} meta-characters",
            ca.order.len(),
            ca.offset,
            prev.len()
        )));
    }
    let p = (ca.offset + tau - 1) % tau;
    let len = meta_len(n, tau, p);

    let mut order: Vec<usize> = Vec::with_capacity(len);
    if (n - 1) % tau == p {
        order.push(n - 1);
    }
    order.extend(
        ca.order
            .iter()
            .map(|&i| prev.start(i))
            .filter(|&s| s >= 1)
            .map(|s| s - 1),
    );
    debug_assert_eq!(order.len(), len);
    stats.ops(ca.order.len());

    let mut scratch = Vec::with_capacity(len);
    let mut counts = Vec::new();
    radix_by_symbol(
        &mut order,
        &mut scratch,
        &mut counts,
        symbol_bits(text.sigma()),
        digit_bits(n, tau),
        |s| text.char_at(s),
        stats,
    );
    for s in order.iter_mut() {
        *s = (*s - p) / tau;
    }
    stats.observe_live(ca.order.len() + order.len() + scratch.len() + counts.len());
    Ok(CharSortArray { offset: p, order })
}
