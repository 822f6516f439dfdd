//! Lexicographic-neighbour sweeps over a suffix order.
//!
//! For every query element the sweep reports, on each side, the candidate
//! with the longest lcp and, among those, the smallest text position. A
//! monotone stack groups earlier candidates by their current lcp with the
//! scan position; groups with lcp at least the next adjacent lcp collapse
//! into one, keeping the minimum position. The top group is then exactly
//! the set of candidates tied for the longest lcp on that side.

const OPEN: usize = usize::MAX;

#[derive(Debug, Default)]
pub(crate) struct Sweeper {
    stack: Vec<(usize, usize)>,
}

impl Sweeper {
    /// `order` lists text positions in suffix order and `adj[x]` is the lcp
    /// of `order[x-1]` and `order[x]`. `report(query, candidate, lcp)` is
    /// called at most twice per query. Returns the number of element visits.
    pub(crate) fn run(
        &mut self,
        order: &[usize],
        adj: &[usize],
        is_query: impl Fn(usize) -> bool,
        is_cand: impl Fn(usize) -> bool,
        mut report: impl FnMut(usize, usize, usize),
    ) -> usize {
        let len = order.len();
        debug_assert_eq!(adj.len(), len);

        self.stack.clear();
        for x in 0..len {
            if x > 0 {
                self.step(order[x - 1], adj[x], &is_cand);
            }
            if is_query(order[x]) {
                if let Some(&(l, m)) = self.stack.last() {
                    report(order[x], m, l);
                }
            }
        }

        self.stack.clear();
        for x in (0..len).rev() {
            if x + 1 < len {
                self.step(order[x + 1], adj[x + 1], &is_cand);
            }
            if is_query(order[x]) {
                if let Some(&(l, m)) = self.stack.last() {
                    report(order[x], m, l);
                }
            }
        }
        self.stack.clear();
        2 * len
    }

    #[inline]
    fn step(&mut self, passed: usize, h: usize, is_cand: &impl Fn(usize) -> bool) {
        if is_cand(passed) {
            self.stack.push((OPEN, passed));
        }
        let mut merged = OPEN;
        while let Some(&(l, m)) = self.stack.last() {
            if l < h {
                break;
            }
            self.stack.pop();
            merged = merged.min(m);
        }
        if merged != OPEN {
            self.stack.push((h, merged));
        }
    }
}

/// Keeps the better of the stored and offered `(position, lcp)`: longer lcp,
/// then smaller position. `none` marks an empty slot.
#[inline]
pub(crate) fn offer(pi: &mut usize, lval: &mut usize, none: usize, cand: usize, l: usize) {
    if *pi == none || l > *lval || (l == *lval && cand < *pi) {
        *pi = cand;
        *lval = l;
    }
}
