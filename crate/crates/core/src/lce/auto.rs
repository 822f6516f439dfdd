use super::combined::{build_combined, CombinedLceIndex};
use super::grid::ceil_log2;
use super::new::{build_new_index, NewLceIndex};
use super::{LceQuery, StructureKind};
use crate::error::Result;
use crate::stats::{BuildStats, QueryStats};
use crate::text::Text;

/// The new structure for `tau <= floor(sqrt n)` (and `tau * ceil(log2 n) <= n`),
/// the combined one otherwise. `tau = 1` is served by the full suffix array.
#[derive(Debug, Clone)]
pub enum AutoIndex<'a> {
    New(NewLceIndex<'a>),
    Combined(CombinedLceIndex<'a>),
}

pub fn build_auto(text: &Text, tau: usize) -> Result<AutoIndex<'_>> {
    text.check_tau(tau)?;
    let n = text.len();
    if tau == 1 || prefers_new(n, tau) {
        Ok(AutoIndex::New(build_new_index(text, tau)?))
    } else {
        Ok(AutoIndex::Combined(build_combined(text, tau)?))
    }
}

pub(crate) fn prefers_new(n: usize, tau: usize) -> bool {
    tau <= isqrt(n) && tau * ceil_log2(n).max(1) <= n
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl<'a> AutoIndex<'a> {
    fn inner(&self) -> &dyn LceQuery {
        match self {
            AutoIndex::New(x) => x,
            AutoIndex::Combined(x) => x,
        }
    }
}

impl LceQuery for AutoIndex<'_> {
    fn lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        self.inner().lce(i, j, stats)
    }

    fn text(&self) -> &Text {
        self.inner().text()
    }

    fn kind(&self) -> StructureKind {
        self.inner().kind()
    }

    fn tau(&self) -> usize {
        self.inner().tau()
    }

    fn table_entries(&self) -> usize {
        self.inner().table_entries()
    }

    fn build_stats(&self) -> &BuildStats {
        self.inner().build_stats()
    }
}
