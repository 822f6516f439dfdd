use super::arrays::{build_isa, build_lcp_kasai};
use super::rmq::RmqIndex;
use super::sais::build_sa_int;
use crate::error::Result;
use crate::lce::{LceQuery, StructureKind};
use crate::stats::{BuildStats, QueryStats};
use crate::text::Text;

/// O(n)-space, O(1)-query LCE via SA, ISA, LCP and RMQ.
#[derive(Debug, Clone)]
pub struct BaselineIndex<'a> {
    text: &'a Text,
    sa: Vec<usize>,
    isa: Vec<usize>,
    lcp: RmqIndex,
    stats: BuildStats,
}

impl<'a> BaselineIndex<'a> {
    pub fn build(text: &'a Text) -> Self {
        let n = text.len();
        let sa = build_sa_int(text.symbols());
        let isa = build_isa(&sa);
        let lcp = build_lcp_kasai(text.symbols(), &sa, &isa);
        let lcp = RmqIndex::new(lcp);
        let mut stats = BuildStats::default();
        // SA-IS, inversion and Kasai are each linear; Kasai compares < 2n symbols.
        stats.ops(4 * n);
        stats.observe_live(2 * n + lcp.entries());
        Self::from_parts(text, sa, isa, lcp, stats)
    }

    pub(crate) fn from_parts(
        text: &'a Text,
        sa: Vec<usize>,
        isa: Vec<usize>,
        lcp: RmqIndex,
        stats: BuildStats,
    ) -> Self {
        BaselineIndex {
            text,
            sa,
            isa,
            lcp,
            stats,
        }
    }

    pub fn sa(&self) -> &[usize] {
        &self.sa
    }

    pub fn isa(&self) -> &[usize] {
        &self.isa
    }

    pub fn lcp(&self) -> &[usize] {
        self.lcp.values()
    }

    /// `lcp(i, j) = LCP[rmq(i'+1, j')]` with `i' < j'` the ranks of `i` and `j`.
    pub fn baseline_lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        self.text.check_position(i)?;
        self.text.check_position(j)?;
        if i == j {
            return Ok(self.text.len() - i);
        }
        let (a, b) = (self.isa[i], self.isa[j]);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        stats.rmq_calls += 1;
        Ok(self.lcp.min_value(lo + 1, hi))
    }
}

impl LceQuery for BaselineIndex<'_> {
    fn lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        self.baseline_lce(i, j, stats)
    }

    fn text(&self) -> &Text {
        self.text
    }

    fn kind(&self) -> StructureKind {
        StructureKind::Baseline
    }

    fn tau(&self) -> usize {
        1
    }

    fn table_entries(&self) -> usize {
        self.sa.len() + self.isa.len() + self.lcp.entries()
    }

    fn build_stats(&self) -> &BuildStats {
        &self.stats
    }
}
