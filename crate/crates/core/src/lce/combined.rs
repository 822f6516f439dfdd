use super::grid::{ceil_log2, ceil_log2_ratio, SamplingGrid};
use super::sk::{ClassBuilder, ClassIndex, Descent};
use super::tree::{Restriction, TreeBuilder, TreeLceIndex};
use super::{drive, LceQuery, StructureKind};
use crate::error::Result;
use crate::stats::{BuildStats, QueryStats, TraceStep};
use crate::text::Text;

/// Cutoff `2^(ceil(log2 t) - ceil(log2(n/t)))`, at least 1.
pub fn d_t(n: usize, t: usize) -> usize {
    1 << class_floor_exp(n, t)
}

fn class_floor_exp(n: usize, t: usize) -> usize {
    ceil_log2(t).saturating_sub(ceil_log2_ratio(n, t))
}

/// Class tables for every class plus the restricted interval tree, over
/// the grid `t = tau * ceil(log2(n / tau))`.
#[derive(Debug, Clone)]
pub struct CombinedLceIndex<'a> {
    text: &'a Text,
    tau: usize,
    dt: usize,
    k_lo: usize,
    pub(crate) classes: ClassIndex,
    pub(crate) tree: TreeLceIndex,
    stats: BuildStats,
}

pub fn build_combined(text: &Text, tau: usize) -> Result<CombinedLceIndex<'_>> {
    text.check_tau(tau)?;
    let grid = SamplingGrid::for_tree(text.len(), tau);
    let dt = d_t(grid.n, grid.t);
    let mut classes = ClassBuilder::new(grid);
    let mut tree = TreeBuilder::new(grid, Restriction::Dist(dt));
    let stats = drive(text, tau, &mut [&mut classes, &mut tree])?;
    Ok(CombinedLceIndex::assemble(text, tau, classes.finish(), tree.finish(), stats))
}

pub fn query_combined(
    index: &CombinedLceIndex<'_>,
    i: usize,
    j: usize,
    stats: &mut QueryStats,
) -> Result<usize> {
    index.lce(i, j, stats)
}

impl<'a> CombinedLceIndex<'a> {
    pub(crate) fn assemble(
        text: &'a Text,
        tau: usize,
        classes: ClassIndex,
        tree: TreeLceIndex,
        stats: BuildStats,
    ) -> Self {
        let grid = classes.grid;
        let dt = d_t(grid.n, grid.t);
        CombinedLceIndex {
            text,
            tau,
            dt,
            k_lo: class_floor_exp(grid.n, grid.t).max(1),
            classes,
            tree,
            stats,
        }
    }

    pub fn grid(&self) -> &SamplingGrid {
        &self.classes.grid
    }

    pub fn d_t(&self) -> usize {
        self.dt
    }

    /// Smallest class reduced through the tables before the tree takes over.
    pub fn class_floor(&self) -> usize {
        self.k_lo
    }

    pub fn tree(&self) -> &TreeLceIndex {
        &self.tree
    }

    pub fn entry(&self, i: usize, k: usize) -> Option<(usize, usize)> {
        let c = &self.classes;
        if !c.grid.is_sampled(i) || k == 0 || k > c.tables.classes() {
            return None;
        }
        c.tables.get(c.grid.sampled_index(i), k)
    }
}

impl LceQuery for CombinedLceIndex<'_> {
    fn lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        self.text.check_position(i)?;
        self.text.check_position(j)?;
        let c = &self.classes;
        match c.descend(self.text, i, j, 0, usize::MAX, self.k_lo, stats) {
            Descent::Done(l) => Ok(l),
            Descent::Handoff {
                sampled,
                other,
                acc,
                cap,
            } => {
                stats.record(TraceStep::Handoff {
                    sampled_dist: c.grid.distance(sampled),
                    other_dist: c.grid.distance(other),
                });
                Ok(self
                    .tree
                    .descend_restricted(self.text, c, sampled, other, acc, cap, stats))
            }
        }
    }

    fn text(&self) -> &Text {
        self.text
    }

    fn kind(&self) -> StructureKind {
        StructureKind::Combined
    }

    fn tau(&self) -> usize {
        self.tau
    }

    fn table_entries(&self) -> usize {
        self.classes.entries() + self.tree.entries()
    }

    fn build_stats(&self) -> &BuildStats {
        &self.stats
    }
}
