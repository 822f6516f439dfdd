//! Sublinear-space LCE structures built from the pair-round stream.

mod auto;
mod combined;
mod grid;
mod new;
mod sampled;
mod sk;
mod sweep;
mod tree;

use std::fmt;
use std::str::FromStr;

pub use auto::{build_auto, AutoIndex};
pub use combined::{build_combined, d_t, query_combined, CombinedLceIndex};
pub use grid::{ceil_log2, ceil_log2_ratio, classify_sk, SamplingGrid};
pub use new::{build_new_index, query_new, NewLceIndex};
pub use sampled::SampledSuffixes;
pub use sk::ClassTables;
pub use tree::{
    build_interval_tree, build_tree_index, query_tree, IntervalTree, Restriction, TreeLce,
    TreeLceIndex, TreeNode, TreeTables,
};

pub(crate) use new::NewRepr;
pub(crate) use sk::ClassIndex;

use crate::error::{LceError, Result};
use crate::sparse::{PairRound, Rounds};
use crate::stats::{BuildStats, QueryStats};
use crate::suffix::BaselineIndex;
use crate::text::Text;

/// Common query interface of every index.
pub trait LceQuery {
    /// Length of the longest common prefix of the suffixes at `i` and `j`.
    fn lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize>;

    fn text(&self) -> &Text;

    /// The concrete structure answering queries.
    fn kind(&self) -> StructureKind;

    fn tau(&self) -> usize;

    /// Machine words stored by the finished index (the text excluded).
    fn table_entries(&self) -> usize;

    fn build_stats(&self) -> &BuildStats;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Baseline,
    New,
    Tree,
    Combined,
    Auto,
}

impl StructureKind {
    pub const ALL: [StructureKind; 5] = [
        StructureKind::Baseline,
        StructureKind::New,
        StructureKind::Tree,
        StructureKind::Combined,
        StructureKind::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Baseline => "baseline",
            StructureKind::New => "new",
            StructureKind::Tree => "tree",
            StructureKind::Combined => "combined",
            StructureKind::Auto => "auto",
        }
    }

    pub(crate) fn code(self) -> u64 {
        match self {
            StructureKind::Baseline => 0,
            StructureKind::New => 1,
            StructureKind::Tree => 2,
            StructureKind::Combined => 3,
            StructureKind::Auto => 4,
        }
    }

    pub(crate) fn from_code(code: u64) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.code() == code)
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = LceError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| LceError::Format(format!("unknown structure {s:?}")))
    }
}

/// Any concrete structure; `Auto` resolves to the structure it selects.
#[derive(Debug, Clone)]
pub enum AnyIndex<'a> {
    Baseline(BaselineIndex<'a>),
    New(NewLceIndex<'a>),
    Tree(TreeLce<'a>),
    Combined(CombinedLceIndex<'a>),
}

/// Builds the requested structure.
pub fn build(text: &Text, tau: usize, kind: StructureKind) -> Result<AnyIndex<'_>> {
    text.check_tau(tau)?;
    Ok(match kind {
        StructureKind::Baseline => AnyIndex::Baseline(BaselineIndex::build(text)),
        StructureKind::New => AnyIndex::New(build_new_index(text, tau)?),
        StructureKind::Tree => AnyIndex::Tree(TreeLce::build(text, tau)?),
        StructureKind::Combined => AnyIndex::Combined(build_combined(text, tau)?),
        StructureKind::Auto => match build_auto(text, tau)? {
            AutoIndex::New(x) => AnyIndex::New(x),
            AutoIndex::Combined(x) => AnyIndex::Combined(x),
        },
    })
}

impl<'a> AnyIndex<'a> {
    pub fn as_query(&self) -> &(dyn LceQuery + 'a) {
        match self {
            AnyIndex::Baseline(x) => x,
            AnyIndex::New(x) => x,
            AnyIndex::Tree(x) => x,
            AnyIndex::Combined(x) => x,
        }
    }
}

impl LceQuery for AnyIndex<'_> {
    fn lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        self.as_query().lce(i, j, stats)
    }

    fn text(&self) -> &Text {
        self.as_query().text()
    }

    fn kind(&self) -> StructureKind {
        self.as_query().kind()
    }

    fn tau(&self) -> usize {
        self.as_query().tau()
    }

    fn table_entries(&self) -> usize {
        self.as_query().table_entries()
    }

    fn build_stats(&self) -> &BuildStats {
        self.as_query().build_stats()
    }
}

/// A table builder fed one pair round at a time.
pub(crate) trait RoundConsumer {
    fn consume(&mut self, round: &PairRound, stats: &mut BuildStats);

    /// Words held between rounds.
    fn live_entries(&self) -> usize;
}

/// Streams every round of `(text, tau)` through all consumers.
pub(crate) fn drive(
    text: &Text,
    tau: usize,
    consumers: &mut [&mut dyn RoundConsumer],
) -> Result<BuildStats> {
    let mut rounds = Rounds::new(text, tau)?;
    while let Some(round) = rounds.next() {
        let mut scratch = BuildStats::default();
        for c in consumers.iter_mut() {
            c.consume(&round, &mut scratch);
        }
        rounds.charge(scratch.symbol_ops);
        let held: usize = consumers.iter().map(|c| c.live_entries()).sum();
        rounds.observe_consumer(round.entries() + held + scratch.peak_live_entries);
    }
    Ok(rounds.into_stats())
}
