use super::grid::SamplingGrid;
use super::sk::{ClassBuilder, ClassIndex, ClassTables, Descent};
use super::sampled::SampledSuffixes;
use super::{drive, LceQuery, StructureKind};
use crate::error::Result;
use crate::stats::{BuildStats, QueryStats};
use crate::suffix::BaselineIndex;
use crate::text::Text;

#[derive(Debug, Clone)]
pub(crate) enum NewRepr<'a> {
    /// `tau = 1`: the sampled structure would need `t = 0`.
    Baseline(BaselineIndex<'a>),
    Sampled(ClassIndex),
}

/// Best-match tables per sampled position and distance class over the grid
/// `t = tau * ceil(log2 tau)`.
#[derive(Debug, Clone)]
pub struct NewLceIndex<'a> {
    text: &'a Text,
    tau: usize,
    pub(crate) repr: NewRepr<'a>,
    stats: BuildStats,
}

pub fn build_new_index(text: &Text, tau: usize) -> Result<NewLceIndex<'_>> {
    text.check_tau(tau)?;
    if tau == 1 {
        let base = BaselineIndex::build(text);
        let stats = *base.build_stats();
        return Ok(NewLceIndex {
            text,
            tau,
            repr: NewRepr::Baseline(base),
            stats,
        });
    }
    let grid = SamplingGrid::for_new(text.len(), tau);
    let mut builder = ClassBuilder::new(grid);
    let stats = drive(text, tau, &mut [&mut builder])?;
    Ok(NewLceIndex {
        text,
        tau,
        repr: NewRepr::Sampled(builder.finish()),
        stats,
    })
}

pub fn query_new(index: &NewLceIndex<'_>, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
    index.lce(i, j, stats)
}

impl<'a> NewLceIndex<'a> {
    pub(crate) fn from_repr(text: &'a Text, tau: usize, repr: NewRepr<'a>) -> Self {
        NewLceIndex {
            text,
            tau,
            repr,
            stats: BuildStats::default(),
        }
    }

    /// `None` for `tau = 1`, which is served by the full suffix array.
    pub fn grid(&self) -> Option<&SamplingGrid> {
        self.class_index().map(|c| &c.grid)
    }

    pub fn tables(&self) -> Option<&ClassTables> {
        self.class_index().map(|c| &c.tables)
    }

    pub fn sampled(&self) -> Option<&SampledSuffixes> {
        self.class_index().map(|c| &c.sampled)
    }

    /// `(pi, L)` for sampled position `i` and class `k`.
    pub fn entry(&self, i: usize, k: usize) -> Option<(usize, usize)> {
        let c = self.class_index()?;
        if !c.grid.is_sampled(i) || k == 0 || k > c.tables.classes() {
            return None;
        }
        c.tables.get(c.grid.sampled_index(i), k)
    }

    /// The full suffix structure serving `tau = 1`.
    pub fn baseline(&self) -> Option<&BaselineIndex<'a>> {
        match &self.repr {
            NewRepr::Baseline(b) => Some(b),
            NewRepr::Sampled(_) => None,
        }
    }

    pub(crate) fn class_index(&self) -> Option<&ClassIndex> {
        match &self.repr {
            NewRepr::Sampled(c) => Some(c),
            NewRepr::Baseline(_) => None,
        }
    }
}

impl LceQuery for NewLceIndex<'_> {
    fn lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        match &self.repr {
            NewRepr::Baseline(b) => b.baseline_lce(i, j, stats),
            NewRepr::Sampled(c) => {
                self.text.check_position(i)?;
                self.text.check_position(j)?;
                match c.descend(self.text, i, j, 0, usize::MAX, 1, stats) {
                    Descent::Done(l) => Ok(l),
                    Descent::Handoff { .. } => unreachable!("class floor 1 never hands off"),
                }
            }
        }
    }

    fn text(&self) -> &Text {
        self.text
    }

    fn kind(&self) -> StructureKind {
        match self.repr {
            NewRepr::Baseline(_) => StructureKind::Baseline,
            NewRepr::Sampled(_) => StructureKind::New,
        }
    }

    fn tau(&self) -> usize {
        self.tau
    }

    fn table_entries(&self) -> usize {
        match &self.repr {
            NewRepr::Baseline(b) => b.table_entries(),
            NewRepr::Sampled(c) => c.entries(),
        }
    }

    fn build_stats(&self) -> &BuildStats {
        &self.stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::naive_lce;

    fn all_pairs_agree(text: &Text, tau: usize) {
        let idx = build_new_index(text, tau).unwrap();
        let n = text.len();
        let mut st = QueryStats::new();
        for i in 0..n {
            for j in 0..n {
                let want = naive_lce(text, i, j, &mut QueryStats::new()).unwrap();
                assert_eq!(idx.lce(i, j, &mut st).unwrap(), want, "i={i} j={j} tau={tau}");
            }
        }
    }

    #[test]
    fn aabaab_tables() {
        let t = Text::normalize(b"aabaab");
        let idx = build_new_index(&t, 2).unwrap();
        let g = idx.grid().unwrap();
        assert_eq!((g.t, g.p), (2, 1));
        assert_eq!(idx.entry(1, 1), Some((4, 2)));
        // lcp(5,0)=0, lcp(5,2)=1, lcp(5,4)=0.
        assert_eq!(idx.entry(5, 1), Some((2, 1)));
        assert_eq!(idx.entry(3, 1), Some((0, 3)));
    }

    #[test]
    fn empty_class_is_none() {
        // n=5, tau=4: t=8 > n, only position 4 is sampled; class 3 needs distance >= 4.
        let t = Text::normalize(b"abcab");
        let idx = build_new_index(&t, 4).unwrap();
        assert_eq!(idx.grid().unwrap().t, 8);
        assert_eq!(idx.entry(4, 3), Some((0, 0)));
        let t = Text::normalize(b"abc");
        let idx = build_new_index(&t, 3).unwrap();
        // t=6, classes 1..3; distance of 0 is 2 (class 2), of 1 is 1 (class 1), class 3 empty.
        assert_eq!(idx.entry(2, 3), None);
    }

    #[test]
    fn examples() {
        let t = Text::normalize(b"banana");
        let idx = build_new_index(&t, 2).unwrap();
        let mut st = QueryStats::new();
        assert_eq!(query_new(&idx, 1, 3, &mut st).unwrap(), 3);
        assert_eq!(st.rmq_calls, 1);
        assert_eq!(query_new(&idx, 0, 2, &mut st).unwrap(), 0);
        let t = Text::normalize(&b"ab".repeat(8));
        let idx = build_new_index(&t, 2).unwrap();
        assert_eq!(query_new(&idx, 0, 2, &mut st).unwrap(), 14);
        assert!(query_new(&idx, 16, 0, &mut st).is_err());
    }

    #[test]
    fn tau_one_is_baseline() {
        let t = Text::normalize(b"mississippi");
        let idx = build_new_index(&t, 1).unwrap();
        assert_eq!(idx.kind(), StructureKind::Baseline);
        all_pairs_agree(&t, 1);
    }

    #[test]
    fn small_texts_all_tau() {
        for raw in [&b"mississippi"[..], b"abaababaabaab", b"aaaaaaaaaaaa", b"abcabcabcabd", b"x"] {
            let t = Text::normalize(raw);
            for tau in 1..=t.len() {
                all_pairs_agree(&t, tau);
            }
        }
    }
}
