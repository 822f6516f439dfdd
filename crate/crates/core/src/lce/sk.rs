//! Best-match tables per sampled position and distance class, their
//! round-by-round construction, and the class-descent query loop shared by
//! the new and the combined structures.

use super::grid::SamplingGrid;
use super::sampled::SampledSuffixes;
use super::sweep::{offer, Sweeper};
use super::RoundConsumer;
use crate::error::{LceError, Result};
use crate::sparse::PairRound;
use crate::stats::{BuildStats, QueryStats, TraceStep};
use crate::text::{extend, Stop, Text};

/// `pi[i][k]`, `lval[i][k]` for sampled index `i` and class `k` (stored at
/// `k - 1`). An empty class holds the sentinel position `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTables {
    classes: usize,
    none: usize,
    pi: Vec<usize>,
    lval: Vec<usize>,
}

impl ClassTables {
    pub(crate) fn empty(grid: &SamplingGrid) -> Self {
        let classes = grid.classes();
        let size = grid.sampled_count() * classes;
        ClassTables {
            classes,
            none: grid.n,
            pi: vec![grid.n; size],
            lval: vec![0; size],
        }
    }

    pub(crate) fn from_parts(grid: &SamplingGrid, pi: Vec<usize>, lval: Vec<usize>) -> Result<Self> {
        let classes = grid.classes();
        let size = grid.sampled_count() * classes;
        if pi.len() != size || lval.len() != size {
            return Err(LceError::Format(format!(
                "class tables need {size} entries, found {} and {}",
                pi.len(),
                lval.len()
            )));
        }
        for (slot, &x) in pi.iter().enumerate() {
            if x != grid.n && grid.class(x) != Some(slot % classes + 1) {
                return Err(LceError::Format(format!("class table entry {slot} holds {x}")));
            }
        }
        Ok(ClassTables {
            classes,
            none: grid.n,
            pi,
            lval,
        })
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    /// `(pi, L)` for sampled index `idx` and class `k`, `None` if the class is empty.
    #[inline]
    pub fn get(&self, idx: usize, k: usize) -> Option<(usize, usize)> {
        let slot = idx * self.classes + k - 1;
        let pi = self.pi[slot];
        (pi != self.none).then(|| (pi, self.lval[slot]))
    }

    pub(crate) fn raw(&self) -> (&[usize], &[usize]) {
        (&self.pi, &self.lval)
    }

    pub fn entries(&self) -> usize {
        self.pi.len() + self.lval.len()
    }
}

/// Class tables plus the sampled-suffix structure for one grid.
#[derive(Debug, Clone)]
pub(crate) struct ClassIndex {
    pub grid: SamplingGrid,
    pub tables: ClassTables,
    pub sampled: SampledSuffixes,
}

pub(crate) enum Descent {
    Done(usize),
    /// The non-sampled endpoint fell below the class floor.
    Handoff {
        sampled: usize,
        other: usize,
        acc: usize,
        cap: usize,
    },
}

impl ClassIndex {
    /// Answers `acc + min(cap, lcp(a, b))`, reducing through class tables
    /// while the non-sampled endpoint has class `>= min_class`.
    pub(crate) fn descend(
        &self,
        text: &Text,
        mut a: usize,
        mut b: usize,
        mut acc: usize,
        mut cap: usize,
        min_class: usize,
        stats: &mut QueryStats,
    ) -> Descent {
        let n = text.len();
        let grid = &self.grid;
        if a == b {
            return Descent::Done(acc + cap.min(n - a));
        }
        loop {
            let (d, stop) = extend(
                text,
                a,
                b,
                cap,
                |x, y| grid.is_sampled(x) || grid.is_sampled(y),
                stats,
            );
            if stop != Stop::Hit {
                return Descent::Done(acc + d);
            }
            acc += d;
            cap -= d;
            let (x, y) = (a + d, b + d);
            let (s, u) = match (grid.is_sampled(x), grid.is_sampled(y)) {
                (true, true) => {
                    stats.rmq_calls += 1;
                    return Descent::Done(acc + cap.min(self.sampled.lcp(n, x, y)));
                }
                (true, false) => (x, y),
                _ => (y, x),
            };
            let k = grid.class(u).expect("u is not sampled");
            if k < min_class {
                return Descent::Handoff {
                    sampled: s,
                    other: u,
                    acc,
                    cap,
                };
            }
            stats.table_lookups += 1;
            stats.reduction_steps += 1;
            stats.record(TraceStep::Class(k));
            let (pi, l) = self
                .tables
                .get(grid.sampled_index(s), k)
                .expect("class of a live position is non-empty");
            cap = cap.min(l);
            if pi == u {
                return Descent::Done(acc + cap);
            }
            a = u;
            b = pi;
        }
    }

    pub(crate) fn entries(&self) -> usize {
        self.tables.entries() + self.sampled.entries()
    }
}

/// Fills class tables from the round stream.
pub(crate) struct ClassBuilder {
    grid: SamplingGrid,
    tables: ClassTables,
    sampled: Option<SampledSuffixes>,
    sweeper: Sweeper,
}

impl ClassBuilder {
    pub(crate) fn new(grid: SamplingGrid) -> Self {
        ClassBuilder {
            grid,
            tables: ClassTables::empty(&grid),
            sampled: None,
            sweeper: Sweeper::default(),
        }
    }

    pub(crate) fn finish(self) -> ClassIndex {
        ClassIndex {
            grid: self.grid,
            tables: self.tables,
            sampled: self.sampled.expect("at least one round consumed"),
        }
    }
}

impl RoundConsumer for ClassBuilder {
    fn consume(&mut self, round: &PairRound, stats: &mut BuildStats) {
        let grid = self.grid;
        if round.q == round.p && self.sampled.is_none() {
            let s = SampledSuffixes::from_round(round, &grid);
            stats.ops(round.ssa.len());
            self.sampled = Some(s);
        }
        let tau = round.tau;
        let q = round.q;
        let classes = self.tables.classes;
        let none = self.tables.none;
        let (pi, lval) = (&mut self.tables.pi, &mut self.tables.lval);
        let order = &round.ssa;
        let adj = round.slcp();
        for k in 1..=classes {
            let visits = self.sweeper.run(
                order,
                adj,
                |pos| grid.is_sampled(pos),
                |pos| pos % tau == q && grid.class(pos) == Some(k),
                |i, cand, l| {
                    let slot = grid.sampled_index(i) * classes + k - 1;
                    offer(&mut pi[slot], &mut lval[slot], none, cand, l);
                },
            );
            stats.ops(visits);
        }
    }

    fn live_entries(&self) -> usize {
        self.tables.entries() + self.sampled.as_ref().map_or(0, SampledSuffixes::entries)
    }
}
