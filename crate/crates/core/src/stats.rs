//! Instrumentation counters for queries and builds.
//!
//! Counts are exact: every character comparison, table lookup and RMQ call
//! made by a query bumps the corresponding field, and builds tally the
//! symbol-level work of radix passes, merges, scans and lcp extensions.

/// One reduction recorded when a query is traced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceStep {
    /// Reduction through the distance class `k` of the non-sampled endpoint.
    Class(usize),
    /// Reduction through the interval-tree node `node` at depth `depth`.
    Node { node: usize, depth: usize },
    /// Hand-off from the class tables to the restricted tree, with the
    /// distances of both endpoints to their next sampled position.
    Handoff { sampled_dist: usize, other_dist: usize },
    /// Delegation of a short-range pair to the fallback structure.
    Fallback,
}

/// Per-query counters. Counters only grow; call [`QueryStats::reset`] between
/// queries when per-query values are wanted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub char_cmps: u64,
    pub reduction_steps: u64,
    pub rmq_calls: u64,
    pub table_lookups: u64,
    trace: Option<Vec<TraceStep>>,
}

impl QueryStats {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stats that also record every reduction step.
    pub fn traced() -> Self {
        Self {
            trace: Some(Vec::new()),
            ..Self::default()
        }
    }

    pub fn reset(&mut self) {
        self.char_cmps = 0;
        self.reduction_steps = 0;
        self.rmq_calls = 0;
        self.table_lookups = 0;
        if let Some(t) = self.trace.as_mut() {
            t.clear();
        }
    }

    pub fn trace(&self) -> &[TraceStep] {
        self.trace.as_deref().unwrap_or(&[])
    }

    pub(crate) fn record(&mut self, step: TraceStep) {
        if let Some(t) = self.trace.as_mut() {
            t.push(step);
        }
    }
}

/// Build-time counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Symbol-level operations: radix-pass element moves, meta-character
    /// symbol comparisons, renaming, suffix sorting of reduced strings, lcp
    /// extensions and table sweeps.
    pub symbol_ops: u64,
    /// Largest number of auxiliary machine words observed alive at once
    /// (the text itself excluded).
    pub peak_live_entries: usize,
    /// Number of pair rounds consumed.
    pub rounds: usize,
}

impl BuildStats {
    #[inline]
    pub(crate) fn ops(&mut self, k: usize) {
        self.symbol_ops += k as u64;
    }

    #[inline]
    pub(crate) fn observe_live(&mut self, live: usize) {
        self.peak_live_entries = self.peak_live_entries.max(live);
    }

    pub(crate) fn absorb(&mut self, other: &BuildStats) {
        self.symbol_ops += other.symbol_ops;
        self.peak_live_entries = self.peak_live_entries.max(other.peak_live_entries);
        self.rounds += other.rounds;
    }
}
