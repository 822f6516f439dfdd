//! Interval tree over the text with per-node best-match tables between the
//! two children, built round by round.

use super::grid::SamplingGrid;
use super::new::{build_new_index, NewLceIndex};
use super::sk::{ClassIndex, Descent};
use super::sweep::{offer, Sweeper};
use super::{drive, LceQuery, RoundConsumer, StructureKind};
use crate::error::{LceError, Result};
use crate::sparse::PairRound;
use crate::stats::{BuildStats, QueryStats, TraceStep};
use crate::text::{extend, Stop, Text};

const NIL: usize = usize::MAX;

/// Which positions a node table may point at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    /// Every position of the opposite child; only right-to-left tables.
    Full,
    /// Positions whose distance to the next sampled position is below the
    /// cutoff; tables in both directions.
    Dist(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeNode {
    pub lo: usize,
    pub hi: usize,
    /// Last position of the left child (sampled); unused for leaves.
    pub split: usize,
    pub left: usize,
    pub right: usize,
    pub depth: usize,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.left == NIL
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalTree {
    grid: SamplingGrid,
    nodes: Vec<TreeNode>,
}

/// Splits `[0..n-1]` at the sampled position nearest each interval's
/// midpoint (ties to the left) until intervals have width at most `t`.
pub fn build_interval_tree(n: usize, t: usize, p: usize) -> IntervalTree {
    assert!(n >= 1 && t >= 1 && p < t);
    let grid = SamplingGrid { n, tau: t, t, p };
    let mut nodes = Vec::new();
    let mut todo = vec![(0, n - 1, 0, NIL, false)];
    while let Some((lo, hi, depth, parent, is_right)) = todo.pop() {
        let id = nodes.len();
        nodes.push(TreeNode {
            lo,
            hi,
            split: hi,
            left: NIL,
            right: NIL,
            depth,
        });
        if parent != NIL {
            let par: &mut TreeNode = &mut nodes[parent];
            if is_right {
                par.right = id;
            } else {
                par.left = id;
            }
        }
        if hi - lo + 1 <= t {
            continue;
        }
        let s = nearest_split(lo, hi, t, p);
        nodes[id].split = s;
        todo.push((s + 1, hi, depth + 1, id, true));
        todo.push((lo, s, depth + 1, id, false));
    }
    IntervalTree { grid, nodes }
}

fn nearest_split(lo: usize, hi: usize, t: usize, p: usize) -> usize {
    let mid2 = lo + hi;
    let x = mid2 / 2;
    let below = if x >= p { Some(x - (x - p) % t) } else { None };
    let above = match below {
        Some(b) => b + t,
        None => p,
    };
    let mut best = NIL;
    for s in below.into_iter().chain([above]) {
        if s < lo || s >= hi {
            continue;
        }
        if best == NIL || (2 * s).abs_diff(mid2) < (2 * best).abs_diff(mid2) {
            best = s;
        }
    }
    debug_assert!(best != NIL, "wide interval [{lo}, {hi}] holds a sampled position");
    best
}

impl IntervalTree {
    pub fn grid(&self) -> &SamplingGrid {
        &self.grid
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn height(&self) -> usize {
        self.nodes.iter().map(|v| v.depth).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> usize {
        self.nodes.iter().filter(|v| v.is_leaf()).count()
    }

    /// Starting at `from` (which contains both), the node whose split
    /// separates `a < b`, or `None` if both fall into one leaf.
    pub fn separate(&self, mut from: usize, a: usize, b: usize) -> Option<usize> {
        debug_assert!(a < b);
        loop {
            let v = &self.nodes[from];
            if v.is_leaf() {
                return None;
            }
            if b <= v.split {
                from = v.left;
            } else if a > v.split {
                from = v.right;
            } else {
                return Some(from);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slots {
    rbase: usize,
    lbase: usize,
    lfirst: usize,
}

/// Flattened per-node tables. Right tables are indexed by the sampled rank
/// within the right child, left tables (restricted mode only) by the
/// sampled rank within the left child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeTables {
    none: usize,
    slots: Vec<Slots>,
    pi: Vec<usize>,
    lval: Vec<usize>,
}

impl TreeTables {
    fn layout(tree: &IntervalTree, both: bool) -> Self {
        let g = tree.grid;
        let mut slots = Vec::with_capacity(tree.nodes.len());
        let mut size = 0;
        for v in &tree.nodes {
            if v.is_leaf() {
                slots.push(Slots {
                    rbase: NIL,
                    lbase: NIL,
                    lfirst: NIL,
                });
                continue;
            }
            let rbase = size;
            size += (v.hi - v.split) / g.t;
            let (lbase, lfirst) = if both {
                let first = v.lo + g.distance(v.lo);
                let base = size;
                size += (v.split - first) / g.t + 1;
                (base, first)
            } else {
                (NIL, NIL)
            };
            slots.push(Slots {
                rbase,
                lbase,
                lfirst,
            });
        }
        TreeTables {
            none: g.n,
            slots,
            pi: vec![g.n; size],
            lval: vec![0; size],
        }
    }

    #[inline]
    fn right_slot(&self, v: &TreeNode, node: usize, i: usize, t: usize) -> usize {
        self.slots[node].rbase + (i - v.split) / t - 1
    }

    #[inline]
    fn left_slot(&self, node: usize, i: usize, t: usize) -> usize {
        let s = self.slots[node];
        s.lbase + (i - s.lfirst) / t
    }

    fn read(&self, slot: usize) -> Option<(usize, usize)> {
        (self.pi[slot] != self.none).then(|| (self.pi[slot], self.lval[slot]))
    }

    pub fn entries(&self) -> usize {
        self.pi.len() + self.lval.len()
    }

    pub(crate) fn raw(&self) -> (&[usize], &[usize]) {
        (&self.pi, &self.lval)
    }

    /// Installs stored tables, checking every entry points into the
    /// child opposite its query position (and below the cutoff).
    fn load(
        mut self,
        tree: &IntervalTree,
        restriction: Restriction,
        pi: Vec<usize>,
        lval: Vec<usize>,
    ) -> Result<Self> {
        if pi.len() != self.pi.len() || lval.len() != self.lval.len() {
            return Err(LceError::Format("tree table size mismatch".into()));
        }
        let g = tree.grid;
        let allowed = |x: usize, lo: usize, hi: usize| {
            x == self.none
                || ((lo..=hi).contains(&x)
                    && match restriction {
                        Restriction::Full => true,
                        Restriction::Dist(dt) => g.distance(x) < dt,
                    })
        };
        for (node, v) in tree.nodes.iter().enumerate() {
            if v.is_leaf() {
                continue;
            }
            let s = self.slots[node];
            let rcount = (v.hi - v.split) / g.t;
            if !pi[s.rbase..s.rbase + rcount].iter().all(|&x| allowed(x, v.lo, v.split)) {
                return Err(LceError::Format(format!("tree node {node} has a stray entry")));
            }
            if s.lbase != NIL {
                let lcount = (v.split - s.lfirst) / g.t + 1;
                if !pi[s.lbase..s.lbase + lcount].iter().all(|&x| allowed(x, v.split + 1, v.hi)) {
                    return Err(LceError::Format(format!("tree node {node} has a stray entry")));
                }
            }
        }
        self.pi = pi;
        self.lval = lval;
        Ok(self)
    }
}

/// Interval tree plus best-match tables between the children of every
/// internal node, over the grid `t = tau * ceil(log2(n / tau))`.
#[derive(Debug, Clone)]
pub struct TreeLceIndex {
    restriction: Restriction,
    tree: IntervalTree,
    tables: TreeTables,
}

impl TreeLceIndex {
    pub fn restriction(&self) -> Restriction {
        self.restriction
    }

    pub fn tree(&self) -> &IntervalTree {
        &self.tree
    }

    pub fn grid(&self) -> &SamplingGrid {
        &self.tree.grid
    }

    pub fn tables(&self) -> &TreeTables {
        &self.tables
    }

    pub fn entries(&self) -> usize {
        self.tables.entries()
    }

    /// Best match in the left child for sampled `i` in the right child.
    pub fn right_entry(&self, node: usize, i: usize) -> Option<(usize, usize)> {
        let v = self.tree.nodes.get(node)?;
        let g = &self.tree.grid;
        if v.is_leaf() || i <= v.split || i > v.hi || !g.is_sampled(i) {
            return None;
        }
        self.tables.read(self.tables.right_slot(v, node, i, g.t))
    }

    /// Best match in the right child for sampled `i` in the left child.
    pub fn left_entry(&self, node: usize, i: usize) -> Option<(usize, usize)> {
        let v = self.tree.nodes.get(node)?;
        let g = &self.tree.grid;
        if self.restriction == Restriction::Full
            || v.is_leaf()
            || i < v.lo
            || i > v.split
            || !g.is_sampled(i)
        {
            return None;
        }
        self.tables.read(self.tables.left_slot(node, i, g.t))
    }

    pub(crate) fn from_parts(
        grid: SamplingGrid,
        restriction: Restriction,
        pi: Vec<usize>,
        lval: Vec<usize>,
    ) -> Result<Self> {
        let mut tree = build_interval_tree(grid.n, grid.t, grid.p);
        tree.grid = grid;
        let tables = TreeTables::layout(&tree, restriction != Restriction::Full)
            .load(&tree, restriction, pi, lval)?;
        Ok(TreeLceIndex {
            restriction,
            tree,
            tables,
        })
    }

    /// Restricted-mode descent for a sampled `s` and an `other` endpoint
    /// within the cutoff distance: `acc + min(cap, lcp(s, other))`.
    pub(crate) fn descend_restricted(
        &self,
        text: &Text,
        classes: &ClassIndex,
        mut s: usize,
        mut u: usize,
        mut acc: usize,
        mut cap: usize,
        stats: &mut QueryStats,
    ) -> usize {
        let n = text.len();
        let g = &self.tree.grid;
        let mut node = self.tree.root();
        loop {
            if s == u {
                return acc + cap.min(n - s);
            }
            let v = match self.tree.separate(node, s.min(u), s.max(u)) {
                Some(v) => v,
                None => {
                    return match classes.descend(text, s, u, acc, cap, 1, stats) {
                        Descent::Done(l) => l,
                        Descent::Handoff { .. } => unreachable!("class floor 1 never hands off"),
                    };
                }
            };
            let vn = self.tree.nodes[v];
            stats.table_lookups += 1;
            stats.reduction_steps += 1;
            stats.record(TraceStep::Node {
                node: v,
                depth: vn.depth,
            });
            let slot = if s > vn.split {
                node = vn.left;
                self.tables.right_slot(&vn, v, s, g.t)
            } else {
                node = vn.right;
                self.tables.left_slot(v, s, g.t)
            };
            let (pi, l) = self.tables.read(slot).expect("the other endpoint is a candidate");
            cap = cap.min(l);
            if pi == u {
                return acc + cap;
            }
            let (d, stop) = extend(
                text,
                u,
                pi,
                cap,
                |x, y| g.is_sampled(x) || g.is_sampled(y),
                stats,
            );
            if stop != Stop::Hit {
                return acc + d;
            }
            acc += d;
            cap -= d;
            let (x, y) = (u + d, pi + d);
            match (g.is_sampled(x), g.is_sampled(y)) {
                (true, true) => {
                    stats.rmq_calls += 1;
                    return acc + cap.min(classes.sampled.lcp(n, x, y));
                }
                (true, false) => (s, u) = (x, y),
                _ => (s, u) = (y, x),
            }
        }
    }
}

/// FULL-mode query: compare until `j + delta` is sampled, reduce through the
/// separating node, and hand pairs closer than `t` to `fallback`.
pub fn query_tree(
    index: &TreeLceIndex,
    text: &Text,
    i: usize,
    j: usize,
    fallback: &dyn LceQuery,
    stats: &mut QueryStats,
) -> Result<usize> {
    text.check_position(i)?;
    text.check_position(j)?;
    let n = text.len();
    if i == j {
        return Ok(n - i);
    }
    let g = &index.tree.grid;
    let (mut a, mut b) = (i.min(j), i.max(j));
    let mut acc = 0;
    let mut cap = usize::MAX;
    let mut node = index.tree.root();
    loop {
        if b - a < g.t {
            stats.record(TraceStep::Fallback);
            let l = fallback.lce(a, b, stats)?;
            return Ok(acc + cap.min(l));
        }
        let (d, stop) = extend(text, a, b, cap, |_, y| g.is_sampled(y), stats);
        if stop != Stop::Hit {
            return Ok(acc + d);
        }
        acc += d;
        cap -= d;
        a += d;
        b += d;
        let v = index
            .tree
            .separate(node, a, b)
            .expect("pairs at least t apart lie in different leaves");
        let vn = index.tree.nodes[v];
        stats.table_lookups += 1;
        stats.reduction_steps += 1;
        stats.record(TraceStep::Node {
            node: v,
            depth: vn.depth,
        });
        let (pi, l) = index
            .tables
            .read(index.tables.right_slot(&vn, v, b, g.t))
            .expect("the left child is non-empty");
        cap = cap.min(l);
        if pi == a {
            return Ok(acc + cap);
        }
        (a, b) = (a.min(pi), a.max(pi));
        node = vn.left;
    }
}

/// Stand-alone tree structure: FULL-mode tables plus the new structure at
/// the same `tau` for pairs closer than `t`.
#[derive(Debug, Clone)]
pub struct TreeLce<'a> {
    text: &'a Text,
    tau: usize,
    index: TreeLceIndex,
    fallback: NewLceIndex<'a>,
    stats: BuildStats,
}

impl<'a> TreeLce<'a> {
    pub fn build(text: &'a Text, tau: usize) -> Result<Self> {
        let index = build_tree_index(text, tau, Restriction::Full)?;
        let fallback = build_new_index(text, tau)?;
        let mut stats = index.1;
        stats.absorb(fallback.build_stats());
        Ok(TreeLce {
            text,
            tau,
            index: index.0,
            fallback,
            stats,
        })
    }

    pub(crate) fn from_parts(
        text: &'a Text,
        tau: usize,
        index: TreeLceIndex,
        fallback: NewLceIndex<'a>,
    ) -> Self {
        TreeLce {
            text,
            tau,
            index,
            fallback,
            stats: BuildStats::default(),
        }
    }

    pub fn index(&self) -> &TreeLceIndex {
        &self.index
    }

    pub fn fallback(&self) -> &NewLceIndex<'a> {
        &self.fallback
    }
}

impl LceQuery for TreeLce<'_> {
    fn lce(&self, i: usize, j: usize, stats: &mut QueryStats) -> Result<usize> {
        query_tree(&self.index, self.text, i, j, &self.fallback, stats)
    }

    fn text(&self) -> &Text {
        self.text
    }

    fn kind(&self) -> StructureKind {
        StructureKind::Tree
    }

    fn tau(&self) -> usize {
        self.tau
    }

    fn table_entries(&self) -> usize {
        self.index.entries() + self.fallback.table_entries()
    }

    fn build_stats(&self) -> &BuildStats {
        &self.stats
    }
}

/// Builds the tree tables alone, returning them with the build counters.
pub fn build_tree_index(
    text: &Text,
    tau: usize,
    restriction: Restriction,
) -> Result<(TreeLceIndex, BuildStats)> {
    text.check_tau(tau)?;
    let grid = SamplingGrid::for_tree(text.len(), tau);
    let mut builder = TreeBuilder::new(grid, restriction);
    let stats = drive(text, tau, &mut [&mut builder])?;
    Ok((builder.finish(), stats))
}

/// Fills tree tables from the round stream.
pub(crate) struct TreeBuilder {
    index: TreeLceIndex,
    sweeper: Sweeper,
    scratch: usize,
    /// Per-node filtered array sizes of the last round, for tests.
    #[cfg(test)]
    pub(crate) sizes: Vec<usize>,
}

impl TreeBuilder {
    pub(crate) fn new(grid: SamplingGrid, restriction: Restriction) -> Self {
        let mut tree = build_interval_tree(grid.n, grid.t, grid.p);
        tree.grid = grid;
        let tables = TreeTables::layout(&tree, restriction != Restriction::Full);
        TreeBuilder {
            index: TreeLceIndex {
                restriction,
                tree,
                tables,
            },
            sweeper: Sweeper::default(),
            scratch: 0,
            #[cfg(test)]
            sizes: Vec::new(),
        }
    }

    pub(crate) fn finish(self) -> TreeLceIndex {
        self.index
    }

    fn visit(&mut self, node: usize, order: Vec<usize>, adj: Vec<usize>, q: usize, stats: &mut BuildStats) {
        #[cfg(test)]
        {
            self.sizes[node] = order.len();
        }
        let v = self.index.tree.nodes[node];
        if v.is_leaf() {
            self.scratch -= 2 * order.len();
            return;
        }
        let g = self.index.tree.grid;
        let tau = g.tau;
        let split = v.split;
        let both = self.index.restriction != Restriction::Full;
        let tables = &mut self.index.tables;
        let none = tables.none;

        let visits = self.sweeper.run(
            &order,
            &adj,
            |pos| pos > split && g.is_sampled(pos),
            |pos| pos <= split && pos % tau == q,
            |i, cand, l| {
                let slot = tables.right_slot(&v, node, i, g.t);
                offer(&mut tables.pi[slot], &mut tables.lval[slot], none, cand, l);
            },
        );
        stats.ops(visits);
        if both {
            let visits = self.sweeper.run(
                &order,
                &adj,
                |pos| pos <= split && g.is_sampled(pos),
                |pos| pos > split && pos % tau == q,
                |i, cand, l| {
                    let slot = tables.left_slot(node, i, g.t);
                    offer(&mut tables.pi[slot], &mut tables.lval[slot], none, cand, l);
                },
            );
            stats.ops(visits);
        }

        let (mut lo, mut lo_adj) = (Vec::new(), Vec::new());
        let (mut hi, mut hi_adj) = (Vec::new(), Vec::new());
        let (mut ml, mut mh) = (NIL, NIL);
        for (r, &pos) in order.iter().enumerate() {
            if r > 0 {
                ml = ml.min(adj[r]);
                mh = mh.min(adj[r]);
            }
            if pos <= split {
                lo_adj.push(if lo.is_empty() { 0 } else { ml });
                lo.push(pos);
                ml = NIL;
            } else {
                hi_adj.push(if hi.is_empty() { 0 } else { mh });
                hi.push(pos);
                mh = NIL;
            }
        }
        stats.ops(order.len());
        self.scratch += 2 * order.len();
        stats.observe_live(self.scratch);
        self.scratch -= 2 * order.len();
        drop((order, adj));
        self.visit(v.left, lo, lo_adj, q, stats);
        self.visit(v.right, hi, hi_adj, q, stats);
    }
}

impl RoundConsumer for TreeBuilder {
    fn consume(&mut self, round: &PairRound, stats: &mut BuildStats) {
        let g = self.index.tree.grid;
        let tau = round.tau;
        let q = round.q;
        let keep = |pos: usize| match self.index.restriction {
            Restriction::Full => true,
            Restriction::Dist(dt) => g.is_sampled(pos) || (pos % tau == q && g.distance(pos) < dt),
        };
        let slcp = round.slcp();
        let (mut order, mut adj) = (Vec::new(), Vec::new());
        let mut m = NIL;
        for (r, &pos) in round.ssa.iter().enumerate() {
            if r > 0 {
                m = m.min(slcp[r]);
            }
            if keep(pos) {
                adj.push(if order.is_empty() { 0 } else { m });
                order.push(pos);
                m = NIL;
            }
        }
        stats.ops(round.ssa.len());
        #[cfg(test)]
        {
            self.sizes = vec![0; self.index.tree.nodes.len()];
        }
        self.scratch = 2 * order.len();
        stats.observe_live(self.scratch);
        self.visit(0, order, adj, q, stats);
    }

    fn live_entries(&self) -> usize {
        self.index.entries()
    }
}
