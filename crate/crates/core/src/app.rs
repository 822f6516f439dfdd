//! Suffix sorting with an LCE comparator, differential verification, and
//! benchmark records.

use std::cmp::Ordering;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LceError, Result};
use crate::lce::{build, build_auto, LceQuery, StructureKind};
use crate::stats::QueryStats;
use crate::suffix::BaselineIndex;
use crate::text::{naive_lce, Text};

/// Lexicographic order of the suffixes at `i` and `j` from one LCE query.
pub fn compare_suffixes(
    index: &dyn LceQuery,
    i: usize,
    j: usize,
    stats: &mut QueryStats,
) -> Result<Ordering> {
    let l = index.lce(i, j, stats)?;
    let text = index.text();
    Ok(text.char_at(i + l).cmp(&text.char_at(j + l)))
}

/// Sorts `positions` into suffix order using an auto-selected index at `tau`.
pub fn sparse_suffix_sort(text: &Text, positions: &[usize], tau: usize) -> Result<Vec<usize>> {
    let index = build_auto(text, tau)?;
    let (order, _) = sort_with_index(&index, positions, &mut QueryStats::new())?;
    Ok(order)
}

/// Sorts `positions` with an existing index, in place in the output
/// buffer. Returns the order and the number of suffix comparisons.
pub fn sort_with_index(
    index: &dyn LceQuery,
    positions: &[usize],
    stats: &mut QueryStats,
) -> Result<(Vec<usize>, u64)> {
    let n = index.text().len();
    let mut out = positions.to_vec();
    out.sort_unstable();
    for w in out.windows(2) {
        if w[0] == w[1] {
            return Err(LceError::DuplicatePosition { pos: w[0] });
        }
    }
    if let Some(&pos) = out.last().filter(|&&p| p >= n) {
        return Err(LceError::PositionOutOfRange { pos, n });
    }
    let mut comparisons = 0u64;
    out.sort_unstable_by(|&a, &b| {
        comparisons += 1;
        compare_suffixes(index, a, b, stats).expect("positions validated")
    });
    Ok((out, comparisons))
}

/// One disagreement found by [`verify_text`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub kind: StructureKind,
    pub tau: usize,
    pub i: usize,
    pub j: usize,
    pub expected: usize,
    pub got: usize,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub queries: u64,
    pub mismatches: Vec<Mismatch>,
}

struct Oracle {
    pairs: Vec<(usize, usize)>,
    expected: Vec<usize>,
}

impl Oracle {
    /// All pairs when `n <= exhaustive_n`, otherwise `samples` random pairs.
    fn new(text: &Text, exhaustive_n: usize, samples: usize, seed: u64) -> Result<Self> {
        let n = text.len();
        let pairs: Vec<(usize, usize)> = if n <= exhaustive_n {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect()
        };
        let mut st = QueryStats::new();
        let expected = pairs
            .iter()
            .map(|&(i, j)| naive_lce(text, i, j, &mut st))
            .collect::<Result<_>>()?;
        Ok(Oracle { pairs, expected })
    }

    fn check(&self, index: &dyn LceQuery, kind: StructureKind, report: &mut VerifyReport) -> Result<()> {
        let mut st = QueryStats::new();
        for (&(i, j), &want) in self.pairs.iter().zip(&self.expected) {
            let got = index.lce(i, j, &mut st)?;
            report.queries += 1;
            if got != want {
                report.mismatches.push(Mismatch {
                    kind,
                    tau: index.tau(),
                    i,
                    j,
                    expected: want,
                    got,
                });
            }
        }
        Ok(())
    }
}

/// Checks the baseline and every structure at every `tau` against the naive
/// scan: all pairs when `n <= exhaustive_n`, otherwise `samples` random
/// pairs drawn from `seed`.
pub fn verify_text(
    text: &Text,
    taus: &[usize],
    exhaustive_n: usize,
    samples: usize,
    seed: u64,
) -> Result<VerifyReport> {
    let n = text.len();
    let mut report = VerifyReport::default();
    if let Some(&tau) = taus.iter().find(|&&t| t == 0 || t > n) {
        return Err(LceError::InvalidTau { tau, n });
    }
    if n == 0 {
        return Ok(report);
    }
    let oracle = Oracle::new(text, exhaustive_n, samples, seed)?;
    oracle.check(&BaselineIndex::build(text), StructureKind::Baseline, &mut report)?;
    for &tau in taus {
        for kind in [
            StructureKind::New,
            StructureKind::Tree,
            StructureKind::Combined,
            StructureKind::Auto,
        ] {
            oracle.check(&build(text, tau, kind)?, kind, &mut report)?;
        }
    }
    Ok(report)
}

/// Checks one existing index against the naive scan.
pub fn verify_index(
    index: &dyn LceQuery,
    exhaustive_n: usize,
    samples: usize,
    seed: u64,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    if index.text().is_empty() {
        return Ok(report);
    }
    let oracle = Oracle::new(index.text(), exhaustive_n, samples, seed)?;
    oracle.check(index, index.kind(), &mut report)?;
    Ok(report)
}

/// Measurements of one `(structure, tau)` configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub sigma: u32,
    pub tau: usize,
    pub kind: StructureKind,
    pub build_ops: u64,
    pub table_entries: usize,
    pub cmps_min: u64,
    pub cmps_median: u64,
    pub cmps_max: u64,
    pub build_secs: f64,
    pub query_secs: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
}

impl BenchReport {
    pub const HEADER: &'static str = "n\tsigma\ttau\tstructure\tbuild_ops\ttable_entries\tcmps_min\tcmps_median\tcmps_max\tbuild_secs\tquery_secs";

    pub fn to_tsv(&self) -> String {
        let mut s = String::from(Self::HEADER);
        s.push('\n');
        for r in &self.records {
            s.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.6}\t{:.6}\n",
                r.n,
                r.sigma,
                r.tau,
                r.kind,
                r.build_ops,
                r.table_entries,
                r.cmps_min,
                r.cmps_median,
                r.cmps_max,
                r.build_secs,
                r.query_secs
            ));
        }
        s
    }
}

/// Builds `kind` at `tau` and runs `queries` random pairs, recording exact
/// per-query comparison counts.
pub fn bench_config(
    text: &Text,
    tau: usize,
    kind: StructureKind,
    queries: usize,
    seed: u64,
) -> Result<BenchRecord> {
    let n = text.len();
    let start = Instant::now();
    let index = build(text, tau, kind)?;
    let build_secs = start.elapsed().as_secs_f64();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..queries)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    let mut cmps = Vec::with_capacity(queries);
    let mut st = QueryStats::new();
    let start = Instant::now();
    for &(i, j) in &pairs {
        st.reset();
        index.lce(i, j, &mut st)?;
        cmps.push(st.char_cmps);
    }
    let query_secs = start.elapsed().as_secs_f64();
    cmps.sort_unstable();
    let pick = |x: Option<&u64>| x.copied().unwrap_or(0);
    Ok(BenchRecord {
        n,
        sigma: text.sigma(),
        tau,
        kind,
        build_ops: index.build_stats().symbol_ops,
        table_entries: index.table_entries(),
        cmps_min: pick(cmps.first()),
        cmps_median: pick(cmps.get(cmps.len() / 2)),
        cmps_max: pick(cmps.last()),
        build_secs,
        query_secs,
    })
}
