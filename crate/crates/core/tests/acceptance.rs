//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the summary lines always reach the
//! output; the process exits non-zero if any criterion fails.

use std::alloc::{GlobalAlloc, Layout, System};
use std::cell::Cell;
use std::cmp::Ordering;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sublce::lce::{ceil_log2_ratio, d_t};
use sublce::{
    build, build_combined, build_new_index, build_tree_index, generate, naive_lce,
    sort_with_index, sparse_suffix_sort, BaselineIndex, CorpusKind, LceQuery, QueryStats,
    Restriction, Rounds, SamplingGrid, StructureKind, Text, TreeLce, TreeLceIndex,
};

// ---- pinned constants ----

const SEED: u64 = 0x5eed_1ce;

/// Criterion 1: exhaustive lengths and sampling rates.
const EXHAUSTIVE_MAX_N: usize = 256;
const EXHAUSTIVE_TAUS: [usize; 5] = [1, 2, 3, 4, 8];
/// Criterion 1 and 3: randomized grid.
const RANDOM_NS: [usize; 3] = [1 << 10, 1 << 12, 1 << 14];
const SIGMAS: [usize; 3] = [2, 4, 26];
const RANDOM_TAUS: [usize; 4] = [2, 4, 8, 16];
const RANDOM_PAIRS: usize = 100_000;
/// Extra pairs of suffix-array neighbours, whose lcps are long.
const NEIGHBOUR_PAIRS: usize = 10_000;

/// Criterion 3: per-query character comparison budgets.
const NEW_BUDGET: u64 = 4; // * t
const TREE_BUDGET: u64 = 4; // * t * (ceil(log2(n/t)) + 1)
const COMBINED_BUDGET: u64 = 8; // * tau * ceil(log2(n/tau))

/// Criterion 4: construction scaling.
const BUILD_NS: [usize; 5] = [1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14];
const BUILD_TAUS: [usize; 6] = [2, 4, 8, 16, 32, 64];
const BUILD_C: f64 = 64.0;
const DOUBLING_LIMIT: f64 = 2.0 * 1.25;

/// Criterion 5: live words and stored words, each at most `SPACE_C * n / tau`.
const SPACE_C: f64 = 48.0;

/// Criteria 2 and 6: brute-force sizes.
const TABLE_MAX_N: usize = 512;

// ---- allocation meter ----

struct Counting;

thread_local! {
    static LIVE: Cell<isize> = const { Cell::new(0) };
    static PEAK: Cell<isize> = const { Cell::new(0) };
}

fn bump(delta: isize) {
    let _ = LIVE.try_with(|live| {
        let v = live.get() + delta;
        live.set(v);
        let _ = PEAK.try_with(|peak| {
            if v > peak.get() {
                peak.set(v);
            }
        });
    });
}

unsafe impl GlobalAlloc for Counting {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            bump(layout.size() as isize);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        bump(-(layout.size() as isize));
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = System.realloc(ptr, layout, new_size);
        if !p.is_null() {
            bump(new_size as isize - layout.size() as isize);
        }
        p
    }
}

#[global_allocator]
static ALLOC: Counting = Counting;

/// Peak bytes allocated on this thread while `f` runs, above the level at entry.
fn peak_bytes<T>(f: impl FnOnce() -> T) -> (T, usize) {
    let base = LIVE.with(Cell::get);
    PEAK.with(|p| p.set(base));
    let out = f();
    let peak = PEAK.with(Cell::get);
    (out, (peak - base).max(0) as usize)
}

// ---- helpers ----

fn lcp(text: &Text, i: usize, j: usize) -> usize {
    naive_lce(text, i, j, &mut QueryStats::new()).unwrap()
}

fn random_text(n: usize, sigma: usize, seed: u64) -> Text {
    Text::normalize(&generate(CorpusKind::Random, n, sigma, seed).unwrap())
}

fn exhaustive_text(n: usize) -> Text {
    let raw = match n % 6 {
        0 => generate(CorpusKind::Random, n, 2, SEED + n as u64),
        1 => generate(CorpusKind::Random, n, 4, SEED + n as u64),
        2 => generate(CorpusKind::Random, n, 26, SEED + n as u64),
        3 => generate(CorpusKind::Fibonacci, n, 2, 0),
        4 => generate(CorpusKind::ThueMorse, n, 2, 0),
        _ => generate(CorpusKind::Periodic, n, 3, 0),
    };
    Text::normalize(&raw.unwrap())
}

fn isqrt(n: usize) -> usize {
    (1..=n).take_while(|r| r * r <= n).last().unwrap_or(0)
}

fn taus_for(n: usize, base: &[usize], extra: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = base.iter().chain(extra).copied().filter(|&t| t >= 1 && t <= n).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn random_grid_taus(n: usize) -> Vec<usize> {
    taus_for(n, &RANDOM_TAUS, &[isqrt(n), n / 4])
}

/// Uniform pairs plus pairs adjacent in the suffix array.
fn query_pairs(text: &Text, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let n = text.len();
    let sa = BaselineIndex::build(text).sa().to_vec();
    let mut pairs: Vec<(usize, usize)> = (0..RANDOM_PAIRS)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    pairs.extend((0..NEIGHBOUR_PAIRS).map(|_| {
        let r = rng.gen_range(1..n);
        (sa[r - 1], sa[r])
    }));
    pairs
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], summary: String) -> Self {
        let detail = match failures.first() {
            None => summary,
            Some(first) => format!("{} failure(s), first: {first}", failures.len()),
        };
        Outcome {
            pass: failures.is_empty(),
            detail,
        }
    }
}

// ---- criterion 1: oracle equivalence ----

fn oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut queries = 0u64;
    for n in 1..=EXHAUSTIVE_MAX_N {
        let text = exhaustive_text(n);
        let want: Vec<usize> = (0..n * n).map(|x| lcp(&text, x / n, x % n)).collect();
        for tau in taus_for(n, &EXHAUSTIVE_TAUS, &[isqrt(n)]) {
            for kind in StructureKind::ALL {
                let idx = build(&text, tau, kind).unwrap();
                let mut st = QueryStats::new();
                for (x, &w) in want.iter().enumerate() {
                    let got = idx.lce(x / n, x % n, &mut st).unwrap();
                    queries += 1;
                    if got != w {
                        failures.push(format!("{kind} n={n} tau={tau} ({}, {}): {got} != {w}", x / n, x % n));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for &n in &RANDOM_NS {
        for &sigma in &SIGMAS {
            let text = random_text(n, sigma, rng.gen());
            let pairs = query_pairs(&text, &mut rng);
            let want: Vec<usize> = pairs.iter().map(|&(i, j)| lcp(&text, i, j)).collect();
            for tau in random_grid_taus(n) {
                for kind in StructureKind::ALL {
                    let idx = build(&text, tau, kind).unwrap();
                    let mut st = QueryStats::new();
                    for (&(i, j), &w) in pairs.iter().zip(&want) {
                        let got = idx.lce(i, j, &mut st).unwrap();
                        queries += 1;
                        if got != w {
                            failures.push(format!("{kind} n={n} sigma={sigma} tau={tau} ({i}, {j}): {got} != {w}"));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(&failures, format!("{queries} queries agree with the naive scan"))
}

// ---- criterion 2: table correctness ----

fn table_texts() -> Vec<Text> {
    let mut v = Vec::new();
    for (k, n) in [5usize, 16, 31, 64, 100, 200, 333, TABLE_MAX_N].into_iter().enumerate() {
        v.push(random_text(n, [2, 4, 26][k % 3], SEED ^ n as u64));
        v.push(Text::normalize(&generate(CorpusKind::Fibonacci, n, 2, 0).unwrap()));
    }
    v.push(Text::normalize(&generate(CorpusKind::Periodic, 128, 2, 0).unwrap()));
    v.push(Text::normalize(&generate(CorpusKind::ThueMorse, 256, 2, 0).unwrap()));
    v
}

struct LcpMatrix {
    n: usize,
    m: Vec<u32>,
}

impl LcpMatrix {
    fn new(text: &Text) -> Self {
        let n = text.len();
        let mut m = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let l = lcp(text, i, j) as u32;
                m[i * n + j] = l;
                m[j * n + i] = l;
            }
        }
        LcpMatrix { n, m }
    }

    fn get(&self, i: usize, j: usize) -> usize {
        self.m[i * self.n + j] as usize
    }

    /// Best match for `i` among `cands`: longest lcp, then smallest position.
    fn argmax(&self, i: usize, cands: impl Iterator<Item = usize>) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for c in cands {
            let l = self.get(i, c);
            if best.map_or(true, |(_, bl)| l > bl) {
                best = Some((c, l));
            }
        }
        best
    }
}

fn check_class_tables(
    lcps: &LcpMatrix,
    grid: &SamplingGrid,
    entry: impl Fn(usize, usize) -> Option<(usize, usize)>,
    label: &str,
    failures: &mut Vec<String>,
) -> u64 {
    let n = grid.n;
    let mut checked = 0;
    for i in (0..n).filter(|&i| grid.is_sampled(i)) {
        for k in 1..=grid.classes() {
            let want = lcps.argmax(i, (0..n).filter(|&x| grid.class(x) == Some(k)));
            let got = entry(i, k);
            checked += 1;
            if got != want {
                failures.push(format!("{label} i={i} k={k}: {got:?} != {want:?}"));
            }
        }
    }
    checked
}

fn check_tree_tables(
    lcps: &LcpMatrix,
    idx: &TreeLceIndex,
    label: &str,
    failures: &mut Vec<String>,
) -> u64 {
    let g = *idx.grid();
    let in_set = |x: usize| match idx.restriction() {
        Restriction::Full => true,
        Restriction::Dist(dt) => g.distance(x) < dt,
    };
    let mut checked = 0;
    for (id, v) in idx.tree().nodes().iter().enumerate() {
        if v.is_leaf() {
            continue;
        }
        for i in (v.split + 1..=v.hi).filter(|&i| g.is_sampled(i)) {
            let want = lcps.argmax(i, (v.lo..=v.split).filter(|&x| in_set(x)));
            checked += 1;
            if idx.right_entry(id, i) != want {
                failures.push(format!("{label} node={id} right i={i}"));
            }
        }
        if idx.restriction() != Restriction::Full {
            for i in (v.lo..=v.split).filter(|&i| g.is_sampled(i)) {
                let want = lcps.argmax(i, (v.split + 1..=v.hi).filter(|&x| in_set(x)));
                checked += 1;
                if idx.left_entry(id, i) != want {
                    failures.push(format!("{label} node={id} left i={i}"));
                }
            }
        }
    }
    checked
}

fn table_correctness() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for text in table_texts() {
        let n = text.len();
        let lcps = LcpMatrix::new(&text);
        for tau in taus_for(n, &[1, 2, 3, 4, 8, 16], &[isqrt(n), n / 4]) {
            let label = |s: &str| format!("{s} n={n} tau={tau}");
            let new = build_new_index(&text, tau).unwrap();
            if let Some(grid) = new.grid() {
                checked += check_class_tables(&lcps, grid, |i, k| new.entry(i, k), &label("new"), &mut failures);
            }
            let (full, _) = build_tree_index(&text, tau, Restriction::Full).unwrap();
            checked += check_tree_tables(&lcps, &full, &label("tree-full"), &mut failures);
            let dt = d_t(n, full.grid().t);
            let (restricted, _) = build_tree_index(&text, tau, Restriction::Dist(dt)).unwrap();
            checked += check_tree_tables(&lcps, &restricted, &label("tree-d"), &mut failures);
            let comb = build_combined(&text, tau).unwrap();
            checked += check_class_tables(&lcps, comb.grid(), |i, k| comb.entry(i, k), &label("combined"), &mut failures);
            checked += check_tree_tables(&lcps, comb.tree(), &label("combined-tree"), &mut failures);
        }
    }
    Outcome::new(&failures, format!("{checked} table entries equal the brute-force argmax"))
}

// ---- criterion 3: query comparison budgets ----

fn query_budgets() -> Outcome {
    let mut failures = Vec::new();
    let mut worst = [0f64; 3];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut texts = Vec::new();
    for &n in &RANDOM_NS {
        for &sigma in &SIGMAS {
            texts.push(random_text(n, sigma, rng.gen()));
        }
        texts.push(Text::normalize(&generate(CorpusKind::Periodic, n, 2, 0).unwrap()));
        texts.push(Text::normalize(&generate(CorpusKind::Fibonacci, n, 2, 0).unwrap()));
    }
    for text in &texts {
        let n = text.len();
        let pairs = query_pairs(text, &mut rng);
        for tau in random_grid_taus(n) {
            let new_t = SamplingGrid::for_new(n, tau).t as u64;
            let tree_t = SamplingGrid::for_tree(n, tau).t;
            let budgets = [
                NEW_BUDGET * new_t,
                TREE_BUDGET * tree_t as u64 * (ceil_log2_ratio(n, tree_t) as u64 + 1),
                COMBINED_BUDGET * tau as u64 * ceil_log2_ratio(n, tau) as u64,
            ];
            let new = build_new_index(text, tau).unwrap();
            let tree = TreeLce::build(text, tau).unwrap();
            let comb = build_combined(text, tau).unwrap();
            let structures: [&dyn LceQuery; 3] = [&new, &tree, &comb];
            for (s, idx) in structures.iter().enumerate() {
                let mut st = QueryStats::new();
                let mut max = 0;
                for &(i, j) in &pairs {
                    st.reset();
                    idx.lce(i, j, &mut st).unwrap();
                    max = max.max(st.char_cmps);
                }
                worst[s] = worst[s].max(max as f64 / budgets[s] as f64);
                if max > budgets[s] {
                    failures.push(format!(
                        "{} n={n} sigma={} tau={tau}: {max} > {}",
                        ["new", "tree", "combined"][s],
                        text.sigma(),
                        budgets[s]
                    ));
                }
            }
        }
    }
    Outcome::new(
        &failures,
        format!(
            "max fraction of budget used: new {:.2}, tree {:.2}, combined {:.2}",
            worst[0], worst[1], worst[2]
        ),
    )
}

// ---- criteria 4 and 5: construction work and space ----

struct BuildSample {
    n: usize,
    tau: usize,
    ops: [u64; 3],
    live: [usize; 3],
    stored: [usize; 3],
    alloc_words: [usize; 3],
}

fn build_samples() -> Vec<BuildSample> {
    let mut out = Vec::new();
    for &n in &BUILD_NS {
        let text = random_text(n, 4, SEED ^ (n as u64 * 7));
        for &tau in &BUILD_TAUS {
            let (new, a0) = peak_bytes(|| build_new_index(&text, tau).unwrap());
            let ((tree, tree_stats), a1) =
                peak_bytes(|| build_tree_index(&text, tau, Restriction::Full).unwrap());
            let (comb, a2) = peak_bytes(|| build_combined(&text, tau).unwrap());
            out.push(BuildSample {
                n,
                tau,
                ops: [
                    new.build_stats().symbol_ops,
                    tree_stats.symbol_ops,
                    comb.build_stats().symbol_ops,
                ],
                live: [
                    new.build_stats().peak_live_entries,
                    tree_stats.peak_live_entries,
                    comb.build_stats().peak_live_entries,
                ],
                stored: [new.table_entries(), tree.entries(), comb.table_entries()],
                alloc_words: [a0 / 8, a1 / 8, a2 / 8],
            });
        }
    }
    out
}

const NAMES: [&str; 3] = ["new", "tree", "combined"];

fn construction_scaling(samples: &[BuildSample]) -> Outcome {
    let mut failures = Vec::new();
    let mut max_c = 0f64;
    let mut max_doubling = 0f64;
    for s in samples {
        for k in 0..3 {
            let c = s.ops[k] as f64 / (s.n * s.tau) as f64;
            max_c = max_c.max(c);
            if c > BUILD_C {
                failures.push(format!("{} n={} tau={}: ops/(n*tau) = {c:.1}", NAMES[k], s.n, s.tau));
            }
        }
    }
    for w in samples.windows(2) {
        if w[0].n != w[1].n || w[1].tau != 2 * w[0].tau {
            continue;
        }
        for k in 0..3 {
            let r = w[1].ops[k] as f64 / w[0].ops[k] as f64;
            max_doubling = max_doubling.max(r);
            if r > DOUBLING_LIMIT {
                failures.push(format!(
                    "{} n={} tau {}->{}: ops ratio {r:.2}",
                    NAMES[k], w[0].n, w[0].tau, w[1].tau
                ));
            }
        }
    }
    Outcome::new(
        &failures,
        format!("max ops/(n*tau) {max_c:.1} <= {BUILD_C}, max doubling ratio {max_doubling:.2} <= {DOUBLING_LIMIT}"),
    )
}

fn space_audit(samples: &[BuildSample]) -> Outcome {
    let mut failures = Vec::new();
    let mut worst = [0f64; 3];
    for s in samples {
        let bound = SPACE_C * s.n as f64 / s.tau as f64;
        for k in 0..3 {
            for (m, (what, v)) in [
                ("live", s.live[k]),
                ("stored", s.stored[k]),
                ("allocated", s.alloc_words[k]),
            ]
            .into_iter()
            .enumerate()
            {
                worst[m] = worst[m].max(v as f64 * s.tau as f64 / s.n as f64);
                if v as f64 > bound {
                    failures.push(format!("{} n={} tau={}: {what} {v} > {bound}", NAMES[k], s.n, s.tau));
                }
            }
        }
    }
    Outcome::new(
        &failures,
        format!(
            "max words/(n/tau): live {:.1}, stored {:.1}, allocated {:.1}; bound {SPACE_C}",
            worst[0], worst[1], worst[2]
        ),
    )
}

// ---- criterion 6: sparse suffix arrays ----

fn sparse_sa_correctness() -> Outcome {
    let mut failures = Vec::new();
    let mut rounds_checked = 0u64;
    let mut texts: Vec<Text> = (1..=40).map(exhaustive_text).collect();
    for n in [64, 97, 128, 256, TABLE_MAX_N] {
        texts.push(random_text(n, 2, SEED ^ (3 * n as u64)));
        texts.push(random_text(n, 26, SEED ^ (5 * n as u64)));
    }
    texts.push(Text::normalize(&generate(CorpusKind::Fibonacci, 300, 2, 0).unwrap()));
    texts.push(Text::normalize(&generate(CorpusKind::Periodic, 150, 3, 0).unwrap()));
    for text in &texts {
        let n = text.len();
        let s = text.symbols();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        for tau in 1..=n {
            let p = (n - 1) % tau;
            for (step, round) in Rounds::new(text, tau).unwrap().enumerate() {
                rounds_checked += 1;
                let q = (p + tau - step % tau) % tau;
                let ssa: Vec<usize> = order
                    .iter()
                    .copied()
                    .filter(|&x| x % tau == p || x % tau == q)
                    .collect();
                let mut slcp = vec![0; ssa.len()];
                for r in 1..ssa.len() {
                    slcp[r] = lcp(text, ssa[r - 1], ssa[r]);
                }
                if round.q != q || round.ssa != ssa || round.slcp() != slcp.as_slice() {
                    failures.push(format!("n={n} tau={tau} p={p} q={q}"));
                }
            }
        }
    }
    Outcome::new(&failures, format!("{rounds_checked} rounds equal direct sparse arrays"))
}

// ---- criterion 7: suffix sorting ----

fn application() -> Outcome {
    let mut failures = Vec::new();
    let mut sorted = 0u64;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut texts = Vec::new();
    for &n in &RANDOM_NS {
        for &sigma in &SIGMAS {
            texts.push(random_text(n, sigma, rng.gen()));
        }
    }
    for kind in [CorpusKind::Periodic, CorpusKind::Fibonacci, CorpusKind::ThueMorse] {
        texts.push(Text::normalize(&generate(kind, 1 << 12, 2, 0).unwrap()));
    }
    for text in &texts {
        let n = text.len();
        let sa = BaselineIndex::build(text).sa().to_vec();
        let all: Vec<usize> = (0..n).collect();
        for tau in random_grid_taus(n) {
            let got = sparse_suffix_sort(text, &all, tau).unwrap();
            sorted += 1;
            if got != sa {
                failures.push(format!("full sort n={n} sigma={} tau={tau}", text.sigma()));
            }
            let mut subset = all.clone();
            subset.shuffle(&mut rng);
            subset.truncate(rng.gen_range(1..=n.min(2000)));
            let s = text.symbols();
            let mut want = subset.clone();
            want.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
            for kind in [StructureKind::New, StructureKind::Tree, StructureKind::Combined] {
                let idx = build(text, tau, kind).unwrap();
                let (got, _) = sort_with_index(&idx, &subset, &mut QueryStats::new()).unwrap();
                sorted += 1;
                if got != want {
                    failures.push(format!("subset sort {kind} n={n} tau={tau}"));
                }
            }
        }
    }
    // Strict weak order on random triples.
    let text = random_text(2048, 2, SEED + 70);
    let idx = build(&text, 16, StructureKind::Auto).unwrap();
    let mut st = QueryStats::new();
    let mut cmp = |a, b| sublce::compare_suffixes(&idx, a, b, &mut st).unwrap();
    for _ in 0..20_000 {
        let (a, b, c) = (rng.gen_range(0..2048), rng.gen_range(0..2048), rng.gen_range(0..2048));
        let (ab, ba, bc, ac) = (cmp(a, b), cmp(b, a), cmp(b, c), cmp(a, c));
        if ab != ba.reverse() || (a != b && ab == Ordering::Equal) {
            failures.push(format!("antisymmetry fails for ({a}, {b})"));
        }
        if ab == Ordering::Less && bc == Ordering::Less && ac != Ordering::Less {
            failures.push(format!("transitivity fails for ({a}, {b}, {c})"));
        }
    }
    Outcome::new(&failures, format!("{sorted} sorts match, comparator is a strict order"))
}

fn main() {
    let start = Instant::now();
    let results = std::thread::scope(|scope| {
        let c1 = scope.spawn(oracle_equivalence);
        let c2 = scope.spawn(table_correctness);
        let c3 = scope.spawn(query_budgets);
        let c45 = scope.spawn(|| {
            let samples = build_samples();
            (construction_scaling(&samples), space_audit(&samples))
        });
        let c6 = scope.spawn(sparse_sa_correctness);
        let c7 = scope.spawn(application);
        let (c4, c5) = c45.join().unwrap();
        [
            ("oracle equivalence", c1.join().unwrap()),
            ("table correctness", c2.join().unwrap()),
            ("query comparison budgets", c3.join().unwrap()),
            ("construction scaling", c4),
            ("space audit", c5),
            ("sparse suffix arrays", c6.join().unwrap()),
            ("suffix sorting", c7.join().unwrap()),
        ]
    });
    let mut all = true;
    for (k, (name, out)) in results.iter().enumerate() {
        all &= out.pass;
        println!(
            "criterion {} {:<26} {}  {}",
            k + 1,
            name,
            if out.pass { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if !all {
        std::process::exit(1);
    }
}
