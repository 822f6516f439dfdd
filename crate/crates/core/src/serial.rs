//! Binary index files.
//!
//! Layout: the magic `LCE1`, a header of six little-endian `u64` values
//! `(n, sigma, tau, kind, t, p)`, then arrays, each a `u64` length followed
//! by that many `u64` values. Array order per kind:
//!
//! * baseline: `sa`, `isa`, `lcp`
//! * new: sampled `ssa`, sampled `slcp`, class `pi`, class `lval`
//! * tree: tree `pi`, tree `lval`, then the fallback as a nested kind code
//!   followed by its own arrays
//! * combined: sampled `ssa`, sampled `slcp`, class `pi`, class `lval`,
//!   tree `pi`, tree `lval`

use std::io::{Read, Write};

use crate::error::{LceError, Result};
use crate::lce::{
    AnyIndex, ClassIndex, ClassTables, CombinedLceIndex, LceQuery, NewLceIndex, Restriction,
    SampledSuffixes, SamplingGrid, StructureKind, TreeLce, TreeLceIndex,
};
use crate::lce::{d_t, NewRepr};
use crate::stats::BuildStats;
use crate::suffix::{BaselineIndex, RmqIndex};
use crate::text::Text;

const MAGIC: &[u8; 4] = b"LCE1";

fn put(w: &mut impl Write, x: usize) -> Result<()> {
    w.write_all(&(x as u64).to_le_bytes())?;
    Ok(())
}

fn put_array(w: &mut impl Write, a: &[usize]) -> Result<()> {
    put(w, a.len())?;
    let mut buf = Vec::with_capacity(8 * a.len());
    for &x in a {
        buf.extend_from_slice(&(x as u64).to_le_bytes());
    }
    w.write_all(&buf)?;
    Ok(())
}

fn get(r: &mut impl Read) -> Result<usize> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    usize::try_from(u64::from_le_bytes(b)).map_err(|_| LceError::Format("value exceeds usize".into()))
}

fn get_array(r: &mut impl Read, limit: usize) -> Result<Vec<usize>> {
    let len = get(r)?;
    if len > limit {
        return Err(LceError::Format(format!("array of {len} entries exceeds {limit}")));
    }
    (0..len).map(|_| get(r)).collect()
}

fn write_baseline(w: &mut impl Write, b: &BaselineIndex<'_>) -> Result<()> {
    put_array(w, b.sa())?;
    put_array(w, b.isa())?;
    put_array(w, b.lcp())
}

fn write_classes(w: &mut impl Write, c: &ClassIndex) -> Result<()> {
    put_array(w, c.sampled.ssa())?;
    put_array(w, c.sampled.slcp())?;
    let (pi, lval) = c.tables.raw();
    put_array(w, pi)?;
    put_array(w, lval)
}

fn write_tree(w: &mut impl Write, t: &TreeLceIndex) -> Result<()> {
    let (pi, lval) = t.tables().raw();
    put_array(w, pi)?;
    put_array(w, lval)
}

fn write_new(w: &mut impl Write, x: &NewLceIndex<'_>) -> Result<()> {
    match (x.class_index(), x.baseline()) {
        (Some(c), _) => write_classes(w, c),
        (None, Some(b)) => write_baseline(w, b),
        (None, None) => unreachable!(),
    }
}

/// Writes `index` in the `LCE1` format.
pub fn save_index(w: &mut impl Write, index: &AnyIndex<'_>) -> Result<()> {
    let text = index.text();
    let kind = index.kind();
    let (t, p) = match index {
        AnyIndex::Baseline(_) => (1, 0),
        AnyIndex::New(x) => x.grid().map_or((1, 0), |g| (g.t, g.p)),
        AnyIndex::Tree(x) => (x.index().grid().t, x.index().grid().p),
        AnyIndex::Combined(x) => (x.grid().t, x.grid().p),
    };
    w.write_all(MAGIC)?;
    for v in [text.len(), text.sigma() as usize, index.tau(), kind.code() as usize, t, p] {
        put(w, v)?;
    }
    match index {
        AnyIndex::Baseline(b) => write_baseline(w, b)?,
        AnyIndex::New(x) => write_new(w, x)?,
        AnyIndex::Tree(x) => {
            write_tree(w, x.index())?;
            put(w, x.fallback().kind().code() as usize)?;
            write_new(w, x.fallback())?;
        }
        AnyIndex::Combined(x) => {
            write_classes(w, &x.classes)?;
            write_tree(w, &x.tree)?;
        }
    }
    Ok(())
}

fn read_baseline<'a>(r: &mut impl Read, text: &'a Text) -> Result<BaselineIndex<'a>> {
    let n = text.len();
    let sa = get_array(r, n)?;
    let isa = get_array(r, n)?;
    let lcp = get_array(r, n)?;
    if sa.len() != n || isa.len() != n || lcp.len() != n {
        return Err(LceError::Format("suffix arrays must have n entries".into()));
    }
    for (rank, &pos) in sa.iter().enumerate() {
        if pos >= n || isa[pos] != rank {
            return Err(LceError::Format("sa and isa are not inverse permutations".into()));
        }
    }
    if lcp.iter().any(|&l| l > n) {
        return Err(LceError::Format("lcp value exceeds n".into()));
    }
    Ok(BaselineIndex::from_parts(text, sa, isa, RmqIndex::new(lcp), BuildStats::default()))
}

fn read_classes(r: &mut impl Read, grid: SamplingGrid) -> Result<ClassIndex> {
    let m = grid.sampled_count();
    let limit = m * grid.classes().max(1);
    let ssa = get_array(r, m)?;
    let slcp = get_array(r, m)?;
    if ssa.len() != m || slcp.len() != m {
        return Err(LceError::Format("sampled arrays have the wrong size".into()));
    }
    let sampled = SampledSuffixes::from_parts(&grid, ssa, slcp)?;
    let pi = get_array(r, limit)?;
    let lval = get_array(r, limit)?;
    let tables = ClassTables::from_parts(&grid, pi, lval)?;
    Ok(ClassIndex {
        grid,
        tables,
        sampled,
    })
}

fn read_new<'a>(r: &mut impl Read, text: &'a Text, tau: usize, code: u64) -> Result<NewLceIndex<'a>> {
    let n = text.len();
    match StructureKind::from_code(code) {
        Some(StructureKind::Baseline) if tau == 1 => {
            let b = read_baseline(r, text)?;
            Ok(NewLceIndex::from_repr(text, tau, NewRepr::Baseline(b)))
        }
        Some(StructureKind::New) if tau > 1 => {
            let c = read_classes(r, SamplingGrid::for_new(n, tau))?;
            Ok(NewLceIndex::from_repr(text, tau, NewRepr::Sampled(c)))
        }
        _ => Err(LceError::Format(format!("kind {code} does not match tau {tau}"))),
    }
}

/// Reads an `LCE1` index over `text`, validating the header against it.
pub fn load_index<'a>(r: &mut impl Read, text: &'a Text) -> Result<AnyIndex<'a>> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(LceError::Format("bad magic".into()));
    }
    let (n, sigma, tau, code, t, p) = (get(r)?, get(r)?, get(r)?, get(r)? as u64, get(r)?, get(r)?);
    if n != text.len() || sigma != text.sigma() as usize {
        return Err(LceError::Format(format!(
            "index is for n={n}, sigma={sigma}; text has n={}, sigma={}",
            text.len(),
            text.sigma()
        )));
    }
    text.check_tau(tau)?;
    let kind = StructureKind::from_code(code)
        .ok_or_else(|| LceError::Format(format!("unknown structure code {code}")))?;
    let expect = match kind {
        StructureKind::Baseline => (1, 0),
        StructureKind::New => {
            let g = SamplingGrid::for_new(n, tau);
            (g.t, g.p)
        }
        StructureKind::Tree | StructureKind::Combined => {
            let g = SamplingGrid::for_tree(n, tau);
            (g.t, g.p)
        }
        StructureKind::Auto => return Err(LceError::Format("auto is not a stored kind".into())),
    };
    if (t, p) != expect {
        return Err(LceError::Format(format!(
            "grid (t={t}, p={p}) does not match (t={}, p={})",
            expect.0, expect.1
        )));
    }
    Ok(match kind {
        StructureKind::Baseline => AnyIndex::Baseline(read_baseline(r, text)?),
        StructureKind::New => AnyIndex::New(read_new(r, text, tau, code)?),
        StructureKind::Tree => {
            let grid = SamplingGrid::for_tree(n, tau);
            let tree = read_tree(r, grid, Restriction::Full)?;
            let fb = get(r)? as u64;
            let fallback = read_new(r, text, tau, fb)?;
            AnyIndex::Tree(TreeLce::from_parts(text, tau, tree, fallback))
        }
        StructureKind::Combined => {
            let grid = SamplingGrid::for_tree(n, tau);
            let classes = read_classes(r, grid)?;
            let tree = read_tree(r, grid, Restriction::Dist(d_t(n, grid.t)))?;
            AnyIndex::Combined(CombinedLceIndex::assemble(
                text,
                tau,
                classes,
                tree,
                BuildStats::default(),
            ))
        }
        StructureKind::Auto => unreachable!(),
    })
}

fn read_tree(r: &mut impl Read, grid: SamplingGrid, restriction: Restriction) -> Result<TreeLceIndex> {
    let limit = 2 * grid.n + 2;
    let pi = get_array(r, limit)?;
    let lval = get_array(r, limit)?;
    TreeLceIndex::from_parts(grid, restriction, pi, lval)
}
