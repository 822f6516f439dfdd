use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use sublce::{
    bench_config, build, generate, load_index, save_index, sort_with_index, verify_index, verify_text,
    AnyIndex, BenchReport, CorpusKind, LceError, LceQuery, QueryStats, StructureKind, Text,
};

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "sublce", version, about = "Sublinear-space longest common extension indexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index and print its size and construction work.
    Build {
        #[command(flatten)]
        index: IndexArgs,
        /// Write the index to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Answer the "i j" pairs of a file, one "i<TAB>j<TAB>lce" line each.
    Query {
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long)]
        pairs: PathBuf,
        /// Load a saved index instead of building one.
        #[arg(long)]
        load: Option<PathBuf>,
    },
    /// Check every structure against the naive scan and the baseline.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        tau_grid: Vec<usize>,
        /// Also check a saved index.
        #[arg(long)]
        load: Option<PathBuf>,
        /// Check all pairs up to this length, random pairs above it.
        #[arg(long, default_value_t = 256)]
        exhaustive_n: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Measure build work, table size and per-query comparisons.
    Bench {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        tau_grid: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [Structure::New, Structure::Tree, Structure::Combined])]
        structures: Vec<Structure>,
    },
    /// Sort suffixes with an LCE comparator.
    Ssort {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tau: usize,
        /// Newline-separated positions; all positions if omitted.
        #[arg(long)]
        positions: Option<PathBuf>,
    },
    /// Write a synthetic corpus.
    Gen {
        #[arg(long)]
        kind: Corpus,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct IndexArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    tau: usize,
    #[arg(long, value_enum, default_value_t = Structure::Auto)]
    structure: Structure,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Structure {
    New,
    Tree,
    Combined,
    Auto,
    Baseline,
}

impl From<Structure> for StructureKind {
    fn from(s: Structure) -> Self {
        match s {
            Structure::New => StructureKind::New,
            Structure::Tree => StructureKind::Tree,
            Structure::Combined => StructureKind::Combined,
            Structure::Auto => StructureKind::Auto,
            Structure::Baseline => StructureKind::Baseline,
        }
    }
}

impl std::fmt::Display for Structure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(StructureKind::from(*self).name())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Corpus {
    Random,
    Periodic,
    Fibonacci,
    ThueMorse,
}

impl From<Corpus> for CorpusKind {
    fn from(c: Corpus) -> Self {
        match c {
            Corpus::Random => CorpusKind::Random,
            Corpus::Periodic => CorpusKind::Periodic,
            Corpus::Fibonacci => CorpusKind::Fibonacci,
            Corpus::ThueMorse => CorpusKind::ThueMorse,
        }
    }
}

/// Failure with its exit code.
enum Failure {
    Usage(anyhow::Error),
    Io(anyhow::Error),
    Mismatch(String),
}

impl From<LceError> for Failure {
    fn from(e: LceError) -> Self {
        match e {
            LceError::Io(_) | LceError::Format(_) => Failure::Io(e.into()),
            _ => Failure::Usage(e.into()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn io_err<E: Into<anyhow::Error>>(path: &Path) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Io(e.into().context(format!("{}", path.display())))
}

fn read_text(path: &Path) -> Outcome<Text> {
    let raw = fs::read(path).map_err(io_err(path))?;
    Ok(Text::normalize(&raw))
}

fn parse_numbers(path: &Path, per_line: usize) -> Outcome<Vec<Vec<usize>>> {
    let s = fs::read_to_string(path).map_err(io_err(path))?;
    let mut out = Vec::new();
    for (k, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .with_context(|| format!("{}:{}: expected integers", path.display(), k + 1))
            .map_err(Failure::Usage)?;
        if nums.len() != per_line {
            return Err(Failure::Usage(anyhow::anyhow!(
                "{}:{}: expected {per_line} value(s), found {}",
                path.display(),
                k + 1,
                nums.len()
            )));
        }
        out.push(nums);
    }
    Ok(out)
}

fn write_out(mut f: impl FnMut(&mut dyn Write) -> io::Result<()>) -> Outcome<()> {
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    f(&mut w)
        .and_then(|_| w.flush())
        .map_err(|e| Failure::Io(anyhow::Error::new(e).context("stdout")))
}

fn run(cli: Cli) -> Outcome<()> {
    match cli.command {
        Command::Build { index, out } => {
            let text = read_text(&index.input)?;
            let idx = build(&text, index.tau, index.structure.into())?;
            let st = idx.build_stats();
            if let Some(path) = out {
                let mut f = BufWriter::new(fs::File::create(&path).map_err(io_err(&path))?);
                save_index(&mut f, &idx)?;
                f.flush().map_err(io_err(&path))?;
            }
            write_out(|w| {
                writeln!(w, "structure\t{}", idx.kind())?;
                writeln!(w, "n\t{}", text.len())?;
                writeln!(w, "sigma\t{}", text.sigma())?;
                writeln!(w, "tau\t{}", index.tau)?;
                writeln!(w, "table_entries\t{}", idx.table_entries())?;
                writeln!(w, "build_ops\t{}", st.symbol_ops)?;
                writeln!(w, "peak_live_entries\t{}", st.peak_live_entries)
            })
        }
        Command::Query { index, pairs, load } => {
            let text = read_text(&index.input)?;
            let pairs = parse_numbers(&pairs, 2)?;
            let idx: AnyIndex = match load {
                Some(path) => {
                    let mut f = io::BufReader::new(fs::File::open(&path).map_err(io_err(&path))?);
                    load_index(&mut f, &text)?
                }
                None => build(&text, index.tau, index.structure.into())?,
            };
            let mut st = QueryStats::new();
            let answers = pairs
                .iter()
                .map(|p| idx.lce(p[0], p[1], &mut st))
                .collect::<Result<Vec<_>, _>>()?;
            write_out(|w| {
                for (p, l) in pairs.iter().zip(&answers) {
                    writeln!(w, "{}\t{}\t{l}", p[0], p[1])?;
                }
                Ok(())
            })
        }
        Command::Verify {
            input,
            tau_grid,
            load,
            exhaustive_n,
            samples,
            seed,
        } => {
            let text = read_text(&input)?;
            let mut report = verify_text(&text, &tau_grid, exhaustive_n, samples, seed)?;
            if let Some(path) = load {
                let mut f = io::BufReader::new(fs::File::open(&path).map_err(io_err(&path))?);
                let idx = load_index(&mut f, &text)?;
                let extra = verify_index(&idx, exhaustive_n, samples, seed)?;
                report.queries += extra.queries;
                report.mismatches.extend(extra.mismatches);
            }
            write_out(|w| {
                writeln!(w, "queries\t{}", report.queries)?;
                writeln!(w, "mismatches\t{}", report.mismatches.len())?;
                for m in report.mismatches.iter().take(20) {
                    writeln!(
                        w,
                        "mismatch\t{}\ttau={}\t{}\t{}\texpected={}\tgot={}",
                        m.kind, m.tau, m.i, m.j, m.expected, m.got
                    )?;
                }
                Ok(())
            })?;
            if report.mismatches.is_empty() {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!(
                    "{} mismatching answers",
                    report.mismatches.len()
                )))
            }
        }
        Command::Bench {
            input,
            tau_grid,
            queries,
            seed,
            structures,
        } => {
            let text = read_text(&input)?;
            for &tau in &tau_grid {
                if tau == 0 || tau > text.len() {
                    return Err(LceError::InvalidTau { tau, n: text.len() }.into());
                }
            }
            let configs: Vec<(usize, StructureKind)> = tau_grid
                .iter()
                .flat_map(|&tau| structures.iter().map(move |&s| (tau, s.into())))
                .collect();
            let records = std::thread::scope(|scope| {
                let handles: Vec<_> = configs
                    .iter()
                    .map(|&(tau, kind)| {
                        let text = &text;
                        scope.spawn(move || bench_config(text, tau, kind, queries, seed))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("bench worker panicked"))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let report = BenchReport { records };
            write_out(|w| w.write_all(report.to_tsv().as_bytes()))
        }
        Command::Ssort {
            input,
            tau,
            positions,
        } => {
            let text = read_text(&input)?;
            let positions: Vec<usize> = match positions {
                Some(path) => parse_numbers(&path, 1)?.into_iter().map(|v| v[0]).collect(),
                None => (0..text.len()).collect(),
            };
            let idx = build(&text, tau, StructureKind::Auto)?;
            let (order, _) = sort_with_index(&idx, &positions, &mut QueryStats::new())?;
            write_out(|w| {
                for p in &order {
                    writeln!(w, "{p}")?;
                }
                Ok(())
            })
        }
        Command::Gen {
            kind,
            n,
            sigma,
            seed,
            out,
        } => {
            let bytes = generate(kind.into(), n, sigma, seed)?;
            fs::write(&out, bytes).map_err(io_err(&out))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
