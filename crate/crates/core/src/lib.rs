//! Longest common extension (LCE) queries in sublinear space.
//!
//! For a text of length `n` and a sampling rate `tau`, the indexes here use
//! `O(n / tau)` words beyond the text, are built with `O(n * tau)` symbol
//! operations from a stream of sparse suffix arrays, and answer
//! `lce(i, j)` with `O(tau * min(log tau, log(n / tau)))` character
//! comparisons.
//!
//! ```
//! use sublce::{build_auto, LceQuery, QueryStats, Text};
//!
//! let text = Text::normalize(b"abaababaabaab");
//! let index = build_auto(&text, 2).unwrap();
//! let mut stats = QueryStats::new();
//! assert_eq!(index.lce(0, 3, &mut stats).unwrap(), 3);
//! ```

pub mod app;
pub mod corpus;
pub mod error;
pub mod lce;
pub mod serial;
pub mod sparse;
pub mod stats;
pub mod suffix;
pub mod text;

pub use app::{
    bench_config, compare_suffixes, sort_with_index, sparse_suffix_sort, verify_index, verify_text, BenchRecord,
    BenchReport, Mismatch, VerifyReport,
};
pub use corpus::{generate, CorpusKind};
pub use error::{LceError, Result};
pub use lce::{
    build, build_auto, build_combined, build_interval_tree, build_new_index, build_tree_index,
    classify_sk, query_combined, query_new, query_tree, AnyIndex, AutoIndex, CombinedLceIndex,
    IntervalTree, LceQuery, NewLceIndex, Restriction, SamplingGrid, StructureKind, TreeLce,
    TreeLceIndex,
};
pub use serial::{load_index, save_index};
pub use sparse::{build_ca, build_pair_round, extend_ca_prev_offset, CharSortArray, PairRound, Rounds};
pub use stats::{BuildStats, QueryStats, TraceStep};
pub use suffix::{BaselineIndex, RmqIndex, SuffixArrays};
pub use text::{naive_lce, Text};
