//! Evenly spaced sparse suffix arrays in O(n/τ) space: meta-character
//! sorting by LSD radix passes, pair rounds over two offsets, and the sparse
//! inverse/Kasai tools.

mod kasai;
mod meta;
mod round;

pub use kasai::{sparse_isa_rep, sparse_kasai};
pub use meta::{build_ca, extend_ca_prev_offset, CharSortArray, MetaView};
pub use round::{build_pair_round, PairRound, Rounds};
