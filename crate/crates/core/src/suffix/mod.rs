//! Full suffix structures: SA-IS suffix sorting, inverse suffix array,
//! Kasai LCP, linear-space RMQ, and the O(n)-space baseline LCE index.

mod arrays;
mod baseline;
mod rmq;
mod sais;

pub use arrays::{build_isa, build_lcp_kasai, SuffixArrays};
pub use baseline::BaselineIndex;
pub use rmq::RmqIndex;
pub use sais::{build_sa_doubling, build_sa_int};
