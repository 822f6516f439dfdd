use super::sais::build_sa_int;
use crate::text::Text;

/// Full suffix array, its inverse, and the LCP array of a text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArrays {
    pub sa: Vec<usize>,
    pub isa: Vec<usize>,
    pub lcp: Vec<usize>,
}

impl SuffixArrays {
    pub fn build(text: &Text) -> Self {
        let sa = build_sa_int(text.symbols());
        let isa = build_isa(&sa);
        let lcp = build_lcp_kasai(text.symbols(), &sa, &isa);
        SuffixArrays { sa, isa, lcp }
    }
}

pub fn build_isa(sa: &[usize]) -> Vec<usize> {
    let mut isa = vec![0; sa.len()];
    for (rank, &pos) in sa.iter().enumerate() {
        isa[pos] = rank;
    }
    isa
}

/// Kasai et al.: `lcp[r]` is the lcp of the suffixes at ranks `r-1` and `r`.
pub fn build_lcp_kasai<T: Eq>(s: &[T], sa: &[usize], isa: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut lcp = vec![0; n];
    let mut h: usize = 0;
    for i in 0..n {
        let r = isa[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h;
        h = h.saturating_sub(1);
    }
    lcp
}
