//! Linear-time suffix sorting over integer alphabets (SA-IS).

/// Suffix array of an integer sequence.
///
/// Values may be any `u32`; the bucket arrays are sized by the largest value,
/// so callers should keep values bounded by the sequence length plus a small
/// constant to stay linear.
pub fn build_sa_int(seq: &[u32]) -> Vec<usize> {
    let upper = seq.iter().copied().max().unwrap_or(0) as usize;
    let s: Vec<usize> = seq.iter().map(|&c| c as usize).collect();
    sa_is(&s, upper)
}

const NONE: usize = usize::MAX;

fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }

    // ls[i]: suffix i is S-type (smaller than suffix i+1).
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] {
            ls[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }

    // sum_l[c]: start of bucket c; sum_s[c]: start of the S-part of bucket c.
    let mut sum_l = vec![0usize; upper + 1];
    let mut sum_s = vec![0usize; upper + 1];
    for i in 0..n {
        if !ls[i] {
            sum_s[s[i]] += 1;
        } else {
            sum_l[s[i] + 1] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        if c < upper {
            sum_l[c + 1] += sum_s[c];
        }
    }

    let mut sa = vec![NONE; n];
    let induce = |lms: &[usize], sa: &mut [usize]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            if d == n {
                continue;
            }
            sa[buf[s[d]]] = d;
            buf[s[d]] += 1;
        }
        buf.copy_from_slice(&sum_l);
        sa[buf[s[n - 1]]] = n - 1;
        buf[s[n - 1]] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !ls[v - 1] {
                sa[buf[s[v - 1]]] = v - 1;
                buf[s[v - 1]] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && ls[v - 1] {
                buf[s[v - 1] + 1] -= 1;
                sa[buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    let mut lms_map = vec![NONE; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !ls[i - 1] && ls[i] {
            lms_map[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();

    induce(&lms, &mut sa);

    if m > 0 {
        let mut sorted_lms: Vec<usize> = sa.iter().copied().filter(|&v| lms_map[v] != NONE).collect();
        let mut rec_s = vec![0usize; m];
        let mut rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for i in 1..m {
            let mut l = sorted_lms[i - 1];
            let mut r = sorted_lms[i];
            let end_l = if lms_map[l] + 1 < m { lms[lms_map[l] + 1] } else { n };
            let end_r = if lms_map[r] + 1 < m { lms[lms_map[r] + 1] } else { n };
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l {
                    if s[l] != s[r] {
                        break;
                    }
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }

        let rec_sa = sa_is(&rec_s, rec_upper);
        for (slot, &r) in sorted_lms.iter_mut().zip(&rec_sa) {
            *slot = lms[r];
        }
        induce(&sorted_lms, &mut sa);
    }
    sa
}

/// Reference sorter by prefix doubling, O(n log^2 n). Kept for cross-checks.
pub fn build_sa_doubling(seq: &[u32]) -> Vec<usize> {
    let n = seq.len();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = seq.iter().map(|&c| c as usize + 1).collect();
    let mut tmp = vec![0usize; n];
    let mut k = 1;
    while n > 1 {
        let key = |i: usize| (rank[i], if i + k < n { rank[i + k] } else { 0 });
        sa.sort_by_key(|&i| key(i));
        tmp[sa[0]] = 1;
        for w in 1..n {
            tmp[sa[w]] = tmp[sa[w - 1]] + usize::from(key(sa[w - 1]) < key(sa[w]));
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1]] == n {
            break;
        }
        k *= 2;
    }
    sa
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(seq: &[u32]) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..seq.len()).collect();
        sa.sort_by(|&a, &b| seq[a..].cmp(&seq[b..]));
        sa
    }

    #[test]
    fn examples() {
        assert_eq!(build_sa_int(&[2, 1, 3, 1, 3, 1]), vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(build_sa_int(&[1]), vec![0]);
        assert_eq!(build_sa_int(&[1, 1, 1]), vec![2, 1, 0]);
        assert!(build_sa_int(&[]).is_empty());
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(build_sa_doubling(&[2, 1, 3, 1, 3, 1]), vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(build_sa_doubling(&[1, 1, 1]), vec![2, 1, 0]);
    }

    proptest! {
        #[test]
        fn sais_matches_naive(seq in proptest::collection::vec(0u32..5, 0..300)) {
            let expect = naive(&seq);
            prop_assert_eq!(build_sa_int(&seq), expect.clone());
            prop_assert_eq!(build_sa_doubling(&seq), expect);
        }

        #[test]
        fn sais_large_alphabet(seq in proptest::collection::vec(0u32..1000, 0..200)) {
            prop_assert_eq!(build_sa_int(&seq), naive(&seq));
        }
    }
}
