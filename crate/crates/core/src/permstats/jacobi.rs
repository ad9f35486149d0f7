use num_bigint::BigInt;
use num_traits::Zero;

use super::Permutation;

/// A Jacobi permutation together with its ordinary and big return counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiPerm {
    pub perm: Permutation,
    pub ret0: usize,
    pub ret1: usize,
}

/// Jacobi permutations of `1..=k` for each `k <= n`, as raw words.
///
/// A Jacobi permutation of a set with minimum `m` and remaining elements `S`
/// is `u m v` where `u` is a Jacobi permutation of an odd-size subset `I` of
/// `S` and `v` one of `S \ I`. The set of Jacobi words of a label set depends
/// only on its size up to order-preserving relabeling, so the recursion is
/// memoized by size.
fn jacobi_words_by_size(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut memo: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for k in 1..=n {
        let mut words = Vec::new();
        // labels 2..=k, the minimum 1 goes in the middle
        let rest: Vec<usize> = (2..=k).collect();
        for mask in 0u64..(1u64 << rest.len()) {
            if mask.count_ones() % 2 == 0 {
                continue;
            }
            let (left, right): (Vec<usize>, Vec<usize>) = rest
                .iter()
                .enumerate()
                .map(|(i, &x)| (mask >> i & 1 == 1, x))
                .fold((Vec::new(), Vec::new()), |(mut l, mut r), (in_left, x)| {
                    if in_left {
                        l.push(x);
                    } else {
                        r.push(x);
                    }
                    (l, r)
                });
            for u in &memo[left.len()] {
                for v in &memo[right.len()] {
                    let mut w: Vec<usize> = u.iter().map(|&i| left[i - 1]).collect();
                    w.push(1);
                    w.extend(v.iter().map(|&i| right[i - 1]));
                    words.push(w);
                }
            }
        }
        if k == 1 {
            words.push(vec![1]);
        }
        words.sort();
        memo.push(words);
    }
    memo
}

/// All Jacobi permutations of `1..=n` in lexicographic order.
pub fn jacobi_perms(n: usize) -> Vec<JacobiPerm> {
    jacobi_words_by_size(n)
        .pop()
        .unwrap_or_default()
        .into_iter()
        .map(|w| {
            let perm = Permutation::from_word_unchecked(w);
            JacobiPerm { ret0: perm.ret_r(0), ret1: perm.ret_r(1), perm }
        })
        .collect()
}

/// Number of Jacobi permutations of `1..=n` with `k` big returns, for
/// `k = 0, 1, ...` up to the largest occurring count.
pub fn jacobi_ret_histogram(n: usize) -> Vec<BigInt> {
    let mut hist: Vec<BigInt> = Vec::new();
    for j in jacobi_perms(n) {
        if hist.len() <= j.ret1 {
            hist.resize(j.ret1 + 1, BigInt::zero());
        }
        hist[j.ret1] += 1;
    }
    hist
}
