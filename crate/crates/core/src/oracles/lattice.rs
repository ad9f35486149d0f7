use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sum over sequences `x_1..x_n` in `0..=m` where each adjacent pair passes
/// `ok(i, x_i, x_{i+1})`, by a left-to-right transfer vector.
fn count_sequences(n: usize, m: usize, ok: impl Fn(usize, usize, usize) -> bool) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut ways = vec![BigInt::one(); m + 1];
    for i in 1..n {
        let mut next = vec![BigInt::zero(); m + 1];
        for (b, slot) in next.iter_mut().enumerate() {
            for (a, w) in ways.iter().enumerate() {
                if ok(i, a, b) {
                    *slot += w;
                }
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// Order ideals of `Z_n × I_m`, encoded by column heights
/// `a_1 <= a_2 >= a_3 <= ...` with `0 <= a_i <= m`.
pub fn count_order_ideals(n: usize, m: usize) -> BigInt {
    count_sequences(n, m, |i, a, b| if i % 2 == 1 { a <= b } else { a >= b })
}

/// Lattice points `y ∈ {0..m}^n` with `y_i + y_{i+1} <= m`: the `m`-th dilate
/// of the chain polytope of the fence. The same count enumerates magic
/// labelings of the path on `n + 1` vertices with sum `m`.
pub fn count_chain_polytope_points(n: usize, m: usize) -> BigInt {
    count_sequences(n, m, |_, a, b| a + b <= m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(n: usize, m: usize, ok: impl Fn(&[usize]) -> bool) -> usize {
        let mut count = 0;
        let mut y = vec![0; n];
        loop {
            if ok(&y) {
                count += 1;
            }
            let Some(i) = (0..n).find(|&i| y[i] < m) else { return count };
            y[i] += 1;
            y[..i].iter_mut().for_each(|v| *v = 0);
        }
    }

    #[test]
    fn examples() {
        assert_eq!(count_order_ideals(7, 5), BigInt::from(26585));
        assert_eq!(count_order_ideals(5, 1), BigInt::from(13));
        assert_eq!(count_chain_polytope_points(5, 1), BigInt::from(13));
        assert_eq!(count_chain_polytope_points(4, 2), BigInt::from(31));
        for n in 1..6 {
            assert!(count_order_ideals(n, 0).is_one());
            assert!(count_chain_polytope_points(n, 0).is_one());
        }
    }

    #[test]
    fn transfer_matches_enumeration() {
        for n in 1..=5 {
            for m in 0..=3 {
                let ideals = brute(n, m, |a| {
                    a.windows(2).enumerate().all(|(i, w)| if i % 2 == 0 { w[0] <= w[1] } else { w[0] >= w[1] })
                });
                let points = brute(n, m, |y| y.windows(2).all(|w| w[0] + w[1] <= m));
                assert_eq!(count_order_ideals(n, m), BigInt::from(ideals), "n={n} m={m}");
                assert_eq!(count_chain_polytope_points(n, m), BigInt::from(points), "n={n} m={m}");
            }
        }
    }

    proptest! {
        #[test]
        fn chain_polytope_reversal(n in 1usize..7, m in 0usize..5, w in proptest::collection::vec(0usize..5, 7)) {
            // reversing a point keeps it in the dilate
            let y: Vec<usize> = w.into_iter().take(n).map(|v| v.min(m)).collect();
            let inside = |y: &[usize]| y.windows(2).all(|p| p[0] + p[1] <= m);
            let rev: Vec<usize> = y.iter().rev().copied().collect();
            prop_assert_eq!(inside(&y), inside(&rev));
        }
    }
}
