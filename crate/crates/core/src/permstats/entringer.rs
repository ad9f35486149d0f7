use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{alternating_perms, alternating_perms_starting_with, Orientation};
use crate::exactmath::BiPoly;

/// `E_{n,r}` for `r = 1..=n-1` (index `r - 1`), i.e. the number of up-down
/// permutations of `1..=n` starting with `r`. Row `n = 1` is `[1]`.
pub fn entringer_row(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return Vec::new();
    }
    // prev[r] = E_{k-1,r}, with zeros outside 1..k-1
    let mut prev = vec![BigInt::zero(), BigInt::one(), BigInt::zero()];
    for k in 2..=n {
        let mut row = vec![BigInt::zero(); k + 2];
        for r in (1..k).rev() {
            row[r] = &prev[k - r] + &row[r + 1];
        }
        prev = row;
    }
    if n == 1 {
        return vec![BigInt::one()];
    }
    prev[1..n].to_vec()
}

/// `E_{n,r}`, zero when `r` is outside `1..=n-1` (except `E_{1,1} = 1`).
pub fn entringer(n: usize, r: usize) -> BigInt {
    if n == 1 {
        return if r == 1 { BigInt::one() } else { BigInt::zero() };
    }
    if r == 0 || r >= n {
        return BigInt::zero();
    }
    entringer_row(n)[r - 1].clone()
}

/// `sum s^{ret^-} t^{ret^+}` over up-down permutations of `1..=n` with
/// `u(1) = r`, by enumeration.
pub fn refined_entringer(n: usize, r: usize) -> BiPoly {
    let mut out = BiPoly::zero();
    for u in alternating_perms_starting_with(n, Orientation::UpDown, r) {
        let (a, b) = u.big_return_split();
        out.add_term(a, b, BigInt::one());
    }
    out
}

/// `[U_{n,1}, ..., U_{n,n-1}]` in a single pass. For `n = 1` the single entry
/// is `U_{1,1} = 1`.
pub fn refined_entringer_row(n: usize) -> Vec<BiPoly> {
    let mut row = vec![BiPoly::zero(); n.max(1)];
    for u in alternating_perms(n, Orientation::UpDown) {
        let (a, b) = u.big_return_split();
        row[u.at(1) - 1].add_term(a, b, BigInt::one());
    }
    if n >= 2 {
        row.truncate(n - 1);
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn bp(s: &str) -> BiPoly {
        BiPoly::parse(s).unwrap()
    }

    #[test]
    fn entringer_rows() {
        assert_eq!(entringer_row(2), ints(&[1]));
        assert_eq!(entringer_row(5), ints(&[5, 5, 4, 2]));
        assert_eq!(entringer_row(7), ints(&[61, 61, 56, 46, 32, 16]));
        assert_eq!(entringer(7, 3), BigInt::from(56));
        assert_eq!(entringer(6, 5), BigInt::from(5));
        assert_eq!(entringer(6, 6), BigInt::zero());
        assert_eq!(entringer(6, 0), BigInt::zero());
    }

    #[test]
    fn entringer_matches_enumeration() {
        let euler = [1u64, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521];
        for n in 2..=10 {
            let row = entringer_row(n);
            let total: BigInt = row.iter().sum();
            assert_eq!(total, BigInt::from(euler[n - 1]));
            if n <= 8 {
                for r in 1..n {
                    let count = alternating_perms_starting_with(n, Orientation::UpDown, r).count();
                    assert_eq!(row[r - 1], BigInt::from(count));
                }
            }
        }
    }

    #[test]
    fn refined_examples() {
        assert_eq!(refined_entringer(5, 2), bp("s(2+3t)"));
        assert_eq!(refined_entringer(7, 3), bp("s(1+s)(3+17t+8t^2)"));
        assert_eq!(refined_entringer(7, 4), bp("s(3+6s+7t+s^2+19st+t^2+4st^2+4s^2t+s^2t^2)"));
        let one = BigInt::one();
        for n in 2..=8 {
            for (r, p) in refined_entringer_row(n).iter().enumerate() {
                assert_eq!(p.eval(&one, &one), entringer(n, r + 1));
            }
        }
    }

    #[test]
    fn alpha_forms() {
        let u4: Vec<BiPoly> = ["1+t", "s(1+t)", "s"].iter().map(|s| bp(s)).collect();
        assert_eq!(refined_entringer_row(4), u4);
        let u5: Vec<BiPoly> = ["1+3t+t^2", "s(2+3t)", "s(1+s)(1+t)", "s(1+s)"].iter().map(|s| bp(s)).collect();
        assert_eq!(refined_entringer_row(5), u5);
    }

    #[test]
    fn end_cases() {
        // U_{n+1,1}(s,t) = U_n(t) and U_{n+1,n}(s,t) = s U_{n-1}(s).
        for n in 2..=8 {
            let total = |k: usize| refined_entringer_row(k).iter().fold(BiPoly::zero(), |acc, p| &acc + p).diagonal();
            assert_eq!(refined_entringer(n + 1, 1), BiPoly::from_uni_t(&total(n)));
            let last = refined_entringer(n + 1, n);
            assert_eq!(last, BiPoly::s() * BiPoly::from_uni_s(&total(n - 1)));
        }
    }
}
