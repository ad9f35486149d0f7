use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{mismatch, refined_vector, ZigzagError};

/// `Ω_n(m)` for `0 <= n <= max_n`, `0 <= m <= max_m`: the number of relaxed
/// P-partitions of the up-down zig-zag on `n` elements with values in `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaTable {
    max_n: usize,
    max_m: usize,
    // rows[n][m]
    #[serde(with = "crate::zigzag::cache::decimal_table")]
    rows: Vec<Vec<BigInt>>,
}

impl OmegaTable {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    pub fn get(&self, n: usize, m: usize) -> &BigInt {
        &self.rows[n][m]
    }

    /// Row `n` as `Ω_n(0..=max_m)`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Sub-table, for serving smaller requests from a larger cached table.
    pub fn restrict(&self, max_n: usize, max_m: usize) -> Option<Self> {
        if max_n > self.max_n || max_m > self.max_m {
            return None;
        }
        let rows = self.rows[..=max_n].iter().map(|r| r[..=max_m].to_vec()).collect();
        Some(Self { max_n, max_m, rows })
    }

    pub(crate) fn from_rows(rows: Vec<Vec<BigInt>>) -> Option<Self> {
        let max_n = rows.len().checked_sub(1)?;
        let max_m = rows[0].len().checked_sub(1)?;
        rows.iter().all(|r| r.len() == max_m + 1).then_some(Self { max_n, max_m, rows })
    }
}

fn boundary(n: usize, m: usize) -> Option<BigInt> {
    match (n, m) {
        (0, _) => Some(BigInt::one()),
        (_, 0) => Some(BigInt::zero()),
        (1, m) => Some(BigInt::from(m)),
        _ => None,
    }
}

/// Fill a table column by column from a rule for the interior cells.
fn fill<F>(max_n: usize, max_m: usize, rule: F) -> Vec<Vec<BigInt>>
where
    F: Fn(&[Vec<BigInt>], usize, usize) -> BigInt,
{
    let mut t = vec![vec![BigInt::zero(); max_m + 1]; max_n + 1];
    for m in 0..=max_m {
        for n in 0..=max_n {
            t[n][m] = boundary(n, m).unwrap_or_else(|| rule(&t, n, m));
        }
    }
    t
}

/// Split on the first position where `f` reaches `m`, reading the fence
/// down-up; that position is odd.
fn down_up_split(t: &[Vec<BigInt>], n: usize, m: usize) -> BigInt {
    let mut acc = t[n][m - 1].clone();
    for i in (0..).map(|j| 2 * j).take_while(|&i| i < n) {
        acc += &t[i][m - 1] * &t[n - 1 - i][m];
    }
    acc
}

/// Same split on the up-down reading: either `f(1) = f(2) = m` or the
/// first maximum sits at an even position.
fn up_down_split(t: &[Vec<BigInt>], n: usize, m: usize) -> BigInt {
    let mut acc = &t[n][m - 1] + &t[n - 2][m];
    for i in (0..).map(|j| 2 * j + 1).take_while(|&i| i < n) {
        acc += &t[i][m - 1] * &t[n - 1 - i][m];
    }
    acc
}

/// An independent recurrence for `Ω_n(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaRoute {
    /// First maximum on the down-up reading of the fence.
    DownUpSplit,
    /// First maximum on the up-down reading.
    UpDownSplit,
    /// Totals of the refined prefix-sum vectors.
    RefinedTotals,
}

/// `Ω_n(m)` for `n <= max_n`, `m <= max_m` by a single route, unchecked.
pub fn omega_by_route(route: OmegaRoute, max_n: usize, max_m: usize) -> Vec<Vec<BigInt>> {
    match route {
        OmegaRoute::DownUpSplit => fill(max_n, max_m, down_up_split),
        OmegaRoute::UpDownSplit => fill(max_n, max_m, up_down_split),
        OmegaRoute::RefinedTotals => (0..=max_n)
            .map(|n| {
                (0..=max_m)
                    .map(|m| if m == 0 { boundary(n, 0).expect("boundary") } else { refined_vector(n, m).total() })
                    .collect()
            })
            .collect(),
    }
}

/// The table of `Ω_n(m)`, computed three ways (two first-maximum
/// decompositions and the refined prefix-sum recurrence) which must agree.
pub fn omega_table(max_n: usize, max_m: usize) -> Result<OmegaTable, ZigzagError> {
    let a = omega_by_route(OmegaRoute::DownUpSplit, max_n, max_m);
    let b = omega_by_route(OmegaRoute::UpDownSplit, max_n, max_m);
    let c = omega_by_route(OmegaRoute::RefinedTotals, max_n, max_m);
    for n in 0..=max_n {
        for m in 0..=max_m {
            if a[n][m] != b[n][m] {
                return Err(mismatch("omega recurrences", format!("n={n} m={m}: {} vs {}", a[n][m], b[n][m])));
            }
            if c[n][m] != a[n][m] {
                return Err(mismatch("omega refined totals", format!("n={n} m={m}: {} vs {}", c[n][m], a[n][m])));
            }
        }
    }
    Ok(OmegaTable { max_n, max_m, rows: a })
}

/// The sum and difference of the two decompositions:
/// `2Ω_n(m) = 2Ω_n(m-1) + Ω_{n-2}(m) + Σ_{j<n} Ω_j(m-1)Ω_{n-1-j}(m)` and
/// `Ω_{n-2}(m) = Σ_{j<n} (-1)^j Ω_j(m-1)Ω_{n-1-j}(m)`, for `n >= 2, m >= 1`.
pub fn check_omega_identities(table: &OmegaTable) -> Result<(), ZigzagError> {
    let t = &table.rows;
    for n in 2..=table.max_n {
        for m in 1..=table.max_m {
            let mut sum = BigInt::zero();
            let mut alt = BigInt::zero();
            for j in 0..n {
                let term = &t[j][m - 1] * &t[n - 1 - j][m];
                if j % 2 == 0 {
                    alt += &term;
                } else {
                    alt -= &term;
                }
                sum += term;
            }
            let doubled = &t[n][m] * 2;
            if doubled != &t[n][m - 1] * 2 + &t[n - 2][m] + sum {
                return Err(mismatch("doubled identity", format!("n={n} m={m}")));
            }
            if alt != t[n - 2][m] {
                return Err(mismatch("alternating identity", format!("n={n} m={m}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstats::Orientation;
    use crate::posets::{order_poly_value, zigzag_poset, Labeling};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn table_values() {
        let t = omega_table(10, 8).unwrap();
        assert_eq!(t.row(10)[1..], ints(&[1, 144, 4004, 48620, 358671, 1897214, 7911970, 27604798])[..]);
        assert_eq!(*t.get(8, 5), BigInt::from(29056));
        assert_eq!(*t.get(7, 6), BigInt::from(26585));
        assert_eq!(*t.get(5, 4), BigInt::from(246));
        assert!((0..=10).all(|n| t.get(n, 1).is_one()));
        assert_eq!(t.row(2)[..5], ints(&[0, 1, 3, 6, 10])[..]);
    }

    #[test]
    fn agrees_with_brute_force() {
        let t = omega_table(9, 8).unwrap();
        for n in 1..=8 {
            let plain = zigzag_poset(n, Orientation::UpDown, Labeling::Plain);
            let natural = zigzag_poset(n, Orientation::UpDown, Labeling::Natural);
            for m in 1..=6 {
                assert_eq!(order_poly_value(&plain, 1, m), *t.get(n, m), "relaxed n={n} m={m}");
                assert_eq!(order_poly_value(&natural, 0, m), *t.get(n, m), "natural n={n} m={m}");
            }
        }
    }

    #[test]
    fn identities_hold() {
        check_omega_identities(&omega_table(12, 10).unwrap()).unwrap();
    }

    #[test]
    fn restrict_and_rebuild() {
        let t = omega_table(6, 5).unwrap();
        assert_eq!(t.restrict(4, 3).unwrap(), omega_table(4, 3).unwrap());
        assert!(t.restrict(7, 3).is_none());
        assert_eq!(OmegaTable::from_rows(t.rows().to_vec()).unwrap(), t);
    }
}
