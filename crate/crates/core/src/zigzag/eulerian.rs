use num_bigint::BigInt;

use super::{mismatch, omega_table, u_bipoly, u_bipoly_chain, OmegaTable, ZigzagError};
use crate::exactmath::{binomial, gamma_expand, GammaVector, UniPoly};
use crate::posets::{chainlink_poset, linear_extensions};

/// `Z_n(t)` from a table holding `Ω_n(0..=n+1)`: the first `n + 2`
/// coefficients of `(1-t)^{n+1} Σ_m Ω_n(m) t^m`. Everything above degree
/// `n - 1` must vanish (`Z_1 = t` is the one exception).
pub(crate) fn z_from_omega(table: &OmegaTable, n: usize) -> Result<UniPoly, ZigzagError> {
    let series = UniPoly::from_coeffs(table.row(n)[..=n + 1].to_vec());
    let z = (&UniPoly::binomial_power(1, -1, n + 1) * &series).truncate(n + 1);
    if z.degree().is_some_and(|d| d + 1 > n.max(2)) {
        return Err(mismatch("order series and Eulerian degree", format!("n={n}: {z}")));
    }
    Ok(z)
}

/// The zig-zag Eulerian polynomial `Z_n(t)`, `n >= 1`, by differencing the
/// order polynomial and cross-checked against `t U_n(t, t)`.
pub fn z_poly(n: usize) -> Result<UniPoly, ZigzagError> {
    assert!(n >= 1, "Z_n needs n >= 1");
    let z = z_from_omega(&omega_table(n, n + 1)?, n)?;
    let via_u = u_bipoly(n)?.diagonal()?.shift(1);
    if z != via_u {
        return Err(mismatch("Z_n routes", format!("n={n}: {z} vs {via_u}")));
    }
    Ok(z)
}

/// `Z_1, ..., Z_{max_n}` in one pass, both routes shared across `n`.
pub fn z_polys(max_n: usize) -> Result<Vec<UniPoly>, ZigzagError> {
    let table = omega_table(max_n, max_n + 1)?;
    let chain = u_bipoly_chain(max_n)?;
    (1..=max_n)
        .map(|n| {
            let z = z_from_omega(&table, n)?;
            let via_u = chain[n].diagonal()?.shift(1);
            if z != via_u {
                return Err(mismatch("Z_n routes", format!("n={n}: {z} vs {via_u}")));
            }
            Ok(z)
        })
        .collect()
}

/// Gamma vector of `Z_n(t)/t` about degree `n - 2` (degree 0 for `n = 1`).
pub fn gamma_vector(n: usize) -> Result<GammaVector, ZigzagError> {
    gamma_from_z(&z_poly(n)?, n)
}

/// As [`gamma_vector`] for an already computed `Z_n(t)`.
pub fn gamma_from_z(z: &UniPoly, n: usize) -> Result<GammaVector, ZigzagError> {
    Ok(gamma_expand(&z.unshift(1)?, n.max(2) - 2)?)
}

/// `Z^r_n(t) = Σ t^{1 + des_r(π)}` over linear extensions of the rank-`r`
/// chainlink poset, by enumeration.
pub fn zr_poly(n: usize, r: usize) -> UniPoly {
    let mut counts: Vec<BigInt> = Vec::new();
    for pi in linear_extensions(&chainlink_poset(n, r)) {
        let k = 1 + pi.des_r(r);
        if counts.len() <= k {
            counts.resize(k + 1, BigInt::default());
        }
        counts[k] += 1;
    }
    UniPoly::from_coeffs(counts)
}

/// Gamma vector of `Z^r_n(t)/t` about degree `n - r - 1` (0 when `n <= r + 1`).
pub fn zr_gamma_vector(n: usize, r: usize) -> Result<GammaVector, ZigzagError> {
    let h = zr_poly(n, r).unshift(1)?;
    Ok(gamma_expand(&h, (n + 1).saturating_sub(r + 2))?)
}

/// Narayana polynomial `C_j(t) = Σ_k N(j,k) t^{k-1}`, `j >= 1`.
pub fn narayana(j: usize) -> UniPoly {
    let j64 = j as u64;
    UniPoly::from_coeffs((1..=j64).map(|k| binomial(j64, k) * binomial(j64, k - 1) / BigInt::from(j64)).collect())
}

/// Classical Eulerian polynomial with the extra factor `t`, from
/// `A_{n+1} = t(1-t)A_n' + (n+1)t A_n`, `A_1 = t`.
pub fn classical_eulerian(n: usize) -> UniPoly {
    assert!(n >= 1, "A_n needs n >= 1");
    let t_one_minus_t = UniPoly::from_i64s(&[0, 1, -1]);
    let mut a = UniPoly::t();
    for k in 1..n {
        a = &(&t_one_minus_t * &a.derivative()) + &a.shift(1).scale(&BigInt::from(k + 1));
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstats::Permutation;

    fn coeffs_from(z: &UniPoly, lo: usize) -> Vec<i64> {
        z.coeffs()[lo..].iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn zigzag_eulerian_examples() {
        assert_eq!(z_poly(1).unwrap(), UniPoly::t());
        assert_eq!(z_poly(5).unwrap().to_string(), "t+7t^2+7t^3+t^4");
        assert_eq!(coeffs_from(&z_poly(9).unwrap(), 1), [1, 79, 937, 2951, 2951, 937, 79, 1]);
        assert_eq!(coeffs_from(&z_poly(10).unwrap(), 1), [1, 133, 2475, 12331, 20641, 12331, 2475, 133, 1]);
    }

    #[test]
    fn batch_matches_single() {
        let zs = z_polys(8).unwrap();
        for (i, z) in zs.iter().enumerate() {
            assert_eq!(*z, z_poly(i + 1).unwrap());
        }
    }

    #[test]
    fn palindromic() {
        for n in 2..=12 {
            let z = z_poly(n).unwrap();
            for k in 0..=n - 2 {
                assert_eq!(z.coeff(k + 1), z.coeff(n - 1 - k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn gamma_vectors() {
        let as_i64 = |g: GammaVector| g.gammas.iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(gamma_vector(8).unwrap()), [1, 40, 159, 45]);
        assert_eq!(as_i64(gamma_vector(10).unwrap()), [1, 125, 1697, 3612, 665]);
        assert_eq!(as_i64(gamma_vector(3).unwrap()), [1]);
        assert_eq!(as_i64(gamma_vector(1).unwrap()), [1]);
        for n in 1..=12 {
            let g = gamma_vector(n).unwrap();
            assert!(g.is_nonnegative(), "n={n}");
            assert_eq!(g.reconstruct().shift(1), z_poly(n).unwrap());
        }
    }

    #[test]
    fn classical_matches_descents() {
        assert_eq!(classical_eulerian(1), UniPoly::t());
        assert_eq!(classical_eulerian(3).to_string(), "t+4t^2+t^3");
        assert_eq!(classical_eulerian(4).to_string(), "t+11t^2+11t^3+t^4");
        for n in 1..=7 {
            let mut counts = vec![BigInt::default(); n + 1];
            for w in Permutation::all(n) {
                counts[1 + w.des_r(0)] += 1;
            }
            assert_eq!(classical_eulerian(n), UniPoly::from_coeffs(counts));
        }
    }

    #[test]
    fn chainlink_eulerian() {
        assert_eq!(coeffs_from(&zr_poly(9, 2), 1), [1, 30, 181, 320, 181, 30, 1]);
        assert_eq!(coeffs_from(&zr_poly(10, 3), 1), [1, 22, 113, 190, 113, 22, 1]);
        for n in 1..=7 {
            assert_eq!(zr_poly(n, 0), classical_eulerian(n));
            assert_eq!(zr_poly(n, 1), z_poly(n).unwrap());
        }
        for r in 0..=4 {
            for j in 1..=r + 1 {
                assert_eq!(zr_poly(j, r), UniPoly::t(), "j={j} r={r}");
            }
            for j in 1..=r + 2 {
                assert_eq!(zr_poly(r + j, r), narayana(j).shift(1), "j={j} r={r}");
            }
        }
        assert_eq!(narayana(3).to_string(), "1+3t+t^2");
    }

    #[test]
    fn chainlink_gamma_nonnegative() {
        for r in 0..=3 {
            for n in 1..=9 {
                let g = zr_gamma_vector(n, r).unwrap();
                assert!(g.is_nonnegative(), "n={n} r={r}");
                assert_eq!(g.reconstruct().shift(1), zr_poly(n, r));
            }
        }
    }
}
