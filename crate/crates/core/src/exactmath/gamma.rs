use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{MathError, UniPoly};

/// Coefficients of a polynomial in the basis `t^i (1+t)^(d-2i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaVector {
    pub gammas: Vec<BigInt>,
    pub palindromic_degree: usize,
}

impl GammaVector {
    pub fn reconstruct(&self) -> UniPoly {
        let d = self.palindromic_degree;
        let mut out = UniPoly::zero();
        for (i, g) in self.gammas.iter().enumerate() {
            let basis = UniPoly::binomial_power(1, 1, d - 2 * i).shift(i);
            out = &out + &basis.scale(g);
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| g >= &BigInt::zero())
    }
}

/// Whether `h` satisfies `t^d h(1/t) = h(t)` where `d` is the sum of its
/// lowest and highest exponents, together with that `d`.
pub fn palindromic_profile(h: &UniPoly) -> Result<(bool, usize), MathError> {
    let (Some(lo), Some(hi)) = (h.low_degree(), h.degree()) else {
        return Err(MathError::ZeroPolynomial("palindromic degree"));
    };
    let c = h.coeffs();
    let palindromic = (lo..=hi).all(|k| c[k] == c[lo + hi - k]);
    Ok((palindromic, lo + hi))
}

/// Expand a polynomial palindromic about degree `d` in the gamma basis.
pub fn gamma_expand(h: &UniPoly, d: usize) -> Result<GammaVector, MathError> {
    if h.degree().is_some_and(|deg| deg > d) {
        return Err(MathError::NoGammaExpansion(format!("degree exceeds {d}")));
    }
    if (0..=d).any(|k| h.coeff(k) != h.coeff(d - k)) {
        return Err(MathError::NoGammaExpansion(format!("not palindromic about degree {d}")));
    }
    let mut rest = h.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            let basis = UniPoly::binomial_power(1, 1, d - 2 * i).shift(i);
            rest = &rest - &basis.scale(&g);
        }
        gammas.push(g);
    }
    debug_assert!(rest.is_zero(), "palindromic input leaves no remainder");
    Ok(GammaVector { gammas, palindromic_degree: d })
}
