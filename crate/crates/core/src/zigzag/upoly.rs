use num_bigint::BigInt;
use num_traits::One;

use super::{mismatch, ZigzagError};
use crate::exactmath::{BiPoly, UniPoly};
use crate::permstats::{alternating_perms, Orientation};

/// `U_n(s, t) = numerator / (1 - s)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UBivariate {
    pub n: usize,
    pub numerator: BiPoly,
    pub k: usize,
}

/// Largest `u(1)` over up-down permutations of `1..=n`.
fn denominator_exponent(n: usize) -> usize {
    match n {
        0 => 0,
        1 => 1,
        n => n - 1,
    }
}

fn one_minus_s() -> BiPoly {
    &BiPoly::one() - &BiPoly::s()
}

fn one_minus_t() -> BiPoly {
    &BiPoly::one() - &BiPoly::t()
}

impl UBivariate {
    /// `U_n(t, t)`, a polynomial.
    pub fn diagonal(&self) -> Result<UniPoly, ZigzagError> {
        Ok(self.numerator.diagonal().div_exact(&UniPoly::binomial_power(1, -1, self.k))?)
    }

    /// `U_{n+1}` from `(1-t)/(s-t) [((1-t)/(1-s))^{n+1} s U_n(t,s) - t U_n(t,t)]`
    /// with the denominators cleared, so both divisions are exact.
    fn step(&self) -> Result<Self, ZigzagError> {
        let (n, k) = (self.n, self.k);
        let diag = BiPoly::from_uni_t(&self.diagonal()?);
        let swapped = &BiPoly::s() * &self.numerator.swap_vars();
        let left = &one_minus_t().pow(n + 2 - k) * &swapped;
        let right = &(&(&BiPoly::t() * &one_minus_t()) * &diag) * &one_minus_s().pow(n + 1);
        let quotient = (&left - &right).div_exact(&(&BiPoly::s() - &BiPoly::t()))?;
        let k_next = denominator_exponent(n + 1);
        let numerator = quotient.div_exact(&one_minus_s().pow(n + 1 - k_next))?;
        if k_next > 0 && numerator.eval_s(&BigInt::one()).is_zero() {
            return Err(mismatch("U_n denominator", format!("n={}: numerator vanishes at s=1", n + 1)));
        }
        Ok(Self { n: n + 1, numerator, k: k_next })
    }

    /// `s`, `t`-form of the fraction, for display.
    pub fn display(&self) -> String {
        match self.k {
            0 => self.numerator.display_with("s", "t"),
            1 => format!("({})/(1-s)", self.numerator.display_with("s", "t")),
            k => format!("({})/(1-s)^{k}", self.numerator.display_with("s", "t")),
        }
    }
}

/// `U_0, ..., U_{max_n}` by the recurrence, starting from `U_0 = 1`.
pub fn u_bipoly_chain(max_n: usize) -> Result<Vec<UBivariate>, ZigzagError> {
    let mut chain = vec![UBivariate { n: 0, numerator: BiPoly::one(), k: 0 }];
    for _ in 0..max_n {
        let next = chain.last().expect("nonempty").step()?;
        chain.push(next);
    }
    Ok(chain)
}

pub fn u_bipoly(n: usize) -> Result<UBivariate, ZigzagError> {
    Ok(u_bipoly_chain(n)?.pop().expect("nonempty"))
}

/// `U_n` summed directly over up-down permutations.
pub fn u_brute(n: usize) -> UBivariate {
    if n == 0 {
        return UBivariate { n, numerator: BiPoly::one(), k: 0 };
    }
    let k = denominator_exponent(n);
    let mut numerator = BiPoly::zero();
    for u in alternating_perms(n, Orientation::UpDown) {
        let (a, b) = u.big_return_split();
        let r = u.at(1);
        let term = &one_minus_t().pow(r) * &one_minus_s().pow(k - r);
        numerator = &numerator + &term.shift(a, b);
    }
    UBivariate { n, numerator, k }
}

/// `U_{n+1}(t) = t(1-t) [∂_t U_n(s,t)]_{s=t} + (1+nt) U_n(t)`.
pub fn u_deriv_step(u: &UBivariate) -> Result<UniPoly, ZigzagError> {
    let n = u.n;
    let dt = u.numerator.partial_t().diagonal();
    let cleared =
        &(&UniPoly::from_i64s(&[0, 1, -1]) * &dt) + &(&UniPoly::from_i64s(&[1, n as i64]) * &u.numerator.diagonal());
    Ok(cleared.div_exact(&UniPoly::binomial_power(1, -1, u.k))?)
}

/// The two summands of `Z_{n+1}(t) = t(1-t) d/dt[t U_n(s,t)]_{s=t} + (n+1) t Z_n(t)`.
pub fn b2_summands(u: &UBivariate) -> Result<(UniPoly, UniPoly), ZigzagError> {
    let n = u.n;
    let t_num = u.numerator.shift(0, 1);
    let cleared = &UniPoly::from_i64s(&[0, 1, -1]) * &t_num.partial_t().diagonal();
    let f = cleared.div_exact(&UniPoly::binomial_power(1, -1, u.k))?;
    let g = u.diagonal()?.shift(2).scale(&BigInt::from(n + 1));
    Ok((f, g))
}
