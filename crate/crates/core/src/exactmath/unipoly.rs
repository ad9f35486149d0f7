use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::MathError;

/// Dense univariate polynomial over the integers.
///
/// `coeffs[k]` is the coefficient of `t^k`. Trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(a + b t)^k`.
    pub fn binomial_power(a: i64, b: i64, k: usize) -> Self {
        Self::from_i64s(&[a, b]).pow(k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Sign of the polynomial at a rational point, via homogeneous integer
    /// evaluation `sum a_k p^k q^(d-k)` with `q > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc.sign()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide by `t^k`, failing if a low-order term would be lost.
    pub fn unshift(&self, k: usize) -> Result<Self, MathError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(MathError::InexactUnivariateDivision);
        }
        Ok(Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// `p(-t)`.
    pub fn compose_neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect() }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Keep only the terms of degree `<= n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// Gcd of the coefficients, always nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    /// Exact division over the integers; fails on a nonzero remainder or a
    /// non-integral quotient coefficient.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<Self, MathError> {
        let Some(dd) = divisor.degree() else {
            return Err(MathError::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(MathError::InexactUnivariateDivision);
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(MathError::InexactUnivariateDivision);
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(MathError::InexactUnivariateDivision);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder scaled by a positive factor only: the result is a
    /// positive multiple of the rational remainder of `self` by `divisor`.
    pub fn positive_pseudo_rem(&self, divisor: &UniPoly) -> Self {
        let dd = divisor.degree().expect("pseudo-remainder by zero polynomial");
        let lead = &divisor.coeffs[dd];
        let lead_abs = lead.abs();
        let lead_sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            // |lc(b)| r - sign(lc(b)) lc(r) t^k b kills the top term.
            let factor = &r.coeffs[rd] * &lead_sign;
            r = &r.scale(&lead_abs) - &divisor.shift(rd - dd).scale(&factor);
            r = r.primitive_part();
        }
        r
    }

    /// Greatest common divisor in Z[t], primitive with positive leading
    /// coefficient (times the gcd of contents).
    pub fn gcd(&self, other: &UniPoly) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part().normalize_sign().scale(&content)
    }

    /// Flip the sign so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Render with a chosen variable name, highest-degree-last, e.g. `1+7t+7t^2+t^3`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(&mut out, c, &monomial_text(var, k));
        }
        out
    }
}

fn monomial_text(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Append `c * mono` to a sum being rendered.
pub(crate) fn write_term(out: &mut String, c: &BigInt, mono: &str) {
    let negative = c.is_negative();
    let abs = c.abs();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push(if negative { '-' } else { '+' });
    }
    if mono.is_empty() || !abs.is_one() {
        out.push_str(&abs.to_string());
    }
    out.push_str(mono);
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl From<BigInt> for UniPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert!(a.div_exact(&p(&[2, 1])).is_err());
        assert!(p(&[1, 2]).div_exact(&p(&[0, 2])).is_err());
    }

    #[test]
    fn gcd_strips_common_factor() {
        let a = &p(&[1, 1]) * &p(&[2, 3]);
        let b = &p(&[1, 1]) * &p(&[5, -1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[6, 12])), p(&[2, 4]));
        assert_eq!(p(&[-1, -1]).gcd(&UniPoly::zero()), p(&[1, 1]));
    }

    #[test]
    fn sign_at_rationals() {
        let f = p(&[-1, 0, 4]); // roots +-1/2
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.sign_at(&half), Sign::NoSign);
        assert_eq!(f.sign_at(&BigRational::zero()), Sign::Minus);
        assert_eq!(f.sign_at(&BigRational::from_integer(3.into())), Sign::Plus);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 7, 7, 1]).to_string(), "1+7t+7t^2+t^3");
        assert_eq!(p(&[0, -1, 2]).display_with("y"), "-y+2y^2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn compose_neg_and_unshift() {
        assert_eq!(p(&[1, 2, 3]).compose_neg(), p(&[1, -2, 3]));
        assert_eq!(p(&[0, 0, 5]).unshift(2).unwrap(), p(&[5]));
        assert!(p(&[1, 1]).unshift(1).is_err());
    }
}
