use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{MathError, UniPoly};

/// Quotient of two integer polynomials in lowest terms.
///
/// The numerator and denominator share no nontrivial common factor in Z[y]
/// and the denominator has a positive leading coefficient, so two equal
/// rational functions have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self { num, den: UniPoly::one() });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g)?, den.div_exact(&g)?);
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self { num: p, den: UniPoly::one() }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Substitute `-y` for `y`.
    pub fn compose_neg(&self) -> Self {
        Self::new(self.num.compose_neg(), self.den.compose_neg()).expect("nonzero denominator stays nonzero")
    }

    pub fn recip(&self) -> Result<Self, MathError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Power series coefficients `c_0..=c_n` at `y = 0`.
    pub fn series(&self, n: usize) -> Result<Vec<BigInt>, MathError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(MathError::NotExpandable);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = self.num.coeff(m);
            for (k, dk) in den.iter().enumerate().skip(1).take(m) {
                acc -= dk * &out[m - k];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(MathError::NonIntegralSeries(d0.to_string()));
            }
            out.push(q);
        }
        Ok(out)
    }
}

/// Coefficients `c_0..=c_n` of the power series of `r` at 0.
pub fn expand_rational_series(r: &RationalFn, n: usize) -> Result<Vec<BigInt>, MathError> {
    r.series(n)
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num.display_with("y"), self.den.display_with("y"))
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Div for &RationalFn {
    type Output = Result<RationalFn, MathError>;
    fn div(self, rhs: &RationalFn) -> Result<RationalFn, MathError> {
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}
