use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::unipoly::write_term;
use super::{MathError, UniPoly};

/// Sparse bivariate polynomial over the integers, keyed by `(deg_s, deg_t)`.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, ds: usize, dt: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(ds, dt, c);
        p
    }

    pub fn s() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// Build from `(deg_s, deg_t, coeff)` triples; repeated keys are summed.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (ds, dt, c) in terms {
            p.add_term(ds, dt, c);
        }
        p
    }

    /// Embed a univariate polynomial in `s`.
    pub fn from_uni_s(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k, 0, c.clone())))
    }

    /// Embed a univariate polynomial in `t`.
    pub fn from_uni_t(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (0, k, c.clone())))
    }

    pub fn add_term(&mut self, ds: usize, dt: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((ds, dt)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(ds, dt));
        }
    }

    pub fn coeff(&self, ds: usize, dt: usize) -> BigInt {
        self.terms.get(&(ds, dt)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_s(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.0 + k.1).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms().map(|(a, b, x)| (a, b, x * c)))
    }

    /// Multiply by `s^a t^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        Self { terms: self.terms.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exchange the roles of `s` and `t`.
    pub fn swap_vars(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    /// Restrict to the diagonal `s = t`.
    pub fn diagonal(&self) -> UniPoly {
        let deg = self.total_degree().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (a, b, c) in self.terms() {
            coeffs[a + b] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitute `s = x`, leaving a polynomial in `t`.
    pub fn eval_s(&self, x: &BigInt) -> UniPoly {
        let mut out = UniPoly::zero();
        for (a, b, c) in self.terms() {
            out = &out + &UniPoly::monomial(c * x.pow(a as u32), b);
        }
        out
    }

    /// Substitute `t = y`, leaving a polynomial in `s`.
    pub fn eval_t(&self, y: &BigInt) -> UniPoly {
        self.swap_vars().eval_s(y)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms().map(|(a, b, c)| c * x.pow(a as u32) * y.pow(b as u32)).sum()
    }

    pub fn partial_s(&self) -> Self {
        Self::from_terms(self.terms().filter(|&(a, _, _)| a > 0).map(|(a, b, c)| (a - 1, b, c * BigInt::from(a))))
    }

    pub fn partial_t(&self) -> Self {
        self.swap_vars().partial_s().swap_vars()
    }

    /// Coefficient of `s^a` as a polynomial in `t`.
    pub fn coeff_s(&self, a: usize) -> UniPoly {
        let deg = self.degree_t().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (x, y, c) in self.terms() {
            if x == a {
                coeffs[y] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// The homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        Self { terms: self.terms.iter().filter(|(&(a, b), _)| a + b == d).map(|(k, c)| (*k, c.clone())).collect() }
    }

    /// Leading term in lexicographic order, `s` before `t`.
    fn lead(&self) -> Option<((usize, usize), &BigInt)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// Exact division: returns `q` with `q * den == self`, or an error that
    /// carries the first non-reducible remainder.
    pub fn div_exact(&self, den: &BiPoly) -> Result<Self, MathError> {
        let Some(((ls, lt), lc)) = den.lead() else {
            return Err(MathError::DivisionByZero);
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(((rs, rt), rc)) = rem.lead() {
            if rs < ls || rt < lt {
                return Err(MathError::InexactDivision { remainder: rem.to_string() });
            }
            let (q, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return Err(MathError::InexactDivision { remainder: rem.to_string() });
            }
            let step = Self::monomial(q, rs - ls, rt - lt);
            rem = &rem - &(&step * den);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    pub fn display_with(&self, x: &str, y: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        // graded, then by descending power of x
        keys.sort_by(|a, b| (a.0 + a.1).cmp(&(b.0 + b.1)).then(b.0.cmp(&a.0)));
        let mut out = String::new();
        for (a, b) in keys {
            let mut mono = String::new();
            for (v, e) in [(x, a), (y, b)] {
                match e {
                    0 => {}
                    1 => mono.push_str(v),
                    _ => mono.push_str(&format!("{v}^{e}")),
                }
            }
            write_term(&mut out, &self.terms[&(a, b)], &mono);
        }
        out
    }

    /// Parse expressions such as `s(1+s)(3+17t+8t^2)` or `2s(1+t)(1+5s+2s^2)`.
    ///
    /// Juxtaposition is multiplication; `^` takes a nonnegative integer
    /// exponent; the variables are `s` and `t`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Self::parse_vars(text, 's', 't')
    }

    pub fn parse_vars(text: &str, x: char, y: char) -> Result<Self, ParseError> {
        let bytes: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser { chars: &bytes, pos: 0, x, y };
        let p = parser.expr()?;
        if parser.pos != bytes.len() {
            return Err(parser.err("unexpected trailing input"));
        }
        Ok(p)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    x: char,
    y: char,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut negate = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negate = c == '-';
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            if c == '(' || c == '*' || c.is_ascii_digit() || c == self.x || c == self.y {
                if c == '*' {
                    self.pos += 1;
                }
                acc = &acc * &self.factor()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly, ParseError> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => BiPoly::constant(self.number()?),
            Some(c) if c == self.x => {
                self.pos += 1;
                BiPoly::s()
            }
            Some(c) if c == self.y => {
                self.pos += 1;
                BiPoly::t()
            }
            _ => return Err(self.err("expected a number, variable or '('")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            let e: usize = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("s", "t"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (a, b, c) in rhs.terms() {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (a, b, c) in rhs.terms() {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (a, b, x) in self.terms() {
            for (c, d, y) in rhs.terms() {
                out.add_term(a + c, b + d, x * y);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<&UniPoly> for BiPoly {
    /// Embeds as a polynomial in `t`.
    fn from(p: &UniPoly) -> Self {
        Self::from_uni_t(p)
    }
}

impl BiPoly {
    /// True when every coefficient is positive.
    pub fn has_positive_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}
