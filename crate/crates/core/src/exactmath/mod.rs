//! Exact polynomial and rational-function arithmetic over arbitrary-precision
//! integers, plus palindromicity, gamma expansions and real-root tools.

mod bipoly;
mod gamma;
mod rational_fn;
mod roots;
mod unipoly;

pub use bipoly::{BiPoly, ParseError};
pub use gamma::{gamma_expand, palindromic_profile, GammaVector};
pub use rational_fn::{expand_rational_series, RationalFn};
pub use roots::{
    interlace_check, is_log_concave_positive, is_real_rooted, isolate_real_roots, real_root_count, squarefree_part,
    sturm_sequence, RootInterval,
};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact univariate division")]
    InexactUnivariateDivision,
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("not expandable at 0: denominator has zero constant term")]
    NotExpandable,
    #[error("series has non-integral coefficients: denominator constant term is {0}")]
    NonIntegralSeries(String),
    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("no gamma expansion: {0}")]
    NoGammaExpansion(String),
    #[error("not real-rooted: {which}")]
    NotRealRooted { which: String },
}

/// `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    use num_traits::One;
    if k > n {
        return num_bigint::BigInt::default();
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
