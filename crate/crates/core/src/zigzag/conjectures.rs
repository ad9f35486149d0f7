use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::eulerian::z_from_omega;
use super::{b2_summands, mismatch, omega_table, u_bipoly_chain, UBivariate, ZigzagError};
use crate::exactmath::{interlace_check, is_log_concave_positive, is_real_rooted, UniPoly};
use crate::permstats::jacobi_ret_histogram;

/// Status string for the Frankl-Füredi-Kalai part, which has no arithmetic
/// test here.
pub const FFK_STATUS: &str = "not checked";

/// Outcome of the open real-rootedness questions for one `n`. Failures are
/// findings, never errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    /// `Z_n(t)/t` has only real roots.
    pub real_rooted: bool,
    /// `z(n, 0..=n-2)` is positive and log-concave.
    pub log_concave: bool,
    /// The two summands of the derivative recurrence for `Z_{n+1}`
    /// interlace.
    pub interlacing: bool,
    pub ffk: String,
    pub notes: Vec<String>,
}

impl ConjectureReport {
    pub fn all_hold(&self) -> bool {
        self.real_rooted && self.log_concave && self.interlacing
    }
}

fn check_one(n: usize, z: &UniPoly, u: &UBivariate) -> Result<ConjectureReport, ZigzagError> {
    let h = z.unshift(1)?;
    let mut notes = Vec::new();
    let real_rooted = is_real_rooted(&h)?;
    let log_concave = is_log_concave_positive(h.coeffs());
    let (f, g) = b2_summands(u)?;
    let interlacing = match interlace_check(&f, &g) {
        Ok(b) => b,
        Err(e) => {
            notes.push(format!("interlacing: {e}"));
            false
        }
    };
    Ok(ConjectureReport { n, real_rooted, log_concave, interlacing, ffk: FFK_STATUS.to_string(), notes })
}

/// Real-rootedness, log-concavity and interlacing for `n = 1..=max_n`.
/// Errors only when the underlying polynomials cannot be built consistently.
pub fn conjecture_suite(max_n: usize) -> Result<Vec<ConjectureReport>, ZigzagError> {
    let table = omega_table(max_n, max_n + 1)?;
    let chain = u_bipoly_chain(max_n)?;
    let zs = (1..=max_n)
        .map(|n| {
            let z = z_from_omega(&table, n)?;
            if z != chain[n].diagonal()?.shift(1) {
                return Err(mismatch("Z_n routes", format!("n={n}")));
            }
            Ok(z)
        })
        .collect::<Result<Vec<_>, ZigzagError>>()?;
    (1..=max_n).into_par_iter().map(|n| check_one(n, &zs[n - 1], &chain[n])).collect()
}

/// Whether big returns over Jacobi permutations of `1..=n` are distributed
/// like `z(n, ·)`. An observation, so callers should report rather than
/// assert.
pub fn jacobi_histogram_matches(n: usize, z: &UniPoly) -> bool {
    let hist = jacobi_ret_histogram(n);
    let want: Vec<BigInt> = z.coeffs().iter().skip(1).cloned().collect();
    hist == want
}
