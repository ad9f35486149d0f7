use super::{mismatch, OmegaTable, ZigzagError};
use crate::exactmath::{RationalFn, UniPoly};

fn y() -> RationalFn {
    RationalFn::from_poly(UniPoly::t())
}

fn f1() -> RationalFn {
    RationalFn::new(UniPoly::one(), UniPoly::from_i64s(&[1, -1])).expect("nonzero denominator")
}

/// `F_m = 1/(F_{m-1}(-y) - y)`.
fn negated_step(prev: &RationalFn) -> Result<RationalFn, ZigzagError> {
    Ok((&prev.compose_neg() - &y()).recip()?)
}

/// `F_m = (y + 2F_{m-1}) / (2 - y^2 - y F_{m-1})`.
fn positive_step(prev: &RationalFn) -> Result<RationalFn, ZigzagError> {
    let two = RationalFn::from_poly(UniPoly::from_i64s(&[2]));
    let num = &y() + &(&two * prev);
    let den = &(&two - &(&y() * &y())) - &(&y() * prev);
    Ok((&num / &den)?)
}

/// `F_m(y) = Σ_n Ω_n(m) y^n` for `m >= 1`, by both first-order recurrences;
/// their reduced forms must coincide.
pub fn f_rational(m: usize) -> Result<RationalFn, ZigzagError> {
    assert!(m >= 1, "F_m needs m >= 1");
    let (mut a, mut b) = (f1(), f1());
    for k in 2..=m {
        a = negated_step(&a)?;
        b = positive_step(&b)?;
        if a != b {
            return Err(mismatch("F_m recurrences", format!("m={k}: {a} vs {b}")));
        }
    }
    Ok(a)
}

/// `(P_m, Q_m)` from `P_1 = 1, Q_1 = 1-y, P_2 = 1+y, Q_2 = 1-y-y^2` and the
/// two-step matrix `[[1, y], [-y, 1-y^2]]`.
pub fn f_pq_pair(m: usize) -> (UniPoly, UniPoly) {
    assert!(m >= 1, "F_m needs m >= 1");
    let mut pair = if m % 2 == 1 {
        (UniPoly::one(), UniPoly::from_i64s(&[1, -1]))
    } else {
        (UniPoly::from_i64s(&[1, 1]), UniPoly::from_i64s(&[1, -1, -1]))
    };
    let y = UniPoly::t();
    let one_minus_y2 = UniPoly::from_i64s(&[1, 0, -1]);
    for _ in 0..(m - 1) / 2 {
        let (p, q) = pair;
        pair = (&p + &(&y * &q), &(-&(&y * &p)) + &(&one_minus_y2 * &q));
    }
    pair
}

/// `F_m` against the matrix form (`deg Q_m = m = 1 + deg P_m`) and its first
/// `terms` series coefficients against column `m` of the table.
pub fn verify_f_rational(m: usize, terms: usize, table: &OmegaTable) -> Result<(), ZigzagError> {
    let f = f_rational(m)?;
    let (p, q) = f_pq_pair(m);
    if p.degree().map(|d| d + 1) != Some(m) || q.degree() != Some(m) {
        return Err(mismatch("F_m degrees", format!("m={m}: {p} over {q}")));
    }
    if RationalFn::new(p, q)? != f {
        return Err(mismatch("F_m matrix form", format!("m={m}")));
    }
    let series = f.series(terms - 1)?;
    for (n, c) in series.iter().enumerate().take(table.max_n() + 1) {
        if c != table.get(n, m) {
            return Err(mismatch("F_m series", format!("m={m} n={n}: {c} vs {}", table.get(n, m))));
        }
    }
    Ok(())
}
