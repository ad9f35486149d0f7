use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{mismatch, OmegaTable, ZigzagError};
use crate::exactmath::{binomial, BiPoly};
use crate::permstats::{alternating_perms, Orientation};

/// `counts[j - 1]` is the number of relaxed P-partitions `f` of the up-down
/// zig-zag on `n` elements, bounded by `m`, with `f(1) = j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedOrderVector {
    pub n: usize,
    pub m: usize,
    pub counts: Vec<BigInt>,
}

impl RefinedOrderVector {
    /// The empty poset, recorded as `(1, 0, ..., 0)` so that the generating
    /// layer is `p q^m`.
    pub fn base(m: usize) -> Self {
        assert!(m >= 1, "bound must be positive");
        let mut counts = vec![BigInt::zero(); m];
        counts[0] = BigInt::one();
        Self { n: 0, m, counts }
    }

    /// `Ω_n(m)`, except that the base vector also totals 1.
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// `Σ_j counts_j p^j q^{m+1-j}` with `p, q` stored as `s, t`.
    pub fn layer(&self) -> BiPoly {
        BiPoly::from_terms(self.counts.iter().enumerate().map(|(i, c)| (i + 1, self.m - i, c.clone())))
    }
}

/// Grow the fence by one element in front: the old first value `j` must be
/// at most `m + 1 - i` once the new first value is `i`, so
/// `counts'[i] = Σ_{j <= m+1-i} counts[j]`.
pub fn refined_step(v: &RefinedOrderVector) -> RefinedOrderVector {
    let m = v.m;
    let mut prefix = Vec::with_capacity(m);
    let mut acc = BigInt::zero();
    for c in &v.counts {
        acc += c;
        prefix.push(acc.clone());
    }
    let counts = (1..=m).map(|i| prefix[m - i].clone()).collect();
    RefinedOrderVector { n: v.n + 1, m, counts }
}

/// The refined vector for `n` elements and bound `m >= 1`.
pub fn refined_vector(n: usize, m: usize) -> RefinedOrderVector {
    let mut v = RefinedOrderVector::base(m);
    for _ in 0..n {
        v = refined_step(&v);
    }
    v
}

/// The layer `Ω_n(p, q; m)` in `p, q` (as `s, t`).
pub fn refined_layer(n: usize, m: usize) -> BiPoly {
    refined_vector(n, m).layer()
}

/// Layers `m = 1..=max_m` of the series `G_n(p, q, x) = Σ_m Ω_n(p, q; m) x^m`.
pub fn g_refined_series(n: usize, max_m: usize) -> Vec<BiPoly> {
    (1..=max_m).map(|m| refined_layer(n, m)).collect()
}

/// Expand `Σ_u pqx (px)^{ret^-} (qx)^{ret^+} / ((1-px)^{u(1)} (1-qx)^{n+1-u(1)})`
/// over up-down permutations `u` of `1..=n` through `x^max_m` and compare it
/// with the refined layers. Reports the first differing `(m, monomial)`.
pub fn verify_gperms(n: usize, max_m: usize) -> Result<(), ZigzagError> {
    assert!(n >= 1, "closed form needs n >= 1");
    let mut layers = vec![BiPoly::zero(); max_m + 1];
    for u in alternating_perms(n, Orientation::UpDown) {
        let (a, b) = u.big_return_split();
        let r = u.at(1);
        let rest = n + 1 - r;
        // x^{1+a+b+i+j} p^{1+a+i} q^{1+b+j}
        for i in 0..max_m {
            for j in 0..max_m {
                let m = 1 + a + b + i + j;
                if m > max_m {
                    break;
                }
                let c = binomial((i + r - 1) as u64, i as u64) * binomial((j + rest - 1) as u64, j as u64);
                layers[m].add_term(1 + a + i, 1 + b + j, c);
            }
        }
    }
    for (m, expected) in g_refined_series(n, max_m).into_iter().enumerate().map(|(i, l)| (i + 1, l)) {
        let diff = &layers[m] - &expected;
        let first = diff.terms().next().map(|(a, b, c)| (a, b, c.clone()));
        if let Some((ds, dt, c)) = first {
            return Err(mismatch(
                "closed-form series and refined layers",
                format!("n={n} m={m}: p^{ds} q^{dt} off by {c}"),
            ));
        }
    }
    Ok(())
}

/// Layer `m` of `G_{n+1}` against `p/(p-q) [G_n(q,p) - G_n(q,q)]`, done on
/// polynomials by clearing the `p - q`.
pub fn check_layer_recurrence(n: usize, m: usize) -> Result<(), ZigzagError> {
    let layer = refined_layer(n, m);
    let diag = BiPoly::from_uni_t(&layer.diagonal());
    let bracket = &layer.swap_vars() - &diag;
    let p_minus_q = &BiPoly::s() - &BiPoly::t();
    let predicted = &BiPoly::s() * &bracket.div_exact(&p_minus_q)?;
    let actual = refined_layer(n + 1, m);
    if predicted != actual {
        return Err(mismatch("layer recurrence", format!("n={n} m={m}: {predicted} vs {actual}")));
    }
    Ok(())
}

/// `Ω_{n+1}(m) = d/dq [Ω_n(1, q; m)]_{q=1}` against the table entry.
pub fn check_layer_derivative(n: usize, m: usize, table: &OmegaTable) -> Result<(), ZigzagError> {
    let derived = refined_layer(n, m).eval_s(&BigInt::one()).derivative().eval(&BigInt::one());
    let expected = table.get(n + 1, m);
    if &derived != expected {
        return Err(mismatch("layer derivative", format!("n={n} m={m}: {derived} vs {expected}")));
    }
    Ok(())
}
