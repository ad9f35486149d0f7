use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{MathError, UniPoly};

/// An isolating interval for a single real root.
///
/// When `lo == hi` the root is exactly that rational; otherwise the root lies
/// in the open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    fn disjoint(&self, other: &RootInterval) -> bool {
        match (self.is_exact(), other.is_exact()) {
            (true, true) => self.lo != other.lo,
            _ => self.hi <= other.lo || other.hi <= self.lo,
        }
    }
}

/// `f / gcd(f, f')`, primitive with positive leading coefficient.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly, MathError> {
    if f.is_zero() {
        return Err(MathError::ZeroPolynomial("squarefree part"));
    }
    let g = f.gcd(&f.derivative());
    Ok(f.div_exact(&g)?.primitive_part().normalize_sign())
}

/// Sturm chain `f, f', -rem(f, f'), ...` with each member replaced by a
/// positive multiple of itself to keep coefficients integral and small.
pub fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![f.primitive_part()];
    let d = f.derivative().primitive_part();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = seq[n - 2].positive_pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r.primitive_part());
    }
    seq
}

fn variations<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in signs {
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn lc_sign(p: &UniPoly) -> Sign {
    p.leading_coeff().map_or(Sign::NoSign, |c| c.sign())
}

fn variations_at_pos_inf(seq: &[UniPoly]) -> usize {
    variations(seq.iter().map(lc_sign))
}

fn variations_at_neg_inf(seq: &[UniPoly]) -> usize {
    variations(seq.iter().map(|p| {
        let s = lc_sign(p);
        if p.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

fn variations_at(seq: &[UniPoly], x: &BigRational) -> usize {
    variations(seq.iter().map(|p| p.sign_at(x)))
}

/// Number of distinct real roots of `h`.
pub fn real_root_count(h: &UniPoly) -> Result<usize, MathError> {
    let sf = squarefree_part(h)?;
    let seq = sturm_sequence(&sf);
    Ok(variations_at_neg_inf(&seq) - variations_at_pos_inf(&seq))
}

/// All complex roots of `h` are real (counted without multiplicity on the
/// squarefree part). Nonzero constants count as real-rooted.
pub fn is_real_rooted(h: &UniPoly) -> Result<bool, MathError> {
    let sf = squarefree_part(h)?;
    Ok(real_root_count(h)? == sf.degree().unwrap_or(0))
}

/// All roots lie strictly inside `(-b, b)` for this Cauchy bound.
fn cauchy_bound(f: &UniPoly) -> BigRational {
    let lc = f.leading_coeff().expect("nonzero").abs();
    let deg = f.degree().unwrap_or(0);
    let max = f.coeffs()[..deg].iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::one() + BigRational::new(max, lc)
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

struct Isolator {
    f: UniPoly,
    seq: Vec<UniPoly>,
}

impl Isolator {
    fn new(f: &UniPoly) -> Result<Self, MathError> {
        let f = squarefree_part(f)?;
        let seq = sturm_sequence(&f);
        Ok(Self { f, seq })
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        variations_at(&self.seq, a) - variations_at(&self.seq, b)
    }

    fn isolate(&self) -> Vec<RootInterval> {
        let mut out = Vec::new();
        if self.f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let b = cauchy_bound(&self.f);
        let a = -b.clone();
        let n = self.count(&a, &b);
        self.split(a, b, n, &mut out);
        out
    }

    fn split(&self, a: BigRational, b: BigRational, n: usize, out: &mut Vec<RootInterval>) {
        match n {
            0 => {}
            1 if self.f.sign_at(&b) == Sign::NoSign => out.push(RootInterval { lo: b.clone(), hi: b }),
            1 => out.push(RootInterval { lo: a, hi: b }),
            _ => {
                let mid = (&a + &b) / two();
                let left = self.count(&a, &mid);
                self.split(a, mid.clone(), left, out);
                self.split(mid, b, n - left, out);
            }
        }
    }

    /// Halve an inexact isolating interval, possibly landing on the root.
    fn refine(&self, iv: &RootInterval) -> RootInterval {
        if iv.is_exact() {
            return iv.clone();
        }
        let mid = (&iv.lo + &iv.hi) / two();
        if self.f.sign_at(&mid) == Sign::NoSign {
            return RootInterval { lo: mid.clone(), hi: mid };
        }
        if self.count(&iv.lo, &mid) == 1 {
            RootInterval { lo: iv.lo.clone(), hi: mid }
        } else {
            RootInterval { lo: mid, hi: iv.hi.clone() }
        }
    }
}

/// Disjoint isolating intervals for the distinct real roots of `f`, in
/// increasing order.
pub fn isolate_real_roots(f: &UniPoly) -> Result<Vec<RootInterval>, MathError> {
    Ok(Isolator::new(f)?.isolate())
}

/// True iff the distinct real roots of `f` and `g` weakly alternate: every
/// closed interval between consecutive roots of one polynomial contains a
/// root of the other. Shared roots are allowed.
pub fn interlace_check(f: &UniPoly, g: &UniPoly) -> Result<bool, MathError> {
    for (p, which) in [(f, "first"), (g, "second")] {
        if !is_real_rooted(p)? {
            return Err(MathError::NotRealRooted { which: format!("{which} polynomial {p}") });
        }
    }
    let (sf, sg) = (squarefree_part(f)?, squarefree_part(g)?);
    let shared = sf.gcd(&sg);
    // Three pairwise coprime squarefree factors: roots of f only, g only, both.
    let parts = [(sf.div_exact(&shared)?, true, false), (sg.div_exact(&shared)?, false, true), (shared, true, true)];
    let mut roots: Vec<(RootInterval, usize)> = Vec::new();
    let mut isolators = Vec::new();
    for (idx, (p, _, _)) in parts.iter().enumerate() {
        let iso = Isolator::new(p)?;
        roots.extend(iso.isolate().into_iter().map(|iv| (iv, idx)));
        isolators.push(iso);
    }
    loop {
        let mut clash = None;
        'outer: for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if !roots[i].0.disjoint(&roots[j].0) {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = clash else { break };
        for k in [i, j] {
            let (iv, idx) = &roots[k];
            roots[k].0 = isolators[*idx].refine(iv);
        }
    }
    // an exact root p sorts before an open interval (p, x)
    roots.sort_by(|a, b| a.0.lo.cmp(&b.0.lo).then_with(|| a.0.hi.cmp(&b.0.hi)));
    let membership: Vec<(bool, bool)> = roots.iter().map(|(_, idx)| (parts[*idx].1, parts[*idx].2)).collect();
    Ok(alternates(&membership, |m| m.0, |m| m.1) && alternates(&membership, |m| m.1, |m| m.0))
}

/// Between any two consecutive `a`-roots (inclusive) there is a `b`-root.
fn alternates<F, G>(sorted: &[(bool, bool)], is_a: F, is_b: G) -> bool
where
    F: Fn(&(bool, bool)) -> bool,
    G: Fn(&(bool, bool)) -> bool,
{
    let a_pos: Vec<usize> = (0..sorted.len()).filter(|&k| is_a(&sorted[k])).collect();
    a_pos.windows(2).all(|w| (w[0]..=w[1]).any(|k| is_b(&sorted[k])))
}

/// All entries positive and `c_k^2 >= c_{k-1} c_{k+1}` at every interior index.
/// An empty list is not considered log-concave.
pub fn is_log_concave_positive(c: &[BigInt]) -> bool {
    if c.is_empty() || c.iter().any(|x| !x.is_positive()) {
        return false;
    }
    c.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn root_count_examples() {
        assert_eq!(real_root_count(&p(&[1, 7, 7, 1])).unwrap(), 3);
        assert_eq!(real_root_count(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(real_root_count(&p(&[1, 3, 1])).unwrap(), 2);
        assert!(real_root_count(&UniPoly::zero()).is_err());
        assert!(is_real_rooted(&p(&[1, 7, 7, 1])).unwrap());
        assert!(!is_real_rooted(&p(&[1, 0, 1])).unwrap());
        assert!(is_real_rooted(&p(&[5])).unwrap());
    }

    #[test]
    fn multiple_roots_use_squarefree_part() {
        // (t+1)^3 (t-2)^2
        let f = &UniPoly::binomial_power(1, 1, 3) * &UniPoly::binomial_power(-2, 1, 2);
        assert_eq!(real_root_count(&f).unwrap(), 2);
        assert!(is_real_rooted(&f).unwrap());
        assert_eq!(squarefree_part(&f).unwrap(), p(&[-2, -1, 1]));
    }

    #[test]
    fn isolation_finds_exact_and_inexact_roots() {
        // roots -1, 0, 1/2, +-sqrt(2)
        let f = &(&p(&[0, 1, 1]) * &p(&[-1, 2])) * &p(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&f).unwrap();
        assert_eq!(ivs.len(), 5);
        for w in ivs.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        let half = BigRational::new(1.into(), 2.into());
        assert!(
            ivs.iter().any(|iv| iv.is_exact() && iv.lo == half) || ivs.iter().any(|iv| iv.lo < half && half < iv.hi)
        );
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlace_check(&p(&[0, 1, 1]), &p(&[1, 2])).unwrap());
        assert!(interlace_check(&p(&[1, 2]), &p(&[0, 1, 1])).unwrap());
        assert!(matches!(interlace_check(&p(&[1, 0, 1]), &p(&[0, 1])), Err(MathError::NotRealRooted { .. })));
        // roots {0,1} vs {2,3}: fails
        assert!(!interlace_check(&p(&[0, -1, 1]), &p(&[6, -5, 1])).unwrap());
        // shared roots are allowed
        assert!(interlace_check(&p(&[0, -1, 1]), &p(&[0, -1, 1])).unwrap());
        // roots +-sqrt(2) vs +-sqrt(3): fails; vs 0: passes
        assert!(!interlace_check(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap());
        assert!(interlace_check(&p(&[-2, 0, 1]), &p(&[0, 1])).unwrap());
    }

    #[test]
    fn log_concavity_examples() {
        assert!(is_log_concave_positive(&ints(&[1, 7, 7, 1])));
        assert!(!is_log_concave_positive(&ints(&[1, 1, 2])));
        assert!(is_log_concave_positive(&ints(&[1, 46, 334, 623, 334, 46, 1])));
        assert!(!is_log_concave_positive(&ints(&[1, 0, 1])));
        assert!(!is_log_concave_positive(&[]));
    }

    fn poly_from_parts(roots: &[i64], quad: &[i64]) -> UniPoly {
        let mut f = UniPoly::one();
        for &r in roots {
            f = &f * &p(&[-r, 1]);
        }
        for &a in quad {
            f = &f * &p(&[a, 0, 1]);
        }
        f
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn count_matches_constructed_roots(
            roots in prop::collection::vec(-6i64..6, 0..6),
            quad in prop::collection::vec(1i64..5, 0..2),
            scale in 1i64..4,
        ) {
            let f = poly_from_parts(&roots, &quad).scale(&BigInt::from(scale));
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(real_root_count(&f).unwrap(), distinct.len());
            prop_assert_eq!(isolate_real_roots(&f).unwrap().len(), distinct.len());
            prop_assert_eq!(is_real_rooted(&f).unwrap(), quad.is_empty());
        }

        #[test]
        fn count_matches_sturm_endpoints(c in prop::collection::vec(-9i64..9, 1..10)) {
            let f = p(&c);
            prop_assume!(!f.is_zero());
            let seq = sturm_sequence(&squarefree_part(&f).unwrap());
            let n = variations_at_neg_inf(&seq) - variations_at_pos_inf(&seq);
            prop_assert_eq!(real_root_count(&f).unwrap(), n);
            prop_assert_eq!(isolate_real_roots(&f).unwrap().len(), n);
        }

        #[test]
        fn interlacing_symmetric_and_scale_invariant(
            a in prop::collection::vec(-5i64..5, 1..4),
            b in prop::collection::vec(-5i64..5, 1..4),
            k in 1i64..5,
        ) {
            let f = poly_from_parts(&a, &[]);
            let g = poly_from_parts(&b, &[]);
            let fg = interlace_check(&f, &g).unwrap();
            prop_assert_eq!(fg, interlace_check(&g, &f).unwrap());
            prop_assert_eq!(fg, interlace_check(&f.scale(&BigInt::from(k)), &g).unwrap());
            // oracle on integer roots
            let mut ra = a.clone(); ra.sort(); ra.dedup();
            let mut rb = b.clone(); rb.sort(); rb.dedup();
            let between = |xs: &[i64], ys: &[i64]| xs.windows(2).all(|w| ys.iter().any(|y| w[0] <= *y && *y <= w[1]));
            prop_assert_eq!(fg, between(&ra, &rb) && between(&rb, &ra));
        }
    }
}
