use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{linear_extensions, Poset};
use crate::exactmath::binomial;
use crate::permstats::Permutation;

/// An `r`-relaxed P-partition with values in `1..=bound`.
///
/// For each cover `i <_P j` it satisfies `f(i) <= f(j)` when `i <= j + r`
/// and `f(i) < f(j)` when `i > j + r`. With `r = 0` these are ordinary
/// P-partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PPartition {
    /// `values[k]` is `f(k + 1)`.
    pub values: Vec<usize>,
    pub bound: usize,
    pub relax: usize,
}

/// Which pairs of a poset carry the relaxed inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Scope {
    Covers,
    #[cfg_attr(not(test), allow(dead_code))]
    AllRelations,
}

/// Per-element bounds against earlier labels, for backtracking in label order.
#[derive(Clone, Debug)]
struct Constraints {
    // (earlier label, strict): f(k) >= f(other) + strict
    lower: Vec<Vec<(usize, usize)>>,
    // (earlier label, strict): f(k) <= f(other) - strict
    upper: Vec<Vec<(usize, usize)>>,
}

impl Constraints {
    fn build(p: &Poset, r: usize, scope: Scope) -> Self {
        let n = p.len();
        let mut lower = vec![Vec::new(); n + 1];
        let mut upper = vec![Vec::new(); n + 1];
        let pairs = match scope {
            Scope::Covers => p.covers(),
            Scope::AllRelations => p.relations(),
        };
        for (i, j) in pairs {
            let strict = usize::from(i > j + r);
            if i < j {
                lower[j].push((i, strict));
            } else {
                upper[i].push((j, strict));
            }
        }
        Self { lower, upper }
    }

    /// Admissible value range for label `k` given `f(1..k)`; empty when lo > hi.
    fn range(&self, k: usize, f: &[usize], m: usize) -> (usize, usize) {
        let lo = self.lower[k].iter().map(|&(o, s)| f[o - 1] + s).max().unwrap_or(1).max(1);
        let hi = self.upper[k].iter().map(|&(o, s)| f[o - 1].saturating_sub(s)).min().unwrap_or(m).min(m);
        (lo, hi)
    }

    fn count(&self, f: &mut Vec<usize>, n: usize, m: usize) -> u64 {
        let k = f.len() + 1;
        if k > n {
            return 1;
        }
        let (lo, hi) = self.range(k, f, m);
        let mut total = 0;
        for v in lo..=hi {
            f.push(v);
            total += self.count(f, n, m);
            f.pop();
        }
        total
    }
}

/// Lexicographic stream of the `r`-relaxed P-partitions bounded by `m`.
#[derive(Clone, Debug)]
pub struct RelaxedPartitions {
    n: usize,
    m: usize,
    r: usize,
    constraints: Constraints,
    values: Vec<usize>,
    started: bool,
    done: bool,
}

pub fn r_relaxed_partitions(p: &Poset, r: usize, m: usize) -> RelaxedPartitions {
    RelaxedPartitions::new(p, r, m, Scope::Covers)
}

impl RelaxedPartitions {
    pub(crate) fn new(p: &Poset, r: usize, m: usize, scope: Scope) -> Self {
        Self {
            n: p.len(),
            m,
            r,
            constraints: Constraints::build(p, r, scope),
            values: Vec::with_capacity(p.len()),
            started: false,
            done: false,
        }
    }

    fn emit(&self) -> PPartition {
        PPartition { values: self.values.clone(), bound: self.m, relax: self.r }
    }
}

impl Iterator for RelaxedPartitions {
    type Item = PPartition;

    fn next(&mut self) -> Option<PPartition> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(self.emit());
        }
        let mut cand = 0;
        if self.started {
            cand = self.values.pop().expect("previous output is complete") + 1;
        }
        self.started = true;
        loop {
            let k = self.values.len() + 1;
            let (lo, hi) = self.constraints.range(k, &self.values, self.m);
            let v = lo.max(cand);
            if v <= hi {
                self.values.push(v);
                if self.values.len() == self.n {
                    return Some(self.emit());
                }
                cand = 0;
            } else {
                match self.values.pop() {
                    Some(prev) => cand = prev + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Number of `r`-relaxed P-partitions of `p` with values in `1..=m`.
pub fn order_poly_value(p: &Poset, r: usize, m: usize) -> BigInt {
    order_poly_count(p, r, m, Scope::Covers).into()
}

pub(crate) fn order_poly_count(p: &Poset, r: usize, m: usize, scope: Scope) -> u64 {
    let c = Constraints::build(p, r, scope);
    c.count(&mut Vec::with_capacity(p.len()), p.len(), m)
}

/// `C(m + n - 1 - des_r(pi), n)`: the relaxed order polynomial of a chain.
pub fn chain_order_value(pi: &Permutation, r: usize, m: usize) -> BigInt {
    let n = pi.len() as u64;
    let top = (m as u64 + n).saturating_sub(1 + pi.des_r(r) as u64);
    binomial(top, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalLemmaReport {
    /// The union of the chain parts equals the set of P-partitions.
    pub cover: bool,
    /// No P-partition lies in two chain parts.
    pub disjoint: bool,
    /// P-partitions in no chain part.
    pub gaps: Vec<Vec<usize>>,
    /// Chain-part members that are not P-partitions.
    pub strays: Vec<Vec<usize>>,
    /// P-partitions lying in several chain parts, with those extensions.
    pub overlaps: Vec<(Vec<usize>, Vec<Permutation>)>,
    pub partitions: usize,
    pub extensions: usize,
}

const WITNESS_LIMIT: usize = 8;

/// Compare the `r`-relaxed P-partitions of `p` bounded by `m` with the union
/// of those of its linear extensions, viewed as chains.
pub fn verify_fundamental_lemma(p: &Poset, r: usize, m: usize) -> FundamentalLemmaReport {
    verify_with_scope(p, r, m, Scope::Covers)
}

pub(crate) fn verify_with_scope(p: &Poset, r: usize, m: usize, scope: Scope) -> FundamentalLemmaReport {
    let own: HashSet<Vec<usize>> = RelaxedPartitions::new(p, r, m, scope).map(|f| f.values).collect();
    let mut hits: HashMap<Vec<usize>, Vec<Permutation>> = HashMap::new();
    let mut extensions = 0;
    for pi in linear_extensions(p) {
        extensions += 1;
        for f in RelaxedPartitions::new(&Poset::chain(&pi), r, m, scope) {
            hits.entry(f.values).or_default().push(pi.clone());
        }
    }
    let mut gaps: Vec<Vec<usize>> = own.iter().filter(|f| !hits.contains_key(*f)).cloned().collect();
    let mut strays: Vec<Vec<usize>> = hits.keys().filter(|f| !own.contains(*f)).cloned().collect();
    let mut overlaps: Vec<(Vec<usize>, Vec<Permutation>)> =
        hits.iter().filter(|(_, v)| v.len() > 1).map(|(f, v)| (f.clone(), v.clone())).collect();
    let (cover, disjoint) = (gaps.is_empty() && strays.is_empty(), overlaps.is_empty());
    gaps.sort();
    strays.sort();
    overlaps.sort();
    gaps.truncate(WITNESS_LIMIT);
    strays.truncate(WITNESS_LIMIT);
    overlaps.truncate(WITNESS_LIMIT);
    FundamentalLemmaReport { cover, disjoint, gaps, strays, overlaps, partitions: own.len(), extensions }
}
