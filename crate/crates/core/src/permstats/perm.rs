use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PermError;

/// A permutation of `1..=n` in one-line notation. Positions and values are
/// both 1-indexed in the public API.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(PermError::NotAPermutation { n, word });
            }
            seen[x] = true;
        }
        Ok(Self { word })
    }

    /// Caller guarantees `word` is a permutation of `1..=n`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for a 1-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Self { word: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Self { word: other.word.iter().map(|&i| self.at(i)).collect() }
    }

    /// Positions `i` with `w(i) > w(i+1) + r`.
    pub fn descent_set_r(&self, r: usize) -> BTreeSet<usize> {
        self.word.windows(2).enumerate().filter(|(_, w)| w[0] > w[1] + r).map(|(i, _)| i + 1).collect()
    }

    pub fn des_r(&self, r: usize) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1] + r).count()
    }

    /// The `r`-descent set of the inverse, i.e. values `i` with
    /// `w^{-1}(i) > w^{-1}(i+1) + r`.
    pub fn return_set_r(&self, r: usize) -> BTreeSet<usize> {
        self.inverse().descent_set_r(r)
    }

    pub fn ret_r(&self, r: usize) -> usize {
        self.inverse().des_r(r)
    }

    /// Big returns split at `u(1)`: those `<= u(1)` and those above it.
    pub fn big_return_split(&self) -> (usize, usize) {
        let Some(&first) = self.word.first() else {
            return (0, 0);
        };
        let rets = self.return_set_r(1);
        let minus = rets.iter().filter(|&&i| i <= first).count();
        (minus, rets.len() - minus)
    }

    /// Relabel an arbitrary sequence of distinct integers to `1..=n`
    /// preserving relative order.
    pub fn standardize(values: &[usize]) -> Self {
        let mut sorted: Vec<usize> = values.to_vec();
        sorted.sort_unstable();
        let word = values.iter().map(|v| sorted.binary_search(v).expect("value present") + 1).collect();
        Self { word }
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut w = cur.clone();
            if let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) {
                let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("pivot exists");
                w.swap(i - 1, j);
                w[i..].reverse();
                next = Some(w);
            }
            Some(Permutation { word: cur })
        })
    }
}

impl fmt::Display for Permutation {
    /// Concatenated digits when `n <= 9`, otherwise space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { " " };
        let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts `579842316` or whitespace/comma separated values.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let bad = || PermError::NotAPermutation { n: 0, word: Vec::new() };
        let word: Vec<usize> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        Self::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;
    fn try_from(word: Vec<usize>) -> Result<Self, PermError> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn descent_and_return_sets() {
        let w = perm("579842316");
        assert_eq!(w.descent_set_r(0), set(&[3, 4, 5, 7]));
        assert_eq!(w.descent_set_r(1), set(&[4, 5, 7]));
        assert_eq!(w.return_set_r(1), set(&[1, 3, 4, 6]));
        assert_eq!(w.return_set_r(0), set(&[1, 3, 4, 6, 8]));
        let id = Permutation::identity(6);
        assert!(id.descent_set_r(0).is_empty());
        assert!(id.return_set_r(0).is_empty());
    }

    #[test]
    fn big_return_split_examples() {
        assert_eq!(perm("2314").big_return_split(), (1, 0));
        assert_eq!(perm("1324").big_return_split(), (0, 0));
        assert_eq!(perm("35241").big_return_split(), (2, 1));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert_eq!("10 1 2 3 4 5 6 7 8 9".parse::<Permutation>().unwrap().at(1), 10);
    }

    #[test]
    fn all_is_lexicographic_and_complete() {
        let v: Vec<String> = Permutation::all(3).map(|p| p.to_string()).collect();
        assert_eq!(v, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(6).count(), 720);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn serde_round_trip() {
        let w = perm("2413");
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "[2,4,1,3]");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), w);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..10)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(Permutation::from_word_unchecked)
    }

    proptest! {
        #[test]
        fn relaxed_descents_are_nested(w in arb_perm(), r in 0usize..5) {
            prop_assert!(w.descent_set_r(r + 1).is_subset(&w.descent_set_r(r)));
            prop_assert_eq!(w.des_r(r), w.descent_set_r(r).len());
        }

        #[test]
        fn inverse_is_involutive(w in arb_perm()) {
            prop_assert_eq!(w.inverse().inverse(), w.clone());
            prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(w.len()));
            let (a, b) = w.big_return_split();
            prop_assert_eq!(a + b, w.ret_r(1));
        }
    }
}
