use serde::{Deserialize, Serialize};

use super::PosetError;
use crate::permstats::{Orientation, Permutation};

/// A partial order on the labels `1..=n`, stored as its transitive closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetJson", into = "PosetJson")]
pub struct Poset {
    n: usize,
    // lt[i][j] is i <_P j, 1-indexed
    lt: Vec<Vec<bool>>,
}

/// On-disk form: the cover relations only.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    relations: Vec<[usize; 2]>,
}

impl TryFrom<PosetJson> for Poset {
    type Error = PosetError;
    fn try_from(j: PosetJson) -> Result<Self, PosetError> {
        Poset::new(j.n, j.relations.iter().map(|&[a, b]| (a, b)))
    }
}

impl From<Poset> for PosetJson {
    fn from(p: Poset) -> Self {
        PosetJson { n: p.n, relations: p.covers().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

/// Which labeling of the zig-zag shape to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Labeling {
    /// Labels read left to right along the zig-zag.
    Plain,
    /// Relabeled so that `i <_P j` implies `i < j`.
    Natural,
}

impl Poset {
    /// Build from generating relations `(i, j)` meaning `i <_P j`; the
    /// transitive closure is taken.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, relations: I) -> Result<Self, PosetError> {
        let mut lt = vec![vec![false; n + 1]; n + 1];
        for (i, j) in relations {
            if i == 0 || j == 0 || i > n || j > n {
                let label = if i == 0 || i > n { i } else { j };
                return Err(PosetError::LabelOutOfRange { n, label });
            }
            lt[i][j] = true;
        }
        for k in 1..=n {
            for i in 1..=n {
                if lt[i][k] {
                    let row_k = lt[k].clone();
                    for (dst, &src) in lt[i].iter_mut().zip(&row_k) {
                        *dst |= src;
                    }
                }
            }
        }
        if let Some(i) = (1..=n).find(|&i| lt[i][i]) {
            return Err(PosetError::Cycle(i));
        }
        Ok(Self { n, lt })
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("no relations")
    }

    /// The chain `pi(1) < pi(2) < ... < pi(n)`.
    pub fn chain(pi: &Permutation) -> Self {
        Self::new(pi.len(), pi.word().windows(2).map(|w| (w[0], w[1]))).expect("a chain is acyclic")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i <_P j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt[i][j] || self.lt[j][i]
    }

    /// All pairs `(i, j)` with `i <_P j`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.lt[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cover relations `i <_P j` with nothing strictly between, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations().into_iter().filter(|&(i, j)| !(1..=self.n).any(|k| self.lt[i][k] && self.lt[k][j])).collect()
    }

    /// `sigma P`: the poset with `sigma(i) < sigma(j)` whenever `i <_P j`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        assert_eq!(sigma.len(), self.n, "relabeling by a permutation of a different size");
        let rels = self.relations().into_iter().map(|(i, j)| (sigma.at(i), sigma.at(j)));
        Self::new(self.n, rels).expect("relabeling preserves acyclicity")
    }

    pub fn is_naturally_labeled(&self) -> bool {
        self.relations().iter().all(|&(i, j)| i < j)
    }

    /// Each `i` is comparable to each of `i+1, ..., i+r` (within range).
    pub fn is_r_successive(&self, r: usize) -> bool {
        (1..=self.n).all(|i| (i + 1..=(i + r).min(self.n)).all(|j| self.comparable(i, j)))
    }

    /// Whether `pi` lists the elements in an order compatible with `P`.
    pub fn is_linear_extension(&self, pi: &Permutation) -> bool {
        if pi.len() != self.n {
            return false;
        }
        let pos = pi.inverse();
        self.relations().iter().all(|&(i, j)| pos.at(i) < pos.at(j))
    }
}

/// `2 i-1 <_P 2 i >_P 2 i+1` for the up-down shape, the reverse for
/// down-up. The natural labelings swap `2i <-> 2i+1` (up-down) or
/// `2i-1 <-> 2i` (down-up).
pub fn zigzag_poset(n: usize, orientation: Orientation, labeling: Labeling) -> Poset {
    let rels = (1..n).map(|i| {
        let rising = (i % 2 == 1) == (orientation == Orientation::UpDown);
        if rising {
            (i, i + 1)
        } else {
            (i + 1, i)
        }
    });
    let plain = Poset::new(n, rels).expect("zig-zag is acyclic");
    match labeling {
        Labeling::Plain => plain,
        Labeling::Natural => plain.relabel(&natural_relabeling(n, orientation)),
    }
}

/// The involution making the zig-zag naturally labeled: swaps `2i, 2i+1`
/// for up-down and `2i-1, 2i` for down-up, whenever both are `<= n`.
pub fn natural_relabeling(n: usize, orientation: Orientation) -> Permutation {
    let start = match orientation {
        Orientation::UpDown => 2,
        Orientation::DownUp => 1,
    };
    let mut w: Vec<usize> = (1..=n).collect();
    let mut i = start;
    while i < n {
        w.swap(i - 1, i);
        i += 2;
    }
    Permutation::new(w).expect("product of disjoint transpositions")
}

/// Rank-`r` generalization of the zig-zag. Writing `i - 1 = a(r+1) + b` and
/// `j - 1 = c(r+1) + d` with `0 <= b, d <= r`, we have `i <_P j` iff
/// `b < d`, `a >= c` and `a - c <= d - b`: `i` reaches `j` by `d - b` upward
/// steps, each either staying in its block or moving one block left.
pub fn chainlink_poset(n: usize, r: usize) -> Poset {
    let coords = |i: usize| ((i - 1) / (r + 1), (i - 1) % (r + 1));
    let mut rels = Vec::new();
    for i in 1..=n {
        let (a, b) = coords(i);
        for j in 1..=n {
            let (c, d) = coords(j);
            if b < d && a >= c && a - c <= d - b {
                rels.push((i, j));
            }
        }
    }
    Poset::new(n, rels).expect("chainlink relation is a strict order")
}
