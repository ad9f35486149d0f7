use serde::{Deserialize, Serialize};

use super::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// `u(1) < u(2) > u(3) < ...`
    UpDown,
    /// `u(1) > u(2) < u(3) > ...`
    DownUp,
}

impl Orientation {
    /// Whether the step from 1-indexed position `i` to `i + 1` must rise.
    fn rises_at(self, i: usize) -> bool {
        (i % 2 == 1) == (self == Orientation::UpDown)
    }
}

pub fn is_alternating(w: &Permutation, orientation: Orientation) -> bool {
    w.word().windows(2).enumerate().all(|(i, p)| (p[0] < p[1]) == orientation.rises_at(i + 1))
}

/// Lexicographic stream of the alternating permutations of `1..=n`,
/// generated by backtracking so only viable prefixes are extended.
#[derive(Clone, Debug)]
pub struct AlternatingPerms {
    n: usize,
    orientation: Orientation,
    first: Option<usize>,
    word: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

pub fn alternating_perms(n: usize, orientation: Orientation) -> AlternatingPerms {
    AlternatingPerms::new(n, orientation, None)
}

/// The alternating permutations with `u(1) = first`; the streams for
/// `first = 1..=n` partition the full stream.
pub fn alternating_perms_starting_with(n: usize, orientation: Orientation, first: usize) -> AlternatingPerms {
    AlternatingPerms::new(n, orientation, Some(first))
}

impl AlternatingPerms {
    fn new(n: usize, orientation: Orientation, first: Option<usize>) -> Self {
        Self {
            n,
            orientation,
            first,
            word: Vec::with_capacity(n),
            used: vec![false; n + 1],
            started: false,
            done: false,
        }
    }

    fn admissible(&self, c: usize) -> bool {
        if self.used[c] {
            return false;
        }
        match self.word.last() {
            None => self.first.is_none_or(|f| f == c),
            Some(&prev) => (prev < c) == self.orientation.rises_at(self.word.len()),
        }
    }
}

impl Iterator for AlternatingPerms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return self.first.is_none().then(|| Permutation::identity(0));
        }
        let mut cand = 1;
        if self.started {
            let last = self.word.pop().expect("previous output is complete");
            self.used[last] = false;
            cand = last + 1;
        }
        self.started = true;
        loop {
            match (cand..=self.n).find(|&c| self.admissible(c)) {
                Some(c) => {
                    self.word.push(c);
                    self.used[c] = true;
                    if self.word.len() == self.n {
                        return Some(Permutation::from_word_unchecked(self.word.clone()));
                    }
                    cand = 1;
                }
                None => {
                    let Some(last) = self.word.pop() else {
                        self.done = true;
                        return None;
                    };
                    self.used[last] = false;
                    cand = last + 1;
                }
            }
        }
    }
}
