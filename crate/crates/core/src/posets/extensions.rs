use super::Poset;
use crate::permstats::Permutation;

/// Linear extensions of a poset in lexicographic order of their reading
/// words, by backtracking over currently minimal elements.
#[derive(Clone, Debug)]
pub struct LinearExtensions {
    n: usize,
    above: Vec<Vec<usize>>,
    // pending[j] = number of unplaced elements below j
    pending: Vec<usize>,
    placed: Vec<bool>,
    word: Vec<usize>,
    started: bool,
    done: bool,
}

pub fn linear_extensions(p: &Poset) -> LinearExtensions {
    let n = p.len();
    let mut above = vec![Vec::new(); n + 1];
    let mut pending = vec![0; n + 1];
    for (i, j) in p.relations() {
        above[i].push(j);
        pending[j] += 1;
    }
    LinearExtensions {
        n,
        above,
        pending,
        placed: vec![false; n + 1],
        word: Vec::with_capacity(n),
        started: false,
        done: false,
    }
}

impl LinearExtensions {
    fn place(&mut self, x: usize) {
        self.placed[x] = true;
        self.word.push(x);
        for &j in &self.above[x] {
            self.pending[j] -= 1;
        }
    }

    fn unplace(&mut self) -> Option<usize> {
        let x = self.word.pop()?;
        self.placed[x] = false;
        for &j in &self.above[x] {
            self.pending[j] += 1;
        }
        Some(x)
    }
}

impl Iterator for LinearExtensions {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Permutation::identity(0));
        }
        let mut cand = 1;
        if self.started {
            cand = self.unplace().expect("previous output is complete") + 1;
        }
        self.started = true;
        loop {
            match (cand..=self.n).find(|&x| !self.placed[x] && self.pending[x] == 0) {
                Some(x) => {
                    self.place(x);
                    if self.word.len() == self.n {
                        return Some(Permutation::from_word_unchecked(self.word.clone()));
                    }
                    cand = 1;
                }
                None => match self.unplace() {
                    Some(x) => cand = x + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}
