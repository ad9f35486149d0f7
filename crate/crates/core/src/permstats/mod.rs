//! Permutations in one-line notation and their descent/return statistics,
//! alternating permutations, Entringer numbers, Jacobi permutations and
//! decreasing binary trees.

mod alternating;
mod entringer;
mod jacobi;
mod perm;
mod tree;

pub use alternating::{
    alternating_perms, alternating_perms_starting_with, is_alternating, AlternatingPerms, Orientation,
};
pub use entringer::{entringer, entringer_row, refined_entringer, refined_entringer_row};
pub use jacobi::{jacobi_perms, jacobi_ret_histogram, JacobiPerm};
pub use perm::Permutation;
pub use tree::{perm_to_tree, tree_big_return_count, DecreasingTree, TreeNode};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..{n}: {word:?}")]
    NotAPermutation { n: usize, word: Vec<usize> },
    #[error("not an up-down alternating permutation: {0}")]
    NotAlternating(String),
}
