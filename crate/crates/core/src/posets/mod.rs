//! Finite labeled posets, the zig-zag and chainlink families, linear
//! extensions and `r`-relaxed P-partitions.

mod bijections;
mod extensions;
mod partitions;
mod poset;

pub use bijections::{
    check_big_descent_containment, check_descent_return_bijection, check_down_up_bijection,
    check_extension_alternating_correspondence, check_relaxed_relabeling,
};
pub use extensions::{linear_extensions, LinearExtensions};
pub use partitions::{
    chain_order_value, order_poly_value, r_relaxed_partitions, verify_fundamental_lemma, FundamentalLemmaReport,
    PPartition, RelaxedPartitions,
};
pub use poset::{chainlink_poset, natural_relabeling, zigzag_poset, Labeling, Poset};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("label {label} outside 1..={n}")]
    LabelOutOfRange { n: usize, label: usize },
    #[error("relations contain a cycle through {0}")]
    Cycle(usize),
}
