//! Independent counting models that must reproduce `Ω_n(m+1)`: order
//! ideals of `Z_n × I_m`, lattice points of the dilated chain polytope and
//! perfect matchings of the hexagon strip `Z(n, m)`.

mod crosscheck;
mod hexgrid;
mod lattice;

pub use crosscheck::{oracle_crosscheck, OracleReport, RouteValue, MAX_BRUTE_COUNT};
pub use hexgrid::{count_kekule_matchings, enumerate_matchings, matching_heights, HexGrid, KEKULE_MAX_M};
pub use lattice::{count_chain_polytope_points, count_order_ideals};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance n={n}, m={m} is too large: {limit}")]
    TooLarge { n: usize, m: usize, limit: String },
}
