//! Recurrence-driven computation for the zig-zag posets: order polynomial
//! tables, the refined `(p, q)` series, zig-zag Eulerian polynomials, the
//! bivariate `U_n(s, t)`, the fixed-bound generating functions `F_m(y)` and
//! a report-only suite for the open real-rootedness questions.

mod cache;
mod conjectures;
mod eulerian;
mod frational;
mod omega;
mod refined;
mod upoly;

pub use cache::{Cache, CacheError, CacheFile};
pub use conjectures::{conjecture_suite, jacobi_histogram_matches, ConjectureReport, FFK_STATUS};
pub use eulerian::{
    classical_eulerian, gamma_from_z, gamma_vector, narayana, z_poly, z_polys, zr_gamma_vector, zr_poly,
};
pub use frational::{f_pq_pair, f_rational, verify_f_rational};
pub use omega::{check_omega_identities, omega_by_route, omega_table, OmegaRoute, OmegaTable};
pub use refined::{
    check_layer_derivative, check_layer_recurrence, g_refined_series, refined_layer, refined_step, refined_vector,
    verify_gperms, RefinedOrderVector,
};
pub use upoly::{b2_summands, u_bipoly, u_bipoly_chain, u_brute, u_deriv_step, UBivariate};

use thiserror::Error;

use crate::exactmath::MathError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZigzagError {
    /// Two computations that must agree did not; always an implementation bug.
    #[error("{what} disagree: {detail}")]
    RouteMismatch { what: String, detail: String },
    #[error(transparent)]
    Math(#[from] MathError),
}

pub(crate) fn mismatch(what: impl Into<String>, detail: impl Into<String>) -> ZigzagError {
    ZigzagError::RouteMismatch { what: what.into(), detail: detail.into() }
}
