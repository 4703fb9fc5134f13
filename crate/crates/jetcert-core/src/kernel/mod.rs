//! Exact computation kernel: rationals, polynomials, piecewise densities,
//! and certified exponential bounds. Everything downstream builds on these
//! four types; none of them ever rounds.

pub mod exp;
pub mod piecewise;
pub mod poly;
pub mod rat;

pub use exp::{exp_bounds, ExpBound};
pub use piecewise::{Piece, PiecewiseDensity, Provenance};
pub use poly::{quadratic_argmax_on_interval, Poly};
pub use rat::Rat;
