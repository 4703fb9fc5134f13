//! Exact-rational certification of Seshadri-constant lower bounds at very
//! general points, by counting the jets a hypothetical curve of low
//! Seshadri ratio would have to absorb.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point enters any verdict. The crate is organized as:
//!
//! * [`kernel`]: exact rationals, polynomials, piecewise-polynomial
//!   densities and Taylor enclosures of the exponential;
//! * [`jets`]: jet-space dimension counts, the fat-point defect density
//!   and the discrete budget sums that converge to the profile integrals;
//! * [`threefold`]: the candidate-elimination engine certifying the
//!   Seshadri bound `1/2` on very general abelian threefolds;
//! * [`dimension`]: the inductive certificate for the bound
//!   `(3d+1) / (3d^2)` in ambient dimension `d >= 4`.
//!
//! The two entry points are [`threefold::certify_threefold`], which
//! produces a machine-checkable [`threefold::ThreefoldCertificate`] for
//! one candidate ratio, and [`dimension::theorem_main_certificate`] for
//! one ambient dimension. [`threefold::sweep`] eliminates every candidate
//! up to a multiplicity cap in one report.

// Errors carry the exact rationals that violated a precondition, which
// makes the Err variant wide; all error paths are cold validation, so
// boxing would tax every constructor for no measurable gain.
#![allow(clippy::result_large_err)]

pub mod dimension;
pub mod error;
pub mod jets;
pub mod kernel;
pub mod threefold;

pub use dimension::{
    critical_pair, f4_value, lemma_l2_check, theorem_main_certificate,
    theorem_main_certificate_with, DimCertificate, DimVerdict, LemmaReport,
};
pub use error::{Error, Result};
pub use jets::{discrete_budget_sum, DiscreteSumReport};
pub use kernel::{PiecewiseDensity, Poly, Provenance, Rat};
pub use threefold::{
    build_profile, certify_threefold, certify_threefold_with, critical_numbers,
    enumerate_candidates, sweep, sweep_with_degree_bound, Candidate, CriticalNumbers, Mode,
    ProfileParams, SweepReport, ThreefoldCertificate, Verdict,
};
