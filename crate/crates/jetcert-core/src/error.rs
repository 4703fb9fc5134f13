//! Shared error type for every fallible operation in the crate.
//!
//! Preconditions are enforced, not assumed: callers get a typed error
//! naming the violated constraint instead of a silently wrong budget.

use thiserror::Error;

use crate::kernel::rat::Rat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in rational {num}/0")]
    ZeroDenominator { num: String },

    #[error("cannot parse `{input}` as a rational")]
    RatParse { input: String },

    #[error("reversed interval: expected a <= b, got a = {a}, b = {b}")]
    ReversedInterval { a: Rat, b: Rat },

    #[error("interval [{a}, {b}] leaves the density domain [{lo}, {hi}]")]
    OutsideDomain { a: Rat, b: Rat, lo: Rat, hi: Rat },

    #[error("point {t} lies outside the density domain [{lo}, {hi}]")]
    EvalOutsideDomain { t: Rat, lo: Rat, hi: Rat },

    #[error("piecewise density is malformed: {reason}")]
    MalformedDensity { reason: String },

    #[error("argmax is implemented for degree <= {max}, got degree {degree}")]
    UnsupportedDegree { degree: usize, max: usize },

    #[error("exp bounds require |x| <= 1, got x = {x}")]
    ExpArgumentOutOfRange { x: Rat },

    #[error("exp bounds require at least one Taylor term")]
    ExpZeroTerms,

    #[error("jet counts live on P^(d-1), so d >= 2 is required; got d = {d}")]
    AmbientDimensionTooSmall { d: u32 },

    #[error("monomial enumeration is capped at k <= {max}, got k = {k}")]
    EnumerationCap { k: u64, max: u64 },

    #[error("fat-point defect requires multiplicity q >= 1")]
    ZeroMultiplicity,

    #[error("discrete budget sums require n >= 1")]
    ZeroSampleCount,

    #[error("candidate requires p >= 1 and q >= 1")]
    ZeroCandidate,

    #[error("candidate p/q = {p}/{q} needs q >= 5 for the worst-case second critical number")]
    DegenerateCandidate { p: u64, q: u64 },

    #[error("candidate p/q = {p}/{q} has ratio >= 1/2; critical numbers are defined below 1/2")]
    RatioNotBelowHalf { p: u64, q: u64 },

    #[error("candidate p/q = {p}/{q} is outside the certifiable window 1/3 < p/q < 1/2")]
    OutOfScopeCandidate { p: u64, q: u64 },

    #[error("threefold certification requires ambient dimension 3, got d = {d}")]
    WrongAmbientDimension { d: u32 },

    #[error("{mode} profile is inadmissible for p/q = {p}/{q}: {reason}")]
    InadmissibleMode {
        mode: &'static str,
        p: u64,
        q: u64,
        reason: String,
    },

    #[error(
        "alpha2 override {alpha2} must satisfy alpha1 < alpha2 <= p/(q-4) and alpha2 < alpha3"
    )]
    BadAlpha2Override { alpha2: Rat },

    #[error("reflection multiplicity mu must be >= 2, got {mu}")]
    BadReflectionMultiplicity { mu: u64 },

    #[error("degree bound must be positive, got {bound}")]
    NonPositiveDegreeBound { bound: Rat },

    #[error("jet-budget difference requires d >= 1")]
    ZeroDimension,

    #[error("jet-budget difference requires 0 <= eps <= alpha, got alpha = {alpha}, eps = {eps}")]
    BadJetInterval { alpha: Rat, eps: Rat },

    #[error("dimension certificates cover d >= 4, got d = {d}")]
    DimensionTooSmall { d: u32 },

    #[error("empty dimension range: d_min = {d_min} exceeds d_max = {d_max}")]
    EmptyDimensionRange { d_min: u32, d_max: u32 },
}
