//! General-dimension certifier: the inductive step that promotes the
//! threefold bound to `epsilon > (3d+1) / (3d^2)` on a very general
//! abelian variety of dimension `d >= 4`.
//!
//! Suppose the Seshadri constant were exactly `epsilon = (3d+1)/(3d^2)`,
//! realized by a submultiplicity along a subvariety swept out at level
//! `alpha = (3d+1)/(3d)`. The jets a section can spend between levels
//! `alpha - epsilon` and `alpha` amount to `f4 = alpha^d - (alpha-eps)^d`
//! per unit degree; if `f4` stays strictly below the degree bound the
//! candidate value cannot absorb the sections that exist, a
//! contradiction. The certificate records that inequality together with
//! the two exact identities the induction consumes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::exp::exp_bounds;
use crate::kernel::rat::Rat;

/// Comparison relation a certificate step asserts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    fn holds(self, lhs: &Rat, rhs: &Rat) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

/// One checked inequality or identity inside a certificate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertStep {
    pub label: String,
    pub lhs: Rat,
    pub relation: Relation,
    pub rhs: Rat,
    pub holds: bool,
}

impl CertStep {
    fn check(label: &str, lhs: Rat, relation: Relation, rhs: Rat) -> Self {
        let holds = relation.holds(&lhs, &rhs);
        CertStep {
            label: label.into(),
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum DimVerdict {
    #[serde(rename = "CONTRADICTION_ESTABLISHED")]
    ContradictionEstablished,
    #[serde(rename = "FAILED_AT")]
    FailedAt(u32),
}

impl std::fmt::Display for DimVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimVerdict::ContradictionEstablished => f.write_str("CONTRADICTION_ESTABLISHED"),
            DimVerdict::FailedAt(step) => write!(f, "FAILED_AT step {step}"),
        }
    }
}

/// Machine-checkable certificate for one ambient dimension.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DimCertificate {
    pub d: u32,
    pub alpha: Rat,
    pub epsilon: Rat,
    pub f4: Rat,
    pub degree_bound: Rat,
    pub steps: Vec<CertStep>,
    pub verdict: DimVerdict,
}

/// Jet mass a section can spend between levels `alpha - eps` and `alpha`:
/// `alpha^d - (alpha - eps)^d`. Requires `d >= 1` and `0 <= eps <= alpha`.
pub fn f4_value(d: u32, alpha: &Rat, eps: &Rat) -> Result<Rat> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if eps.is_negative() || eps > alpha {
        return Err(Error::BadJetInterval {
            alpha: alpha.clone(),
            eps: eps.clone(),
        });
    }
    Ok(alpha.pow(d) - (alpha - eps).pow(d))
}

/// The critical level and the Seshadri value it would pin down:
/// `alpha = (3d+1)/(3d)` and `epsilon = (3d+1)/(3d^2) = alpha/d`.
pub fn critical_pair(d: u32) -> Result<(Rat, Rat)> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let d = d as i64;
    let alpha = Rat::new(3 * d + 1, 3 * d);
    let epsilon = Rat::new(3 * d + 1, 3 * d * d);
    Ok((alpha, epsilon))
}

/// The multiplicity-criterion step: the critical jet mass must stay
/// strictly below the degree bound for sections to be left over.
pub fn multiplicity_criterion(
    d: u32,
    alpha: &Rat,
    eps: &Rat,
    degree_bound: &Rat,
) -> Result<CertStep> {
    if !degree_bound.is_positive() {
        return Err(Error::NonPositiveDegreeBound {
            bound: degree_bound.clone(),
        });
    }
    let f4 = f4_value(d, alpha, eps)?;
    Ok(CertStep::check(
        "critical_jet_budget_below_degree",
        f4,
        Relation::Lt,
        degree_bound.clone(),
    ))
}

/// Certifies dimension `d >= 4` with degree bound 1.
pub fn theorem_main_certificate(d: u32) -> Result<DimCertificate> {
    theorem_main_certificate_with(d, Rat::one())
}

/// Builds the three-step certificate for dimension `d >= 4`:
///
/// 1. `f4 < degree_bound` (the jet budget runs out),
/// 2. `epsilon * d = alpha` (the critical level is exactly `d` times the
///    candidate value, so the submultiplicity argument applies),
/// 3. `(3d+1)(d-1) < 3d^2` (the candidate stays below what induction from
///    dimension `d - 1` already guarantees).
///
/// All three holding yields `CONTRADICTION_ESTABLISHED`: the candidate
/// value cannot be attained and `epsilon > (3d+1)/(3d^2)` follows.
pub fn theorem_main_certificate_with(d: u32, degree_bound: Rat) -> Result<DimCertificate> {
    if d < 4 {
        return Err(Error::DimensionTooSmall { d });
    }
    let (alpha, epsilon) = critical_pair(d)?;
    let step1 = multiplicity_criterion(d, &alpha, &epsilon, &degree_bound)?;
    let f4 = step1.lhs.clone();
    let step2 = CertStep::check(
        "epsilon_times_d_equals_alpha",
        &epsilon * Rat::from(d),
        Relation::Eq,
        alpha.clone(),
    );
    let di = d as i64;
    let step3 = CertStep::check(
        "candidate_bound_below_inductive_bound",
        Rat::from_int((3 * di + 1) * (di - 1)),
        Relation::Lt,
        Rat::from_int(3 * di * di),
    );
    let steps = vec![step1, step2, step3];
    let verdict = match steps.iter().position(|s| !s.holds) {
        None => DimVerdict::ContradictionEstablished,
        Some(i) => DimVerdict::FailedAt(i as u32 + 1),
    };
    Ok(DimCertificate {
        d,
        alpha,
        epsilon,
        f4,
        degree_bound,
        steps,
        verdict,
    })
}

/// One dimension's entry in the uniform jet-mass check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LemmaRow {
    pub d: u32,
    pub f4: Rat,
    pub pass: bool,
}

/// Certified upper bound for the `d -> infinity` limit of the jet mass,
/// `e^(1/3) - e^(-2/3)`, enclosed by exact Taylor tails.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LimitRow {
    pub terms: u32,
    pub exp_third_upper: Rat,
    pub exp_neg_two_thirds_lower: Rat,
    pub limit_upper: Rat,
    pub bound: Rat,
    pub pass: bool,
    pub proximity: Rat,
}

/// Jet-mass check over a dimension range plus the limiting bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LemmaReport {
    pub d_min: u32,
    pub d_max: u32,
    pub rows: Vec<LemmaRow>,
    pub limit: LimitRow,
    pub all_pass: bool,
}

/// Checks `f4(d) < 1` for every `d` in `[d_min, d_max]` and bounds the
/// limit `e^(1/3) - e^(-2/3)` strictly below `9/10` with `terms` Taylor
/// terms. `proximity` reports how close the last row sits to the limit
/// bound; it is informational only.
pub fn lemma_l2_check(d_min: u32, d_max: u32, terms: u32) -> Result<LemmaReport> {
    if d_min < 4 {
        return Err(Error::DimensionTooSmall { d: d_min });
    }
    if d_min > d_max {
        return Err(Error::EmptyDimensionRange { d_min, d_max });
    }
    let one = Rat::one();
    let mut rows = Vec::with_capacity((d_max - d_min + 1) as usize);
    for d in d_min..=d_max {
        let (alpha, eps) = critical_pair(d)?;
        let f4 = f4_value(d, &alpha, &eps)?;
        let pass = f4 < one;
        rows.push(LemmaRow { d, f4, pass });
    }
    let third = exp_bounds(&Rat::new(1, 3), terms)?;
    let neg_two_thirds = exp_bounds(&Rat::new(-2, 3), terms)?;
    let limit_upper = &third.upper - &neg_two_thirds.lower;
    let bound = Rat::new(9, 10);
    let limit_pass = limit_upper < bound;
    let last_f4 = rows.last().expect("range is nonempty").f4.clone();
    let limit = LimitRow {
        terms,
        exp_third_upper: third.upper,
        exp_neg_two_thirds_lower: neg_two_thirds.lower,
        proximity: (&last_f4 - &limit_upper).abs(),
        limit_upper,
        bound,
        pass: limit_pass,
    };
    let all_pass = limit.pass && rows.iter().all(|r| r.pass);
    Ok(LemmaReport {
        d_min,
        d_max,
        rows,
        limit,
        all_pass,
    })
}
