//! Versioned JSON envelope for emitted certificates, plus the CSV profile
//! export. Rationals appear only as `{num, den}` decimal-string pairs or
//! as `p/q` text; no value is ever rendered through floating point.

use jetcert_core::dimension::{DimCertificate, LemmaReport};
use jetcert_core::jets::DiscreteSumReport;
use jetcert_core::kernel::piecewise::Piece;
use jetcert_core::threefold::{Candidate, SweepReport, ThreefoldCertificate};
use jetcert_core::{Error, Mode, PiecewiseDensity, Rat};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_NAME: &str = "jetcert";

/// Top-level emitted object: either a result payload or a structured
/// error, never both.
#[derive(Debug, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub input: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

impl Document {
    pub fn success(command: &str, input: serde_json::Value, payload: Payload) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            tool: TOOL_NAME.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input,
            result: Some(payload),
            error: None,
        }
    }

    pub fn failure(command: &str, input: serde_json::Value, err: &Error) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            tool: TOOL_NAME.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input,
            result: None,
            error: Some(ErrorBody {
                kind: error_kind(err).into(),
                message: err.to_string(),
            }),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

/// Result payload, tagged by kind so documents are self-describing.
#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    ThreefoldCertificate {
        certificate: ThreefoldCertificate,
    },
    SweepReport {
        report: SweepReport,
    },
    Profile {
        candidate: Candidate,
        mode: Mode,
        total_budget: Rat,
        profile: PiecewiseDensity,
        rows: Vec<ProfileRow>,
    },
    DimCertificate {
        certificate: DimCertificate,
        #[serde(skip_serializing_if = "Option::is_none")]
        lemma: Option<LemmaReport>,
    },
    OracleCheck {
        d_min: u32,
        d_max: u32,
        k_max: u64,
        m_pad: u64,
        checked: u64,
        mismatches: u64,
        all_agree: bool,
    },
    Convergence {
        candidate: Candidate,
        mode: Mode,
        bound: Rat,
        reports: Vec<DiscreteSumReport>,
        scaled_gaps: Vec<Rat>,
        all_below_bound: bool,
        gaps_nonincreasing: bool,
    },
}

/// One sampled point of a density profile. `t` and `density` are decimal
/// renderings (truncated, 12 digits); the `_exact` fields carry the same
/// values losslessly.
#[derive(Debug, Serialize, Deserialize)]
pub struct ProfileRow {
    pub t: String,
    pub density: String,
    pub piece_provenance: String,
    pub t_exact: Rat,
    pub density_exact: Rat,
}

const DECIMAL_DIGITS: usize = 12;

fn profile_row(t: &Rat, piece: &Piece) -> ProfileRow {
    let v = piece.poly.eval(t);
    ProfileRow {
        t: t.to_decimal_string(DECIMAL_DIGITS),
        density: v.to_decimal_string(DECIMAL_DIGITS),
        piece_provenance: piece.provenance.label().to_string(),
        t_exact: t.clone(),
        density_exact: v,
    }
}

/// Rows at every breakpoint plus `samples` evenly spaced interior points
/// per piece. Each breakpoint appears once, attributed to the piece that
/// owns it under evaluation (the one on its left, except at the domain
/// start).
pub fn profile_rows(g: &PiecewiseDensity, samples: u32) -> Vec<ProfileRow> {
    let mut rows = Vec::new();
    for (i, (lo, hi, piece)) in g.intervals().enumerate() {
        if i == 0 {
            rows.push(profile_row(lo, piece));
        }
        for j in 1..=samples {
            let t = lo + (hi - lo) * Rat::new(j as i64, samples as i64 + 1);
            rows.push(profile_row(&t, piece));
        }
        rows.push(profile_row(hi, piece));
    }
    rows
}

pub const CSV_HEADER: &str = "t,density,piece_provenance,t_exact,density_exact";

/// Renders rows as CSV. No field can contain a comma, so no quoting is
/// needed: decimals, provenance labels and `p/q` rationals only.
pub fn rows_to_csv(rows: &[ProfileRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.t, r.density, r.piece_provenance, r.t_exact, r.density_exact
        ));
    }
    out
}

/// Stable machine-readable identifier for each error variant.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroDenominator { .. } => "zero_denominator",
        Error::RatParse { .. } => "rational_parse",
        Error::ReversedInterval { .. } => "reversed_interval",
        Error::OutsideDomain { .. } => "outside_domain",
        Error::EvalOutsideDomain { .. } => "eval_outside_domain",
        Error::MalformedDensity { .. } => "malformed_density",
        Error::UnsupportedDegree { .. } => "unsupported_degree",
        Error::ExpArgumentOutOfRange { .. } => "exp_argument_out_of_range",
        Error::ExpZeroTerms => "exp_zero_terms",
        Error::AmbientDimensionTooSmall { .. } => "ambient_dimension_too_small",
        Error::EnumerationCap { .. } => "enumeration_cap",
        Error::ZeroMultiplicity => "zero_multiplicity",
        Error::ZeroSampleCount => "zero_sample_count",
        Error::ZeroCandidate => "zero_candidate",
        Error::DegenerateCandidate { .. } => "degenerate_candidate",
        Error::RatioNotBelowHalf { .. } => "ratio_not_below_half",
        Error::OutOfScopeCandidate { .. } => "out_of_scope_candidate",
        Error::WrongAmbientDimension { .. } => "wrong_ambient_dimension",
        Error::InadmissibleMode { .. } => "inadmissible_mode",
        Error::BadAlpha2Override { .. } => "bad_alpha2_override",
        Error::BadReflectionMultiplicity { .. } => "bad_reflection_multiplicity",
        Error::NonPositiveDegreeBound { .. } => "non_positive_degree_bound",
        Error::ZeroDimension => "zero_dimension",
        Error::BadJetInterval { .. } => "bad_jet_interval",
        Error::DimensionTooSmall { .. } => "dimension_too_small",
        Error::EmptyDimensionRange { .. } => "empty_dimension_range",
    }
}

/// Short human-readable summary for `--format text`.
pub fn render_text(doc: &Document) -> String {
    let mut out = String::new();
    if let Some(err) = &doc.error {
        out.push_str(&format!("error [{}]: {}\n", err.kind, err.message));
        return out;
    }
    match doc
        .result
        .as_ref()
        .expect("success documents have a result")
    {
        Payload::ThreefoldCertificate { certificate: c } => {
            out.push_str(&format!(
                "candidate {}: {} ({} mode)\n",
                c.candidate, c.verdict, c.mode
            ));
            out.push_str(&format!(
                "  total budget {} vs threshold {}\n",
                c.total_budget, c.threshold
            ));
            for n in &c.notes {
                match &n.value {
                    Some(v) => out.push_str(&format!("  {} = {}\n", n.code, v)),
                    None => out.push_str(&format!("  {}\n", n.code)),
                }
            }
        }
        Payload::SweepReport { report: r } => {
            out.push_str(&format!(
                "sweep to q <= {}: {} of {} candidates eliminated\n",
                r.q_max, r.eliminated_count, r.candidate_count
            ));
            if let Some(t) = &r.tightest_bracket {
                out.push_str(&format!(
                    "  tightest bracket {} at {}/{}\n",
                    t.value, t.p, t.q
                ));
            }
        }
        Payload::Profile {
            candidate,
            mode,
            total_budget,
            profile,
            rows,
        } => {
            let (lo, hi) = profile.domain();
            out.push_str(&format!(
                "profile for {candidate} ({mode}) on [{lo}, {hi}]: {} pieces, {} rows, budget {total_budget}\n",
                profile.pieces().len(),
                rows.len()
            ));
        }
        Payload::DimCertificate {
            certificate: c,
            lemma,
        } => {
            out.push_str(&format!(
                "dimension {}: {}, certified bound {}\n",
                c.d, c.verdict, c.epsilon
            ));
            for s in &c.steps {
                out.push_str(&format!(
                    "  {} {} ({})\n",
                    s.label,
                    if s.holds { "holds" } else { "FAILS" },
                    match s.relation {
                        jetcert_core::dimension::Relation::Lt => format!("{} < {}", s.lhs, s.rhs),
                        jetcert_core::dimension::Relation::Le => format!("{} <= {}", s.lhs, s.rhs),
                        jetcert_core::dimension::Relation::Eq => format!("{} = {}", s.lhs, s.rhs),
                    }
                ));
            }
            if let Some(l) = lemma {
                out.push_str(&format!(
                    "  jet mass below 1 for d in [{}, {}]: {}; limit bound {} < 9/10: {}\n",
                    l.d_min,
                    l.d_max,
                    l.rows.iter().all(|r| r.pass),
                    l.limit.limit_upper,
                    l.limit.pass
                ));
            }
        }
        Payload::OracleCheck {
            checked,
            mismatches,
            all_agree,
            ..
        } => {
            out.push_str(&format!(
                "oracle check: {checked} triples compared, {mismatches} mismatches, agree = {all_agree}\n"
            ));
        }
        Payload::Convergence {
            candidate,
            mode,
            reports,
            scaled_gaps,
            all_below_bound,
            bound,
            ..
        } => {
            out.push_str(&format!("convergence for {candidate} ({mode}):\n"));
            for (r, g) in reports.iter().zip(scaled_gaps) {
                out.push_str(&format!(
                    "  n = {}: sum {} vs integral {}, n*gap = {}\n",
                    r.n, r.exact_sum, r.integral, g
                ));
            }
            out.push_str(&format!(
                "  all scaled gaps below {bound}: {all_below_bound}\n"
            ));
        }
    }
    out
}
