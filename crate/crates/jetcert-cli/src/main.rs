//! `jetcert`: exact-rational certification of Seshadri-constant lower
//! bounds from the command line.
//!
//! Every command emits a versioned JSON document (or CSV for profile
//! export). Exit codes form the contract for CI gating:
//!
//! * `0` command completed and the verdict is the eliminating or
//!   contradiction-establishing one;
//! * `1` command completed but the verdict is negative;
//! * `2` usage error;
//! * `3` the input is outside the certified scope (structured error
//!   document emitted).

// Domain errors carry exact rationals and are cold; see jetcert-core.
#![allow(clippy::result_large_err)]

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use jetcert_core::dimension::{lemma_l2_check, theorem_main_certificate_with, DimVerdict};
use jetcert_core::jets::{
    discrete_budget_sum, monomial_vanishing_oracle, point_jet_dim, ORACLE_DEGREE_CAP,
};
use jetcert_core::threefold::{
    build_profile_with, certify_threefold_with, sweep_with_degree_bound, total_budget, Candidate,
    ProfileParams,
};
use jetcert_core::{Mode, Rat, Verdict};
use serde_json::json;

use jetcert_cli::document::{profile_rows, render_text, rows_to_csv, Document, Payload};

/// Directory that relative `--out` paths resolve against.
const OUT_DIR_ENV: &str = "JETCERT_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "jetcert",
    version,
    about = "Exact-rational certification of Seshadri-constant lower bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (standard output when omitted); relative paths resolve
    /// against JETCERT_OUT_DIR when that is set
    #[arg(long, short = 'o', global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Tangent-cone profile, valid for every multiplicity
    SmallQ,
    /// Plateau profile with fat-point defects, needs q >= 9
    LargeQ,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::SmallQ => Mode::SmallQ,
            ModeArg::LargeQ => Mode::LargeQ,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Certify elimination of one candidate ratio p/q on a threefold
    Certify3(Certify3Args),
    /// Certify every candidate ratio with denominator up to a cap
    Sweep3(Sweep3Args),
    /// Export a jet-density profile as JSON or CSV
    Profile(ProfileArgs),
    /// Certify the lower bound (3d+1)/(3d^2) for one ambient dimension
    CertifyDim(CertifyDimArgs),
    /// Cross-check jet counting formulas against monomial enumeration
    OracleCheck(OracleCheckArgs),
    /// Compare discrete jet-budget sums against the profile integral
    Convergence(ConvergenceArgs),
}

#[derive(Args)]
struct Certify3Args {
    /// Curve degree p of the candidate ratio p/q
    #[arg(long)]
    p: u64,
    /// Point multiplicity q of the candidate ratio p/q
    #[arg(long)]
    q: u64,
    /// Degree bound A^3 as an exact rational, e.g. 1 or 3/2
    #[arg(long, default_value = "1")]
    degree_bound: Rat,
    /// Multiplicity forced along the candidate curve in the reflection
    #[arg(long, default_value_t = 3)]
    mu: u64,
    /// Sharper plateau location overriding the worst case p/(q-4)
    #[arg(long)]
    alpha2: Option<Rat>,
}

#[derive(Args)]
struct Sweep3Args {
    /// Largest candidate denominator to certify
    #[arg(long)]
    q_max: u64,
    /// Degree bound A^3 as an exact rational
    #[arg(long, default_value = "1")]
    degree_bound: Rat,
}

#[derive(Args)]
struct ProfileArgs {
    /// Curve degree p of the candidate ratio p/q
    #[arg(long)]
    p: u64,
    /// Point multiplicity q of the candidate ratio p/q
    #[arg(long)]
    q: u64,
    /// Which profile to build
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Multiplicity forced along the candidate curve in the reflection
    #[arg(long, default_value_t = 3)]
    mu: u64,
    /// Sharper plateau location overriding the worst case p/(q-4)
    #[arg(long)]
    alpha2: Option<Rat>,
    /// Evenly spaced sample points per piece, in addition to breakpoints
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..))]
    samples: u32,
}

#[derive(Args)]
struct CertifyDimArgs {
    /// Ambient dimension (at least 4)
    #[arg(long)]
    d: u32,
    /// Degree bound A^d as an exact rational
    #[arg(long, default_value = "1")]
    degree_bound: Rat,
    /// Also check the jet-mass rows for every dimension up to this one
    #[arg(long)]
    lemma_to: Option<u32>,
    /// Taylor terms for the limit enclosure of e^(1/3) - e^(-2/3)
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    terms: u32,
}

#[derive(Args)]
struct OracleCheckArgs {
    /// Largest ambient dimension to check (from 2 up)
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..=8))]
    d_max: u32,
    /// Largest jet level to check
    #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u64).range(0..=ORACLE_DEGREE_CAP))]
    k_max: u64,
    /// Check vanishing orders up to k plus this padding
    #[arg(long, default_value_t = 2)]
    m_pad: u64,
}

#[derive(Args)]
struct ConvergenceArgs {
    /// Curve degree p of the candidate ratio p/q
    #[arg(long)]
    p: u64,
    /// Point multiplicity q of the candidate ratio p/q
    #[arg(long)]
    q: u64,
    /// Which profile integral to compare against
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Comma-separated sample counts, e.g. 70,140,280,560
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
    samples: Vec<u64>,
    /// Scaled gaps n*gap must stay below this bound for exit 0
    #[arg(long, default_value = "1")]
    bound: Rat,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let (name, input, outcome) = dispatch(&cli.command);
    match outcome {
        Ok((payload, positive)) => {
            let doc = Document::success(name, input, payload);
            let body = match cli.format {
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&doc).expect("documents always serialize");
                    s.push('\n');
                    s
                }
                Format::Text => render_text(&doc),
                Format::Csv => match doc.result.as_ref().expect("success has a result") {
                    Payload::Profile { rows, .. } => rows_to_csv(rows),
                    _ => {
                        eprintln!("error: --format csv is only available for `profile`");
                        return 2;
                    }
                },
            };
            match write_output(&body, cli.out.as_deref()) {
                Ok(()) => {
                    if positive {
                        0
                    } else {
                        1
                    }
                }
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    3
                }
            }
        }
        Err(err) => {
            let doc = Document::failure(name, input, &err);
            let body = match cli.format {
                Format::Text => render_text(&doc),
                _ => {
                    let mut s =
                        serde_json::to_string_pretty(&doc).expect("documents always serialize");
                    s.push('\n');
                    s
                }
            };
            if let Err(e) = write_output(&body, cli.out.as_deref()) {
                eprintln!("error: cannot write output: {e}");
            }
            3
        }
    }
}

type Outcome = jetcert_core::Result<(Payload, bool)>;

fn dispatch(command: &Command) -> (&'static str, serde_json::Value, Outcome) {
    match command {
        Command::Certify3(a) => ("certify3", certify3_input(a), certify3(a)),
        Command::Sweep3(a) => (
            "sweep3",
            json!({ "q_max": a.q_max, "degree_bound": a.degree_bound }),
            sweep3(a),
        ),
        Command::Profile(a) => ("profile", profile_input(a), profile(a)),
        Command::CertifyDim(a) => (
            "certify-dim",
            json!({
                "d": a.d,
                "degree_bound": a.degree_bound,
                "lemma_to": a.lemma_to,
                "terms": a.terms,
            }),
            certify_dim(a),
        ),
        Command::OracleCheck(a) => (
            "oracle-check",
            json!({ "d_max": a.d_max, "k_max": a.k_max, "m_pad": a.m_pad }),
            oracle_check(a),
        ),
        Command::Convergence(a) => (
            "convergence",
            json!({
                "p": a.p,
                "q": a.q,
                "mode": Mode::from(a.mode),
                "samples": a.samples,
                "bound": a.bound,
            }),
            convergence(a),
        ),
    }
}

fn certify3_input(a: &Certify3Args) -> serde_json::Value {
    json!({
        "p": a.p,
        "q": a.q,
        "degree_bound": a.degree_bound,
        "mu": a.mu,
        "alpha2_override": a.alpha2,
    })
}

fn profile_input(a: &ProfileArgs) -> serde_json::Value {
    json!({
        "p": a.p,
        "q": a.q,
        "mode": Mode::from(a.mode),
        "mu": a.mu,
        "alpha2_override": a.alpha2,
        "samples": a.samples,
    })
}

fn certify3(a: &Certify3Args) -> Outcome {
    let candidate = Candidate::threefold(a.p, a.q)?.with_degree_bound(a.degree_bound.clone())?;
    let params = ProfileParams {
        mu: a.mu,
        alpha2_override: a.alpha2.clone(),
    };
    let certificate = certify_threefold_with(&candidate, &params)?;
    let positive = certificate.verdict == Verdict::Eliminated;
    Ok((Payload::ThreefoldCertificate { certificate }, positive))
}

fn sweep3(a: &Sweep3Args) -> Outcome {
    let report = sweep_with_degree_bound(a.q_max, a.degree_bound.clone())?;
    let positive = report.all_eliminated;
    Ok((Payload::SweepReport { report }, positive))
}

fn profile(a: &ProfileArgs) -> Outcome {
    let candidate = Candidate::threefold(a.p, a.q)?;
    let params = ProfileParams {
        mu: a.mu,
        alpha2_override: a.alpha2.clone(),
    };
    let mode = Mode::from(a.mode);
    let profile = build_profile_with(&candidate, mode, &params)?;
    let rows = profile_rows(&profile, a.samples);
    Ok((
        Payload::Profile {
            total_budget: total_budget(&profile),
            candidate,
            mode,
            profile,
            rows,
        },
        true,
    ))
}

fn certify_dim(a: &CertifyDimArgs) -> Outcome {
    let certificate = theorem_main_certificate_with(a.d, a.degree_bound.clone())?;
    let lemma = match a.lemma_to {
        Some(d_max) => Some(lemma_l2_check(a.d, d_max, a.terms)?),
        None => None,
    };
    let positive = certificate.verdict == DimVerdict::ContradictionEstablished
        && lemma.as_ref().is_none_or(|l| l.all_pass);
    Ok((Payload::DimCertificate { certificate, lemma }, positive))
}

fn oracle_check(a: &OracleCheckArgs) -> Outcome {
    let mut checked = 0u64;
    let mut mismatches = 0u64;
    for d in 2..=a.d_max {
        for k in 0..=a.k_max {
            for m in 0..=k + a.m_pad {
                let closed = point_jet_dim(d, k, m)?;
                let enumerated = monomial_vanishing_oracle(d, k, m)?;
                checked += 1;
                if closed != enumerated {
                    mismatches += 1;
                }
            }
        }
    }
    let all_agree = mismatches == 0;
    Ok((
        Payload::OracleCheck {
            d_min: 2,
            d_max: a.d_max,
            k_max: a.k_max,
            m_pad: a.m_pad,
            checked,
            mismatches,
            all_agree,
        },
        all_agree,
    ))
}

fn convergence(a: &ConvergenceArgs) -> Outcome {
    let candidate = Candidate::threefold(a.p, a.q)?;
    let mode = Mode::from(a.mode);
    let mut reports = Vec::with_capacity(a.samples.len());
    for &n in &a.samples {
        reports.push(discrete_budget_sum(&candidate, mode, n)?);
    }
    let scaled_gaps: Vec<Rat> = reports.iter().map(|r| r.scaled_gap()).collect();
    let all_below_bound = scaled_gaps.iter().all(|g| g < &a.bound);
    let gaps_nonincreasing = scaled_gaps.windows(2).all(|w| w[0] >= w[1]);
    Ok((
        Payload::Convergence {
            candidate,
            mode,
            bound: a.bound.clone(),
            reports,
            scaled_gaps,
            all_below_bound,
            gaps_nonincreasing,
        },
        all_below_bound,
    ))
}

/// Writes to the resolved output path, or standard output when none was
/// given. Relative paths resolve against `JETCERT_OUT_DIR` when set, and
/// missing parent directories are created.
fn write_output(body: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(body.as_bytes())
        }
        Some(path) => {
            let resolved = resolve_out_path(path);
            if let Some(parent) = resolved.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(resolved, body)
        }
    }
}

fn resolve_out_path(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(OUT_DIR_ENV) {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}
