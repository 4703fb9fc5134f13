//! Acceptance gate: eleven exact checks covering the full pipeline, from
//! the threefold certificates through the dimension-d contradiction and
//! the discrete convergence evidence. Every comparison is exact rational
//! equality or a strict rational inequality; there are no tolerances.
//! Run with `--nocapture` to see one line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use jetcert_cli::document::{Document, Payload};
use jetcert_core::kernel::quadratic_argmax_on_interval;
use jetcert_core::threefold::{
    elimination_bracket, simplified_budget_closed_form, simplified_budget_shallow_exponent_form,
    simplified_large_q_profile, total_budget, BracketExtreme,
};
use jetcert_core::{
    build_profile, certify_threefold, critical_numbers, critical_pair, discrete_budget_sum,
    enumerate_candidates, f4_value, lemma_l2_check, theorem_main_certificate, Candidate,
    DimVerdict, Mode, ProfileParams, Provenance, Rat, Verdict,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SAMPLE_SEED: u64 = 0x5e5ad21;

fn run_binary(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_jetcert"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("stdout is JSON")
}

fn rat_field(v: &Value) -> Rat {
    serde_json::from_value(v.clone()).expect("rational field")
}

fn note_value(cert: &Value, code: &str) -> Rat {
    let notes = cert["notes"].as_array().expect("notes array");
    let note = notes
        .iter()
        .find(|n| n["code"] == code)
        .unwrap_or_else(|| panic!("note {code} missing"));
    rat_field(&note["value"])
}

fn sample(pool: &[Candidate], count: usize, seed: u64) -> Vec<&Candidate> {
    assert!(pool.len() >= count, "sample pool too small");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pool.choose_multiple(&mut rng, count).collect()
}

fn criterion_1_certify3_3_7_budget_and_sixfold_note() {
    let (code, stdout) = run_binary(&["certify3", "--p", "3", "--q", "7"]);
    assert_eq!(code, Some(0));
    let cert = &json(&stdout)["result"]["certificate"];
    let budget = rat_field(&cert["total_budget"]);
    assert_eq!(budget, Rat::new(27, 196));
    let sixfold = note_value(cert, "sixfold_budget");
    assert_eq!(sixfold, Rat::new(567, 686));
    assert_eq!(budget, Rat::new(567, 686) / Rat::from_int(6));
    assert_eq!(cert["verdict"], "ELIMINATED");
}

fn criterion_2_certify3_4_9_budget_and_sixfold_note() {
    let (code, stdout) = run_binary(&["certify3", "--p", "4", "--q", "9"]);
    assert_eq!(code, Some(0));
    let cert = &json(&stdout)["result"]["certificate"];
    let budget = rat_field(&cert["total_budget"]);
    assert_eq!(budget, Rat::new(112, 729));
    let sixfold = note_value(cert, "sixfold_budget");
    assert_eq!(sixfold, Rat::new(224, 243));
    assert_eq!(budget, Rat::new(224, 243) / Rat::from_int(6));
    assert_eq!(cert["verdict"], "ELIMINATED");
}

fn criterion_3_exactly_four_candidates_up_to_nine() {
    let found: Vec<(u64, u64)> = enumerate_candidates(9)
        .iter()
        .map(|c| (c.p(), c.q()))
        .collect();
    assert_eq!(found, vec![(3, 8), (2, 5), (3, 7), (4, 9)]);
}

fn criterion_4_sweep_to_two_hundred_eliminates_everything() {
    let (code, stdout) = run_binary(&["sweep3", "--q-max", "200"]);
    assert_eq!(code, Some(0));
    let doc: Document = serde_json::from_slice(&stdout).expect("document");
    let report = match doc.result {
        Some(Payload::SweepReport { report }) => report,
        other => panic!("unexpected payload {other:?}"),
    };
    assert!(report.all_eliminated);
    assert_eq!(report.candidate_count, report.eliminated_count);
    assert!(report
        .entries
        .iter()
        .all(|e| e.verdict == Verdict::Eliminated));
    assert_eq!(
        report.tightest_bracket,
        Some(BracketExtreme {
            p: 5,
            q: 11,
            value: Rat::new(3750, 3773),
        })
    );
    let one = Rat::one();
    for c in enumerate_candidates(200) {
        if c.q() >= 10 {
            let bracket = elimination_bracket(c.p(), c.q()).unwrap();
            assert!(bracket < one, "bracket not below 1 at {c}");
        }
    }
}

fn criterion_5_closed_form_matches_integral_and_shallow_exponent_does_not() {
    let pool: Vec<Candidate> = enumerate_candidates(80)
        .into_iter()
        .filter(|c| c.q() >= 9)
        .collect();
    let params = ProfileParams::default();
    for c in sample(&pool, 20, SAMPLE_SEED) {
        let closed = simplified_budget_closed_form(c.p(), c.q()).unwrap();
        let profile = simplified_large_q_profile(c, &params).unwrap();
        assert_eq!(closed, total_budget(&profile), "closed form drift at {c}");
        let shallow = simplified_budget_shallow_exponent_form(c.p(), c.q()).unwrap();
        assert_ne!(shallow, closed, "shallow exponent indistinguishable at {c}");
        // the square-exponent variant overshoots by exactly p^3(q-5)/(4(q-4)^3)
        let p3 = Rat::from_int(c.p()).pow(3);
        let overshoot = p3 * Rat::new(c.q() - 5, 4) / Rat::from_int(c.q() - 4).pow(3);
        assert_eq!(shallow - closed, overshoot, "overshoot mismatch at {c}");
    }
}

fn criterion_6_tangent_cone_density_peaks_at_alpha2() {
    let pool: Vec<Candidate> = enumerate_candidates(80)
        .into_iter()
        .filter(|c| c.q() >= 9)
        .collect();
    for c in sample(&pool, 20, SAMPLE_SEED) {
        let criticals = critical_numbers(c).unwrap();
        let profile = build_profile(c, Mode::LargeQ).unwrap();
        let est2 = profile
            .pieces()
            .iter()
            .find(|piece| piece.provenance == Provenance::Est2)
            .expect("large-q profiles carry an EST2 piece");
        let (argmax, _) =
            quadratic_argmax_on_interval(&est2.poly, &criticals.alpha1, &criticals.alpha3).unwrap();
        assert_eq!(argmax, Rat::new(c.p(), c.q() - 4), "argmax drift at {c}");
    }
}

fn criterion_7_jet_mass_below_one_with_certified_limit() {
    let one = Rat::one();
    for d in 4..=64 {
        let (alpha, eps) = critical_pair(d).unwrap();
        let f4 = f4_value(d, &alpha, &eps).unwrap();
        assert!(f4 < one, "jet mass not below 1 at d = {d}");
        if d == 4 {
            assert_eq!(f4, Rat::new(28561, 20736) - Rat::new(28561, 65536));
        }
    }
    let report = lemma_l2_check(4, 64, 10).unwrap();
    assert!(report.all_pass);
    assert!(report.limit.pass);
    assert_eq!(report.limit.bound, Rat::new(9, 10));
    assert!(report.limit.limit_upper < Rat::new(9, 10));
}

fn criterion_8_contradiction_certificates_for_all_dimensions() {
    for d in 4..=64u32 {
        let cert = theorem_main_certificate(d).unwrap();
        assert_eq!(
            cert.verdict,
            DimVerdict::ContradictionEstablished,
            "no contradiction at d = {d}"
        );
        let step3 = &cert.steps[2];
        let d = i64::from(d);
        assert_eq!(step3.lhs, Rat::from_int(3 * d * d - 2 * d - 1));
        assert_eq!(step3.rhs, Rat::from_int(3 * d * d));
        assert!(step3.holds);
    }
}

fn criterion_9_counting_formula_matches_monomial_oracle() {
    for d in 2..=4u32 {
        for k in 0..=30u64 {
            for m in 0..=k + 2 {
                let counted = jetcert_core::jets::point_jet_dim(d, k, m).unwrap();
                let oracle = jetcert_core::jets::monomial_vanishing_oracle(d, k, m).unwrap();
                assert_eq!(counted, oracle, "mismatch at d={d} k={k} m={m}");
            }
        }
    }
}

fn criterion_10_discrete_sums_converge_and_agree_on_verdicts() {
    let c = Candidate::threefold(3, 7).unwrap();
    let one = Rat::one();
    for n in [70, 140, 280, 560] {
        let report = discrete_budget_sum(&c, Mode::SmallQ, n).unwrap();
        assert!(
            report.scaled_gap() < one,
            "scaled gap at n = {n} is {}",
            report.scaled_gap()
        );
    }
    for c in enumerate_candidates(9) {
        let report = discrete_budget_sum(&c, Mode::SmallQ, 560).unwrap();
        let cert = certify_threefold(&c).unwrap();
        let discrete_verdict = report.exact_sum < cert.threshold;
        let integral_verdict = cert.verdict == Verdict::Eliminated;
        assert_eq!(discrete_verdict, integral_verdict, "verdict split at {c}");
        assert!(
            discrete_verdict,
            "discrete budget not below threshold at {c}"
        );
    }
}

fn criterion_11_reflected_tail_is_exactly_half_the_front() {
    let pool = enumerate_candidates(40);
    let large_pool: Vec<Candidate> = pool.iter().filter(|c| c.q() >= 9).cloned().collect();
    let halve = |c: &Candidate, mode: Mode| {
        let profile = build_profile(c, mode).unwrap();
        let criticals = critical_numbers(c).unwrap();
        let front = profile
            .integrate_between(&Rat::zero(), &criticals.alpha3)
            .unwrap();
        let tail = total_budget(&profile) - front.clone();
        assert_eq!(
            tail * Rat::from_int(2),
            front,
            "tail is not half the front at {c} in {mode}"
        );
    };
    for c in sample(&pool, 20, SAMPLE_SEED) {
        halve(c, Mode::SmallQ);
    }
    for c in sample(&large_pool, 20, SAMPLE_SEED) {
        halve(c, Mode::LargeQ);
    }
}

struct Criterion {
    label: &'static str,
    limit: Duration,
    run: fn(),
}

#[test]
fn all_acceptance_criteria_pass() {
    let criteria = [
        Criterion {
            label: "certify3(3,7) budget is 27/196 = (1/6)(567/686)",
            limit: Duration::from_secs(1),
            run: criterion_1_certify3_3_7_budget_and_sixfold_note,
        },
        Criterion {
            label: "certify3(4,9) budget is 112/729 = (1/6)(224/243)",
            limit: Duration::from_secs(1),
            run: criterion_2_certify3_4_9_budget_and_sixfold_note,
        },
        Criterion {
            label: "enumerate_candidates(9) = {3/8, 2/5, 3/7, 4/9}",
            limit: Duration::from_secs(1),
            run: criterion_3_exactly_four_candidates_up_to_nine,
        },
        Criterion {
            label: "sweep to q_max 200 eliminates all, tightest bracket 3750/3773 at (5,11)",
            limit: Duration::from_secs(30),
            run: criterion_4_sweep_to_two_hundred_eliminates_everything,
        },
        Criterion {
            label: "closed form equals integral; square-exponent variant does not",
            limit: Duration::from_secs(5),
            run: criterion_5_closed_form_matches_integral_and_shallow_exponent_does_not,
        },
        Criterion {
            label: "tangent-cone density argmax is exactly p/(q-4)",
            limit: Duration::from_secs(1),
            run: criterion_6_tangent_cone_density_peaks_at_alpha2,
        },
        Criterion {
            label: "jet mass below 1 for d in [4,64]; limit below 9/10",
            limit: Duration::from_secs(10),
            run: criterion_7_jet_mass_below_one_with_certified_limit,
        },
        Criterion {
            label: "contradiction certificates for d in [4,64]; step 3 is 3d^2-2d-1 < 3d^2",
            limit: Duration::from_secs(5),
            run: criterion_8_contradiction_certificates_for_all_dimensions,
        },
        Criterion {
            label: "jet counting formula equals monomial oracle for d <= 4, k <= 30",
            limit: Duration::from_secs(30),
            run: criterion_9_counting_formula_matches_monomial_oracle,
        },
        Criterion {
            label: "discrete gaps stay bounded; n = 560 verdicts match integrals",
            limit: Duration::from_secs(60),
            run: criterion_10_discrete_sums_converge_and_agree_on_verdicts,
        },
        Criterion {
            label: "reflected tail integral is exactly half the front",
            limit: Duration::from_secs(5),
            run: criterion_11_reflected_tail_is_exactly_half_the_front,
        },
    ];

    let mut failures = Vec::new();
    for (i, criterion) in criteria.iter().enumerate() {
        let idx = i + 1;
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(criterion.run));
        let elapsed = start.elapsed();
        let mut error = match result {
            Ok(()) => None,
            Err(payload) => Some(
                payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into()),
            ),
        };
        if error.is_none() && elapsed > criterion.limit {
            error = Some(format!(
                "exceeded time budget {:?} (took {:?})",
                criterion.limit, elapsed
            ));
        }
        match &error {
            None => println!(
                "[PASS] {idx:2}: {} ({} ms)",
                criterion.label,
                elapsed.as_millis()
            ),
            Some(msg) => println!(
                "[FAIL] {idx:2}: {} ({} ms): {msg}",
                criterion.label,
                elapsed.as_millis()
            ),
        }
        if let Some(msg) = error {
            failures.push(format!("criterion {idx}: {msg}"));
        }
    }
    assert!(
        failures.is_empty(),
        "{} of 11 acceptance criteria failed:\n{}",
        failures.len(),
        failures.join("\n")
    );
}
