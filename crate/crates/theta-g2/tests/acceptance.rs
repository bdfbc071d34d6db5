//! Acceptance suite: every criterion runs at its stated tolerance and
//! prints one pass/fail line (visible with `--nocapture`).

use std::time::Instant;

use num_complex::Complex64;
use rand_core::RngCore;

use theta_g2::argexpr::Symbol;
use theta_g2::eval::{theta, truncation_radius, EvalOptions, HalfPeriodShift, ThetaArgs};
use theta_g2::harness::{
    run_suite, sample_binding, sample_moduli, sample_point, trial_rng, Family, SuiteConfig,
};
use theta_g2::identity::{evaluate_identity, odd_half_periods, IdentityId};
use theta_g2::oracle::{brute_force_theta, brute_force_theta_raw, genus1_theta};
use theta_g2::tables::{addition_formula_1_unsquared_variant, builtin_identity};
use theta_g2::{reduce_characteristic, Characteristic, PeriodMatrix};

fn pass(criterion: u32, what: &str, detail: String) {
    println!("acceptance {criterion} ({what}): PASS: {detail}");
}

#[test]
fn acceptance_1_theta_addition_formulas() {
    let config = SuiteConfig::new(vec![Family::ThetaAddition], 200, 42, 1e-8);
    let start = Instant::now();
    let report = run_suite(&config).unwrap();
    let elapsed = start.elapsed();
    let mut worst = 0.0f64;
    for r in &report.results {
        assert_eq!(r.failures, 0, "{}: {} failures (max {:.3e})", r.id, r.failures, r.max_rel);
        worst = worst.max(r.max_rel);
    }
    assert_eq!(report.results.len(), 16);
    assert!(report.passed());
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "family runtime {elapsed:?} exceeds 60 s"
    );
    pass(
        1,
        "theta addition formulas",
        format!("16 ids x 200 samples, max_rel {worst:.3e}, runtime {elapsed:.2?}"),
    );
}

#[test]
fn acceptance_2_f_addition_formulas() {
    let config = SuiteConfig::new(vec![Family::FAddition], 200, 42, 1e-7);
    let report = run_suite(&config).unwrap();
    let mut worst = 0.0f64;
    let mut resamples = 0;
    for r in &report.results {
        assert_eq!(r.failures, 0, "{}: {} failures (max {:.3e})", r.id, r.failures, r.max_rel);
        assert!(
            (r.resamples as f64) < 0.05 * r.trials as f64,
            "{}: {} resamples out of {} trials",
            r.id,
            r.resamples,
            r.trials
        );
        worst = worst.max(r.max_rel);
        resamples += r.resamples;
    }
    assert_eq!(report.results.len(), 15);
    pass(
        2,
        "F addition formulas",
        format!("15 ids x 200 samples, max_rel {worst:.3e}, {resamples} resamples"),
    );
}

#[test]
fn acceptance_3_fundamental_relations() {
    let opts = EvalOptions::default();

    // Relation 1 at generic (alpha, beta).
    let spec1 = builtin_identity(IdentityId::Kossak(1));
    let mut worst1 = 0.0f64;
    for trial in 0..200 {
        let mut rng = trial_rng(42, "kossak-1", trial);
        let omega = sample_moduli(&mut rng);
        let binding = sample_binding(&mut rng, &spec1, &omega);
        let res = evaluate_identity(&spec1, &binding, &omega, &opts).unwrap();
        worst1 = worst1.max(res.relative);
    }
    assert!(worst1 < 1e-8, "relation 1: max_rel {worst1:.3e}");

    // Relations 2 and 3 at every odd half-period, 50 point samples each.
    let mut worst23 = 0.0f64;
    for index in 2..=3u8 {
        let spec = builtin_identity(IdentityId::Kossak(index));
        for hp in 0..6usize {
            for trial in 0..50u32 {
                let mut rng = trial_rng(42, &format!("kossak-{index}-hp{hp}"), trial);
                let omega = sample_moduli(&mut rng);
                let mut binding = sample_binding(&mut rng, &spec, &omega);
                let (alpha, beta) = odd_half_periods(&omega)[hp];
                binding.set(Symbol::Alpha, alpha).set(Symbol::Beta, beta);
                let res = evaluate_identity(&spec, &binding, &omega, &opts).unwrap();
                worst23 = worst23.max(res.relative);
            }
        }
    }
    assert!(worst23 < 1e-8, "relations 2/3: max_rel {worst23:.3e}");
    pass(
        3,
        "fundamental relations",
        format!("generic max_rel {worst1:.3e}, zero-locus max_rel {worst23:.3e}"),
    );
}

#[test]
fn acceptance_4_riemann_and_master_relations() {
    let config = SuiteConfig::new(vec![Family::Riemann, Family::Master], 200, 42, 1e-8);
    let report = run_suite(&config).unwrap();
    for r in &report.results {
        assert_eq!(r.failures, 0, "{}: max_rel {:.3e}", r.id, r.max_rel);
    }
    let worst = report.results.iter().map(|r| r.max_rel).fold(0.0, f64::max);
    pass(
        4,
        "quartic and master relations",
        format!("200 samples each, max_rel {worst:.3e}"),
    );
}

#[test]
fn acceptance_5_appendix_steps() {
    let config = SuiteConfig::new(vec![Family::Appendix], 50, 42, 1e-8);
    let report = run_suite(&config).unwrap();
    for r in &report.results {
        assert_eq!(r.failures, 0, "{}: max_rel {:.3e}", r.id, r.max_rel);
    }
    assert_eq!(report.results.len(), 15);
    let worst = report.results.iter().map(|r| r.max_rel).fold(0.0, f64::max);
    pass(
        5,
        "derivation steps A-1..A-15",
        format!("15 ids x 50 samples, max_rel {worst:.3e}"),
    );
}

#[test]
fn acceptance_6_oracle_equivalence() {
    let opts = EvalOptions::default();
    let mut worst = 0.0f64;
    for trial in 0..50u32 {
        let mut rng = trial_rng(42, "oracle-equivalence", trial);
        let omega = sample_moduli(&mut rng);
        let im_bound = 0.25 * omega.tau1().im.min(omega.tau2().im);
        let u = sample_point(&mut rng, im_bound);
        let v = sample_point(&mut rng, im_bound);
        let ch = Characteristic::all()
            .nth((rng.next_u64() % 16) as usize)
            .unwrap();
        let args = ThetaArgs::new(u, v);
        let fast = theta(ch, args, &omega, &opts).unwrap();
        let radius = truncation_radius(&omega, args, ch, &opts).unwrap();
        let slow = brute_force_theta(ch, u, v, &omega, radius + 8);
        let err = (fast - slow).norm() / fast.norm().max(1.0);
        assert!(err < 1e-12, "theta[{ch}] trial {trial}: {err:.3e}");
        worst = worst.max(err);
    }
    pass(6, "oracle equivalence", format!("50 samples, worst {worst:.3e}"));
}

#[test]
fn acceptance_7_structural_properties() {
    let opts = EvalOptions::default();

    // Odd-characteristic zeros at 10 sampled moduli.
    let mut worst_odd = 0.0f64;
    for trial in 0..10u32 {
        let mut rng = trial_rng(42, "odd-zero", trial);
        let omega = sample_moduli(&mut rng);
        for ch in Characteristic::odd() {
            let value = theta(
                ch,
                ThetaArgs::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
                &omega,
                &opts,
            )
            .unwrap();
            assert!(value.norm() < 1e-10, "theta[{ch}](0,0) = {value}");
            worst_odd = worst_odd.max(value.norm());
        }
    }

    // Column-swap symmetry.
    let mut worst_swap = 0.0f64;
    for trial in 0..20u32 {
        let mut rng = trial_rng(42, "column-swap", trial);
        let omega = sample_moduli(&mut rng);
        let im_bound = 0.25 * omega.tau1().im.min(omega.tau2().im);
        let u = sample_point(&mut rng, im_bound);
        let v = sample_point(&mut rng, im_bound);
        for ch in Characteristic::all() {
            let lhs = theta(ch, ThetaArgs::new(u, v), &omega, &opts).unwrap();
            let rhs = theta(
                ch.column_swap(),
                ThetaArgs::new(v, u),
                &omega.column_swap(),
                &opts,
            )
            .unwrap();
            let err = (lhs - rhs).norm() / lhs.norm().max(1.0);
            assert!(err < 1e-12, "theta[{ch}] column swap: {err:.3e}");
            worst_swap = worst_swap.max(err);
        }
    }

    // Shift-path agreement for all sixteen half-lattice shifts.
    let mut worst_shift = 0.0f64;
    for trial in 0..5u32 {
        let mut rng = trial_rng(42, "shift-path", trial);
        let omega = sample_moduli(&mut rng);
        let im_bound = 0.25 * omega.tau1().im.min(omega.tau2().im);
        let u = sample_point(&mut rng, im_bound);
        let v = sample_point(&mut rng, im_bound);
        let args = ThetaArgs::new(u, v);
        for ch in ["0000", "1001", "0111"] {
            let ch: Characteristic = ch.parse().unwrap();
            for bits in 0u8..16 {
                let shift = HalfPeriodShift::new(
                    (bits & 1) as i64,
                    ((bits >> 1) & 1) as i64,
                    ((bits >> 2) & 1) as i64,
                    ((bits >> 3) & 1) as i64,
                );
                let via_char = theta_g2::half_period_shifted_theta(ch, shift, args, &omega, &opts)
                    .unwrap();
                let (du, dv) = shift.displacement(&omega);
                let direct =
                    theta(ch, ThetaArgs::new(u + du, v + dv), &omega, &opts).unwrap();
                let err = (via_char - direct).norm() / direct.norm().max(1.0);
                assert!(err < 1e-10, "shift {shift:?} on {ch}: {err:.3e}");
                worst_shift = worst_shift.max(err);
            }
        }
    }

    // Characteristic-reduction phases against raw brute-force sums.
    let mut worst_reduce = 0.0f64;
    let mut rng = trial_rng(42, "reduction-phase", 0);
    let omega = sample_moduli(&mut rng);
    let u = sample_point(&mut rng, 0.1);
    let v = sample_point(&mut rng, 0.1);
    let mut checked = 0;
    for trial in 0..60u32 {
        let mut rng = trial_rng(42, "reduction-raw", trial);
        // Raw entries sampled from {-2, ..., 3}.
        let mut draw = || (rng.next_u64() % 6) as i64 - 2;
        let (a, c, b, d) = (draw(), draw(), draw(), draw());
        let (reduced, phase) = reduce_characteristic(a, c, b, d);
        let raw = brute_force_theta_raw(a, c, b, d, u, v, &omega, 14);
        let red = brute_force_theta(reduced, u, v, &omega, 14);
        let err = (raw - phase * red).norm() / raw.norm().max(1.0);
        assert!(err < 1e-12, "reduce({a},{c},{b},{d}): {err:.3e}");
        worst_reduce = worst_reduce.max(err);
        checked += 1;
    }
    assert!(checked >= 60);

    // tau12 = 0 factorization into genus-1 thetas.
    let mut worst_split = 0.0f64;
    for trial in 0..10u32 {
        let mut rng = trial_rng(42, "genus1-split", trial);
        let sample = sample_moduli(&mut rng);
        let omega = PeriodMatrix::new_relaxed(
            sample.tau1(),
            sample.tau2(),
            Complex64::new(0.0, 0.0),
        )
        .unwrap();
        let im_bound = 0.25 * omega.tau1().im.min(omega.tau2().im);
        let u = sample_point(&mut rng, im_bound);
        let v = sample_point(&mut rng, im_bound);
        for ch in Characteristic::all() {
            let joint = theta(ch, ThetaArgs::new(u, v), &omega, &opts).unwrap();
            let split = genus1_theta(ch.a, ch.b, u, omega.tau1(), 24)
                * genus1_theta(ch.c, ch.d, v, omega.tau2(), 24);
            let err = (joint - split).norm() / joint.norm().max(1.0);
            assert!(err < 1e-10, "factorization theta[{ch}]: {err:.3e}");
            worst_split = worst_split.max(err);
        }
    }

    pass(
        7,
        "structural properties",
        format!(
            "odd zeros {worst_odd:.1e}, column swap {worst_swap:.1e}, shifts {worst_shift:.1e}, reduction {worst_reduce:.1e}, factorization {worst_split:.1e}"
        ),
    );
}

#[test]
fn acceptance_8_report_determinism() {
    let bin = env!("CARGO_BIN_EXE_theta-g2");
    let dir = tempfile::tempdir().unwrap();
    let run = |path: &std::path::Path| {
        let output = std::process::Command::new(bin)
            .args([
                "verify", "--family", "all", "--trials", "100", "--seed", "42", "--tol", "1e-7",
                "--json",
            ])
            .arg(path)
            .output()
            .unwrap();
        assert!(
            output.status.success(),
            "verify exited {:?}: {}",
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        );
        std::fs::read(path).unwrap()
    };
    let first = run(&dir.path().join("out1.json"));
    let second = run(&dir.path().join("out2.json"));
    assert_eq!(first, second, "reports are not byte-identical");
    assert!(!first.is_empty());
    pass(
        8,
        "report determinism",
        format!("two runs, {} byte reports identical", first.len()),
    );
}

#[test]
fn acceptance_9_unsquared_variant_regression() {
    let opts = EvalOptions::default();
    let squared = builtin_identity(IdentityId::ThetaAdd(1));
    let unsquared = addition_formula_1_unsquared_variant();
    let mut worst_squared = 0.0f64;
    let mut best_unsquared = f64::INFINITY;
    for trial in 0..20u32 {
        let mut rng = trial_rng(42, "typo-regression", trial);
        let omega = sample_moduli(&mut rng);
        let binding = sample_binding(&mut rng, &squared, &omega);
        let good = evaluate_identity(&squared, &binding, &omega, &opts).unwrap();
        let bad = evaluate_identity(&unsquared, &binding, &omega, &opts).unwrap();
        worst_squared = worst_squared.max(good.relative);
        best_unsquared = best_unsquared.min(bad.relative);
    }
    assert!(worst_squared < 1e-8, "squared form max_rel {worst_squared:.3e}");
    assert!(
        best_unsquared > 1e-3,
        "unsquared variant min_rel {best_unsquared:.3e} not clearly broken"
    );
    pass(
        9,
        "unsquared-factor regression",
        format!(
            "squared max_rel {worst_squared:.3e}, unsquared min_rel {best_unsquared:.3e}"
        ),
    );
}
