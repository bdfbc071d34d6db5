//! Cross-cutting properties of the identity tables: closure under the
//! column-swap rename, consistency of the addition formulas with the master
//! relation they specialize, agreement between the F-level and theta-level
//! forms, and exact serialization.

use num_complex::Complex64;

use theta_g2::argexpr::{Binding, Symbol};
use theta_g2::eval::EvalOptions;
use theta_g2::harness::{
    run_suite, sample_binding, sample_moduli, sample_point, trial_rng, Family, SuiteConfig,
};
use theta_g2::hyperelliptic::{b0, f_addition_residual, f_addition_spec};
use theta_g2::identity::{evaluate_identity, odd_half_periods, IdentityId};
use theta_g2::tables::{addition_alpha_beta, builtin_identity, builtin_identity_by_name};
use theta_g2::{theta, Characteristic, PeriodMatrix, ThetaArgs};

#[test]
fn catalog_is_complete_and_named() {
    assert_eq!(IdentityId::all().len(), 36);
    for id in IdentityId::all() {
        assert!(builtin_identity_by_name(&id.to_string()).is_ok());
    }
    assert!(builtin_identity_by_name("theta-add-0").is_err());
}

#[test]
fn full_report_covers_all_51_entries() {
    let config = SuiteConfig::new(Family::ALL.to_vec(), 1, 9, 1e-6);
    let report = run_suite(&config).unwrap();
    assert_eq!(report.results.len(), 51);
    let theta_level = report.results.iter().filter(|r| !r.id.starts_with("f-add")).count();
    assert_eq!(theta_level, 36);
}

#[test]
fn resamples_stay_rare_over_the_default_ranges() {
    let config = SuiteConfig::new(Family::ALL.to_vec(), 100, 42, 1e-7);
    let report = run_suite(&config).unwrap();
    assert!(report.passed());
    for r in &report.results {
        assert!(
            (r.resamples as f64) < 0.05 * r.trials as f64,
            "{}: {} resamples",
            r.id,
            r.resamples
        );
    }
}

#[test]
fn column_swap_closure_preserves_residuals() {
    let opts = EvalOptions::default();
    for id in IdentityId::all() {
        let spec = builtin_identity(id);
        let swapped = spec.column_swap();
        let mut rng = trial_rng(5, &format!("swap-{id}"), 0);
        let omega = sample_moduli(&mut rng);
        let binding = sample_binding(&mut rng, &spec, &omega);
        let original = evaluate_identity(&spec, &binding, &omega, &opts).unwrap();
        let renamed = evaluate_identity(
            &swapped,
            &binding.column_swap(),
            &omega.column_swap(),
            &opts,
        )
        .unwrap();
        assert!(original.relative < 1e-8, "{id}: {:.3e}", original.relative);
        assert!(renamed.relative < 1e-8, "{id} swapped: {:.3e}", renamed.relative);
        assert!(
            (original.relative - renamed.relative).abs() < 1e-12,
            "{id}: {:.3e} vs swapped {:.3e}",
            original.relative,
            renamed.relative
        );
    }
}

#[test]
fn addition_formulas_specialize_the_master_relation() {
    let opts = EvalOptions::default();
    let master = builtin_identity(IdentityId::Master);
    let empty = Binding::new();
    for index in 1..=16u8 {
        let (alpha_expr, beta_expr) = addition_alpha_beta(index);
        for trial in 0..5u32 {
            let mut rng = trial_rng(17, &format!("specialize-{index}"), trial);
            let omega = sample_moduli(&mut rng);
            let alpha = alpha_expr.eval(&empty, &omega).unwrap();
            let beta = beta_expr.eval(&empty, &omega).unwrap();
            let im_bound = 0.25 * omega.tau1().im.min(omega.tau2().im);
            let mut binding = Binding::new();
            binding
                .set(Symbol::Y, sample_point(&mut rng, im_bound))
                .set(Symbol::Z, sample_point(&mut rng, im_bound))
                .set(Symbol::YPrime, sample_point(&mut rng, im_bound))
                .set(Symbol::ZPrime, sample_point(&mut rng, im_bound))
                .set(Symbol::Alpha, alpha)
                .set(Symbol::Beta, beta)
                .set(Symbol::AlphaPrime, alpha)
                .set(Symbol::BetaPrime, beta);
            let master_residual =
                evaluate_identity(&master, &binding, &omega, &opts).unwrap();
            assert!(
                master_residual.relative < 1e-8,
                "master at table {index}: {:.3e}",
                master_residual.relative
            );

            let spec = builtin_identity(IdentityId::ThetaAdd(index));
            let specialized = evaluate_identity(&spec, &binding, &omega, &opts).unwrap();
            assert!(
                specialized.relative < 1e-8,
                "formula {index}: {:.3e}",
                specialized.relative
            );
        }
    }
}

#[test]
fn zero_locus_table_entries_vanish() {
    // The six pairs at the worked example moduli (i, 2i, i/2).
    let omega = PeriodMatrix::new(
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, 2.0),
        Complex64::new(0.0, 0.5),
    )
    .unwrap();
    let opts = EvalOptions::default();
    let even: Characteristic = "0000".parse().unwrap();
    for (alpha, beta) in odd_half_periods(&omega) {
        let value = theta(even, ThetaArgs::new(alpha, beta), &omega, &opts).unwrap();
        assert!(value.norm() < 1e-10, "theta[0000]({alpha}, {beta}) = {value}");
    }
    // Formulas 11..=16 substitute exactly these pairs.
    let empty = Binding::new();
    for (slot, index) in (11..=16u8).enumerate() {
        let (a_expr, b_expr) = addition_alpha_beta(index);
        let alpha = a_expr.eval(&empty, &omega).unwrap();
        let beta = b_expr.eval(&empty, &omega).unwrap();
        let (ta, tb) = odd_half_periods(&omega)[slot];
        assert!((alpha - ta).norm() < 1e-15 && (beta - tb).norm() < 1e-15, "table {index}");
    }
}

#[test]
fn f_level_residuals_match_their_theta_level_pair() {
    let opts = EvalOptions::default();
    for index in 1..=15u8 {
        let mut rng = trial_rng(23, &format!("ratio-{index}"), 0);
        let omega = sample_moduli(&mut rng);
        let im_bound = 0.25 * omega.tau1().im.min(omega.tau2().im);
        let y = sample_point(&mut rng, im_bound);
        let z = sample_point(&mut rng, im_bound);
        let yp = sample_point(&mut rng, im_bound);
        let zp = sample_point(&mut rng, im_bound);

        let f_res = f_addition_residual(index, y, z, yp, zp, &omega, &opts).unwrap();
        assert!(f_res.relative < 1e-7, "F formula {index}: {:.3e}", f_res.relative);

        let mut binding = Binding::new();
        binding
            .set(Symbol::Y, y)
            .set(Symbol::Z, z)
            .set(Symbol::YPrime, yp)
            .set(Symbol::ZPrime, zp);
        // The F formula is the ratio of theta-level formula (index + 1) to
        // formula 1; both must hold at the same binding.
        for theta_index in [1, index + 1] {
            let spec = builtin_identity(IdentityId::ThetaAdd(theta_index));
            let res = evaluate_identity(&spec, &binding, &omega, &opts).unwrap();
            assert!(
                res.relative < 1e-8,
                "theta formula {theta_index}: {:.3e}",
                res.relative
            );
        }
    }
}

#[test]
fn f_targets_are_the_summed_argument_characteristics_of_the_theta_level() {
    for index in 1..=15u8 {
        let f_spec = f_addition_spec(index);
        let theta_spec = builtin_identity(IdentityId::ThetaAdd(index + 1));
        // The third LHS factor of the theta-level formula carries the
        // predicted characteristic at (y+y', z+z').
        let lhs = &theta_spec.lhs[0].factors;
        assert_eq!(f_spec.target, lhs[2].characteristic, "formula {index}");
    }
}

#[test]
fn b0_matches_the_rearranged_first_addition_formula() {
    // B0 equals theta[0011](y+y')theta[0011](y-y')theta^2[0011](0,0)
    // divided by theta^2[0011](y)theta^2[0011](y').
    let opts = EvalOptions::default();
    let ch: Characteristic = "0011".parse().unwrap();
    for trial in 0..5u32 {
        let mut rng = trial_rng(29, "b0-cross", trial);
        let omega = sample_moduli(&mut rng);
        let im_bound = 0.25 * omega.tau1().im.min(omega.tau2().im);
        let y = sample_point(&mut rng, im_bound);
        let z = sample_point(&mut rng, im_bound);
        let yp = sample_point(&mut rng, im_bound);
        let zp = sample_point(&mut rng, im_bound);

        let direct = b0(y, z, yp, zp, &omega, &opts).unwrap();
        let th = |u: Complex64, v: Complex64| theta(ch, ThetaArgs::new(u, v), &omega, &opts);
        let zero = Complex64::new(0.0, 0.0);
        let numerator = th(y + yp, z + zp).unwrap()
            * th(y - yp, z - zp).unwrap()
            * th(zero, zero).unwrap().powi(2);
        let denominator = th(y, z).unwrap().powi(2) * th(yp, zp).unwrap().powi(2);
        let via_theta = numerator / denominator;
        let err = (direct - via_theta).norm() / direct.norm().max(1.0);
        assert!(err < 1e-9, "trial {trial}: {err:.3e}");
    }
}

#[test]
fn specs_serialize_exactly_and_round_trip() {
    for id in IdentityId::all() {
        let spec = builtin_identity(id);
        let json = serde_json::to_string(&spec).unwrap();
        let back: theta_g2::IdentitySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec, "{id}");
        let json_again = serde_json::to_string(&back).unwrap();
        assert_eq!(json, json_again, "{id}: serialization is not bit-stable");
    }
}
