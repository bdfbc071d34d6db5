//! Reference implementations used by tests and example generation.
//!
//! [`brute_force_theta`] is a literal double sum over a fixed square window,
//! accumulated in plain row order with no shell ordering and no adaptive
//! bound. It shares no code with [`crate::eval::theta`]; the exponent is a
//! second, independent transcription of the defining series so a shared
//! transcription bug cannot pass silently.
//!
//! [`genus1_theta`] evaluates the one-variable theta series, used for the
//! tau12 = 0 factorization check. Not exposed through the CLI.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::characteristic::Characteristic;
use crate::period::PeriodMatrix;

/// Literal double sum over `|m| <= radius`, `|n| <= radius`, for raw
/// (possibly unreduced) integer characteristic entries `[a c; b d]`.
#[allow(clippy::too_many_arguments)]
pub fn brute_force_theta_raw(
    a: i64,
    c: i64,
    b: i64,
    d: i64,
    u: Complex64,
    v: Complex64,
    omega: &PeriodMatrix,
    radius: u32,
) -> Complex64 {
    let r = radius as i64;
    let half = Complex64::new(0.5, 0.0);
    let i_pi = Complex64::new(0.0, PI);
    let mut sum = Complex64::new(0.0, 0.0);
    for m in -r..=r {
        for n in -r..=r {
            let p = Complex64::new(m as f64, 0.0) + half * a as f64;
            let q = Complex64::new(n as f64, 0.0) + half * c as f64;
            let exponent = i_pi
                * (omega.tau1() * p * p
                    + omega.tau2() * q * q
                    + omega.tau12() * p * q * 2.0)
                + i_pi * 2.0 * (p * (u + half * b as f64) + q * (v + half * d as f64));
            sum += exponent.exp();
        }
    }
    sum
}

/// Brute-force sum for a reduced characteristic.
pub fn brute_force_theta(
    ch: Characteristic,
    u: Complex64,
    v: Complex64,
    omega: &PeriodMatrix,
    radius: u32,
) -> Complex64 {
    brute_force_theta_raw(
        ch.a as i64,
        ch.c as i64,
        ch.b as i64,
        ch.d as i64,
        u,
        v,
        omega,
        radius,
    )
}

/// One-variable theta series
/// `sum_{|m| <= radius} exp{pi i tau (m+a/2)^2 + 2 pi i (m+a/2)(u+b/2)}`,
/// for `Im(tau) > 0`.
pub fn genus1_theta(a: u8, b: u8, u: Complex64, tau: Complex64, radius: u32) -> Complex64 {
    debug_assert!(tau.im > 0.0);
    let r = radius as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in -r..=r {
        let p = m as f64 + 0.5 * a as f64;
        let exponent =
            Complex64::new(0.0, PI) * (tau * (p * p) + 2.0 * p * (u + 0.5 * b as f64));
        sum += exponent.exp();
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_radius_is_the_central_term() {
        let omega = PeriodMatrix::new(c(0.0, 1.0), c(0.0, 2.0), c(0.0, 0.5)).unwrap();
        let ch: Characteristic = "0000".parse().unwrap();
        let got = brute_force_theta(ch, c(0.3, 0.0), c(0.1, 0.0), &omega, 0);
        assert!((got - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn odd_characteristic_cancels_at_origin() {
        let omega = PeriodMatrix::new(c(0.2, 1.0), c(-0.1, 1.4), c(0.0, 0.3)).unwrap();
        for ch in Characteristic::odd() {
            let got = brute_force_theta(ch, c(0.0, 0.0), c(0.0, 0.0), &omega, 12);
            assert!(got.norm() < 1e-13, "theta[{ch}](0,0) = {got}");
        }
    }

    #[test]
    fn widening_the_window_changes_little() {
        let omega = PeriodMatrix::new(c(0.1, 0.9), c(0.0, 1.1), c(0.0, 0.25)).unwrap();
        let ch: Characteristic = "1100".parse().unwrap();
        let narrow = brute_force_theta(ch, c(0.4, 0.1), c(-0.2, -0.1), &omega, 14);
        let wide = brute_force_theta(ch, c(0.4, 0.1), c(-0.2, -0.1), &omega, 18);
        assert!((narrow - wide).norm() < 1e-13);
    }

    #[test]
    fn agrees_with_the_shell_summed_evaluator() {
        let omega = PeriodMatrix::new(c(0.15, 1.1), c(-0.3, 0.85), c(0.07, 0.3)).unwrap();
        let opts = crate::eval::EvalOptions::default();
        let points = [
            (c(0.3, 0.1), c(-0.4, -0.05)),
            (c(-0.9, 0.2), c(0.55, 0.12)),
            (c(0.0, 0.0), c(0.25, -0.2)),
        ];
        for ch in Characteristic::all() {
            for &(u, v) in &points {
                let args = crate::eval::ThetaArgs::new(u, v);
                let fast = crate::eval::theta(ch, args, &omega, &opts).unwrap();
                let radius =
                    crate::eval::truncation_radius(&omega, args, ch, &opts).unwrap();
                let slow = brute_force_theta(ch, u, v, &omega, radius + 8);
                assert!(
                    (fast - slow).norm() < 1e-12 * fast.norm().max(1.0),
                    "theta[{ch}]({u}, {v}): fast {fast} vs oracle {slow}"
                );
            }
        }
    }

    #[test]
    fn genus1_odd_theta_vanishes() {
        let got = genus1_theta(1, 1, c(0.0, 0.0), c(0.0, 1.3), 20);
        assert!(got.norm() < 1e-14);
    }

    #[test]
    fn genus1_leading_term_dominates_wide_tau() {
        let got = genus1_theta(0, 0, c(0.0, 0.0), c(0.0, 10.0), 20);
        assert!((got - c(1.0, 0.0)).norm() < 1e-12);
    }
}
