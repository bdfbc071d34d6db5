//! Truncated lattice-sum evaluation of the genus-2 theta function
//!
//! ```text
//! theta[a c; b d](u, v) =
//!   sum_{m,n in Z} exp{ pi i (tau1 (m+a/2)^2 + tau2 (n+c/2)^2
//!                              + 2 tau12 (m+a/2)(n+c/2))
//!                       + 2 pi i ((m+a/2)(u+b/2) + (n+c/2)(v+d/2)) }
//! ```
//!
//! The sum is truncated to the square window `max(|m|, |n|) <= R`, with `R`
//! chosen so that a provable bound on the discarded tail is below the
//! requested tolerance. Terms are accumulated shell by shell in increasing
//! `max(|m|, |n|)` so results are bitwise deterministic.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::characteristic::{reduce_characteristic, Characteristic};
use crate::error::{Error, Result};
use crate::period::PeriodMatrix;

/// Hard cap on the truncation radius; beyond it the inputs are declared
/// pathological for double precision.
pub const MAX_RADIUS: u32 = 10_000;

/// Default absolute tail bound.
pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-12;

/// Argument pair of the theta function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaArgs {
    pub u: Complex64,
    pub v: Complex64,
}

impl ThetaArgs {
    pub fn new(u: Complex64, v: Complex64) -> Self {
        ThetaArgs { u, v }
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }
}

/// Evaluation controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Target absolute bound on the discarded tail, in (0, 1).
    pub tail_tolerance: f64,
    /// Fixed truncation radius; when set it is used verbatim and no tail
    /// bound is computed.
    pub radius_override: Option<u32>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tail_tolerance: DEFAULT_TAIL_TOLERANCE,
            radius_override: None,
        }
    }
}

impl EvalOptions {
    pub fn with_tail_tolerance(tail_tolerance: f64) -> Self {
        EvalOptions {
            tail_tolerance,
            ..Default::default()
        }
    }
}

/// One lattice term of the defining series.
fn lattice_term(
    ch: Characteristic,
    args: ThetaArgs,
    omega: &PeriodMatrix,
    m: i64,
    n: i64,
) -> Complex64 {
    let mm = m as f64 + 0.5 * ch.a as f64;
    let nn = n as f64 + 0.5 * ch.c as f64;
    let quad = omega.tau1() * (mm * mm)
        + omega.tau2() * (nn * nn)
        + omega.tau12() * (2.0 * mm * nn);
    let lin = (args.u + 0.5 * ch.b as f64) * mm + (args.v + 0.5 * ch.d as f64) * nn;
    (Complex64::i() * PI * (quad + 2.0 * lin)).exp()
}

/// Upper bound on the magnitude sum over shell `max(|m|, |n|) = k`.
///
/// Every term satisfies
/// `|term| <= exp(-pi lambda ||x||^2 + 2 pi g ||x||)` with
/// `x = (m + a/2, n + c/2)`, `lambda` the smallest eigenvalue of the
/// imaginary part of the period matrix and `g = ||(Im u, Im v)||`. On shell
/// `k` there are `8k` lattice points and `||x|| >= k - 1/2`; the quadratic
/// exponent peaks at `||x|| = g / lambda`, so shells before the peak are
/// bounded by the peak value.
fn shell_bound(lambda: f64, g: f64, k: u32) -> f64 {
    let t = k as f64 - 0.5;
    let peak = g / lambda;
    let s = if t < peak { peak } else { t };
    let exponent = -PI * lambda * s * s + 2.0 * PI * g * s;
    8.0 * k as f64 * exponent.exp()
}

/// Smallest radius `R` such that the tail over `max(|m|, |n|) > R` is
/// provably below `opts.tail_tolerance`. A configured `radius_override`
/// short-circuits the bound and is returned verbatim.
pub fn truncation_radius(
    omega: &PeriodMatrix,
    args: ThetaArgs,
    _ch: Characteristic,
    opts: &EvalOptions,
) -> Result<u32> {
    if let Some(r) = opts.radius_override {
        return Ok(r);
    }
    let tol = opts.tail_tolerance;
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "tail_tolerance must lie in (0, 1), got {tol}"
        )));
    }
    let lambda = omega.lambda_min();
    let g = args.u.im.hypot(args.v.im);
    let peak = g / lambda;

    // Collect per-shell bounds until they are both negligible and shrinking
    // geometrically, so the remainder past the last shell can be closed off.
    let mut bounds: Vec<f64> = Vec::new();
    let mut last = 1u32;
    loop {
        let k = last;
        let b = shell_bound(lambda, g, k);
        bounds.push(b);
        let past_peak = k as f64 - 0.5 > peak;
        // Ratio of consecutive shell bounds past the peak.
        let ratio = ((k + 1) as f64 / k as f64) * (-2.0 * PI * lambda * k as f64
            + 2.0 * PI * g)
            .exp();
        if past_peak && ratio < 0.5 && b < tol * 1e-6 {
            break;
        }
        if k > MAX_RADIUS + 8 {
            return Err(Error::TolTooSmall {
                tol,
                cap: MAX_RADIUS,
            });
        }
        last += 1;
    }

    let k_last = last;
    let ratio = ((k_last + 1) as f64 / k_last as f64)
        * (-2.0 * PI * lambda * k_last as f64 + 2.0 * PI * g).exp();
    let remainder = bounds[(k_last - 1) as usize] * ratio / (1.0 - ratio);

    // Walk inward: the tail after radius R is remainder + sum of shell
    // bounds for k in R+1..=k_last.
    let mut radius = k_last;
    let mut tail = remainder;
    while radius > 0 {
        let widened = tail + bounds[(radius - 1) as usize];
        if widened < tol {
            tail = widened;
            radius -= 1;
        } else {
            break;
        }
    }
    if radius > MAX_RADIUS {
        return Err(Error::TolTooSmall {
            tol,
            cap: MAX_RADIUS,
        });
    }
    Ok(radius)
}

/// Evaluate the theta function with absolute tail error below
/// `opts.tail_tolerance`.
pub fn theta(
    ch: Characteristic,
    args: ThetaArgs,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
) -> Result<Complex64> {
    debug_assert!(args.is_finite());
    let radius = truncation_radius(omega, args, ch, opts)?;
    let mut total = lattice_term(ch, args, omega, 0, 0);
    for k in 1..=radius as i64 {
        let mut shell = Complex64::new(0.0, 0.0);
        for m in -k..=k {
            shell += lattice_term(ch, args, omega, m, -k);
            shell += lattice_term(ch, args, omega, m, k);
        }
        for n in (1 - k)..k {
            shell += lattice_term(ch, args, omega, -k, n);
            shell += lattice_term(ch, args, omega, k, n);
        }
        total += shell;
    }
    Ok(total)
}

/// A half-lattice displacement `(du, dv)` with
/// `du = p/2 + q tau1/2 + s tau12/2` and `dv = r/2 + s tau2/2 + q tau12/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfPeriodShift {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl HalfPeriodShift {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Self {
        HalfPeriodShift { p, q, r, s }
    }

    /// The argument displacement this shift induces for given moduli.
    pub fn displacement(&self, omega: &PeriodMatrix) -> (Complex64, Complex64) {
        let du = 0.5 * self.p as f64
            + 0.5 * self.q as f64 * omega.tau1()
            + 0.5 * self.s as f64 * omega.tau12();
        let dv = 0.5 * self.r as f64
            + 0.5 * self.s as f64 * omega.tau2()
            + 0.5 * self.q as f64 * omega.tau12();
        (du, dv)
    }
}

/// Evaluate `theta[ch](u + du, v + dv)` for a half-period shift via the
/// transformation path: complete the square so the shift moves into the
/// characteristic `[a+q, c+s; b+p, d+r]`, reduce, and multiply by the
/// resulting exponential prefactor. Agrees with direct evaluation at the
/// shifted argument.
pub fn half_period_shifted_theta(
    ch: Characteristic,
    shift: HalfPeriodShift,
    args: ThetaArgs,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
) -> Result<Complex64> {
    let HalfPeriodShift { p, q, r, s } = shift;
    let (reduced, reduction_phase) = reduce_characteristic(
        ch.a as i64 + q,
        ch.c as i64 + s,
        ch.b as i64 + p,
        ch.d as i64 + r,
    );
    let qf = q as f64;
    let sf = s as f64;
    // Constant produced by completing the square in the lattice sum.
    let exponent = omega.tau1() * (qf * qf / 4.0)
        + omega.tau2() * (sf * sf / 4.0)
        + omega.tau12() * (qf * sf / 2.0)
        + args.u * qf
        + args.v * sf
        + Complex64::new((qf * (ch.b as f64 + p as f64) + sf * (ch.d as f64 + r as f64)) / 2.0, 0.0);
    let prefactor = (-Complex64::i() * PI * exponent).exp();
    Ok(prefactor * reduction_phase * theta(reduced, args, omega, opts)?)
}
