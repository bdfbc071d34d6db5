//! The genus-2 period matrix (tau1, tau2, tau12).
//!
//! The double series converges iff the imaginary part of the symmetric
//! matrix `[[tau1, tau12], [tau12, tau2]]` is positive definite. On top of
//! that, the constructor enforces `Im(tau12) > 0`: flipping the sign of
//! tau12 by renaming the summation index also permutes characteristics, so
//! matrices with `Im(tau12) <= 0` are rejected with a dedicated error
//! rather than silently renormalized.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Validated genus-2 modulus triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodMatrix {
    tau1: Complex64,
    tau2: Complex64,
    tau12: Complex64,
}

impl PeriodMatrix {
    /// Validate and build. Fails with [`Error::NotConvergent`] when the
    /// imaginary part is not positive definite and with
    /// [`Error::NegativeTau12Im`] when `Im(tau12) <= 0`.
    pub fn new(tau1: Complex64, tau2: Complex64, tau12: Complex64) -> Result<Self> {
        let pm = Self::new_relaxed(tau1, tau2, tau12)?;
        if tau12.im <= 0.0 {
            return Err(Error::NegativeTau12Im(tau12.im));
        }
        Ok(pm)
    }

    /// Validate convergence only, allowing `Im(tau12) <= 0`.
    ///
    /// The series converges for any positive-definite imaginary part; the
    /// sign convention on tau12 matters only for the characteristic
    /// bookkeeping of the identity tables. Reference computations (for
    /// example the tau12 = 0 factorization into genus-1 thetas) need this
    /// entry point.
    pub fn new_relaxed(tau1: Complex64, tau2: Complex64, tau12: Complex64) -> Result<Self> {
        let y1 = tau1.im;
        let y2 = tau2.im;
        let y12 = tau12.im;
        if !(y1 > 0.0 && y2 > 0.0 && y1 * y2 - y12 * y12 > 0.0) {
            return Err(Error::NotConvergent);
        }
        let pm = PeriodMatrix { tau1, tau2, tau12 };
        if !pm.lambda_min().is_finite() {
            return Err(Error::NotConvergent);
        }
        Ok(pm)
    }

    pub fn tau1(&self) -> Complex64 {
        self.tau1
    }

    pub fn tau2(&self) -> Complex64 {
        self.tau2
    }

    pub fn tau12(&self) -> Complex64 {
        self.tau12
    }

    /// Smallest eigenvalue of the imaginary part; strictly positive for a
    /// valid matrix. Controls the Gaussian decay of the lattice sum.
    pub fn lambda_min(&self) -> f64 {
        let y1 = self.tau1.im;
        let y2 = self.tau2.im;
        let y12 = self.tau12.im;
        let mean = 0.5 * (y1 + y2);
        let spread = (0.25 * (y1 - y2) * (y1 - y2) + y12 * y12).sqrt();
        mean - spread
    }

    /// The same moduli with the two coordinates exchanged:
    /// `(tau2, tau1, tau12)`. Pairs with [`Characteristic::column_swap`].
    ///
    /// [`Characteristic::column_swap`]: crate::characteristic::Characteristic::column_swap
    pub fn column_swap(&self) -> Self {
        PeriodMatrix {
            tau1: self.tau2,
            tau2: self.tau1,
            tau12: self.tau12,
        }
    }
}
