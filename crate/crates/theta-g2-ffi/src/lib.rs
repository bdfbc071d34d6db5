//! C ABI for the genus-2 theta evaluation library.
//!
//! The surface is deliberately small: validate a period matrix into an
//! opaque handle, evaluate theta and hyperelliptic-F values for a
//! characteristic given as the four-digit `acbd` string, and list the six
//! odd half-periods. Every function returns a status code; results come
//! back through out-pointers as (re, im) doubles.
//!
//! The generated header lives at `include/theta_g2.h`.

use std::os::raw::c_char;

use num_complex::Complex64;
use theta_g2::eval::{theta, EvalOptions, ThetaArgs, DEFAULT_TAIL_TOLERANCE};
use theta_g2::hyperelliptic::hyperelliptic_f;
use theta_g2::identity::odd_half_periods;
use theta_g2::{Characteristic, Error, PeriodMatrix};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaG2Status {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// The imaginary part of the period matrix is not positive definite.
    NotConvergent = 2,
    /// `Im(tau12) <= 0`.
    NegativeTau12Im = 3,
    /// The tail tolerance would need a truncation radius beyond the cap.
    TolTooSmall = 4,
    /// The characteristic string is not four digits of 0 or 1.
    BadCharacteristic = 5,
    /// The hyperelliptic denominator is numerically zero at this point.
    DenominatorNearZero = 6,
    /// Some other argument was out of range.
    InvalidArgument = 7,
}

impl From<&Error> for ThetaG2Status {
    fn from(err: &Error) -> Self {
        match err {
            Error::NotConvergent => ThetaG2Status::NotConvergent,
            Error::NegativeTau12Im(_) => ThetaG2Status::NegativeTau12Im,
            Error::TolTooSmall { .. } => ThetaG2Status::TolTooSmall,
            Error::BadCharacteristic(_) => ThetaG2Status::BadCharacteristic,
            Error::DenominatorNearZero { .. } => ThetaG2Status::DenominatorNearZero,
            _ => ThetaG2Status::InvalidArgument,
        }
    }
}

/// Opaque validated period matrix.
pub struct ThetaG2PeriodMatrix {
    inner: PeriodMatrix,
}

/// Validate the moduli `(tau1, tau2, tau12)` and store them behind an
/// opaque handle. On success writes the handle to `out`; free it with
/// [`theta_g2_period_matrix_free`].
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_g2_period_matrix_new(
    tau1_re: f64,
    tau1_im: f64,
    tau2_re: f64,
    tau2_im: f64,
    tau12_re: f64,
    tau12_im: f64,
    out: *mut *mut ThetaG2PeriodMatrix,
) -> ThetaG2Status {
    if out.is_null() {
        return ThetaG2Status::NullPointer;
    }
    match PeriodMatrix::new(
        Complex64::new(tau1_re, tau1_im),
        Complex64::new(tau2_re, tau2_im),
        Complex64::new(tau12_re, tau12_im),
    ) {
        Ok(inner) => {
            let handle = Box::new(ThetaG2PeriodMatrix { inner });
            unsafe { *out = Box::into_raw(handle) };
            ThetaG2Status::Ok
        }
        Err(err) => ThetaG2Status::from(&err),
    }
}

/// Release a handle returned by [`theta_g2_period_matrix_new`]. A null
/// pointer is ignored.
///
/// # Safety
/// `matrix` must be null or a handle from [`theta_g2_period_matrix_new`]
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn theta_g2_period_matrix_free(matrix: *mut ThetaG2PeriodMatrix) {
    if !matrix.is_null() {
        drop(unsafe { Box::from_raw(matrix) });
    }
}

fn parse_characteristic(text: *const c_char) -> Result<Characteristic, ThetaG2Status> {
    if text.is_null() {
        return Err(ThetaG2Status::NullPointer);
    }
    let s = unsafe { std::ffi::CStr::from_ptr(text) };
    let s = s.to_str().map_err(|_| ThetaG2Status::BadCharacteristic)?;
    s.parse().map_err(|_| ThetaG2Status::BadCharacteristic)
}

fn options_for(tail_tolerance: f64) -> Result<EvalOptions, ThetaG2Status> {
    if tail_tolerance <= 0.0 {
        return Ok(EvalOptions::with_tail_tolerance(DEFAULT_TAIL_TOLERANCE));
    }
    if tail_tolerance >= 1.0 {
        return Err(ThetaG2Status::InvalidArgument);
    }
    Ok(EvalOptions::with_tail_tolerance(tail_tolerance))
}

fn write_complex(value: Complex64, out_re: *mut f64, out_im: *mut f64) -> ThetaG2Status {
    if out_re.is_null() || out_im.is_null() {
        return ThetaG2Status::NullPointer;
    }
    unsafe {
        *out_re = value.re;
        *out_im = value.im;
    }
    ThetaG2Status::Ok
}

/// Evaluate `theta[characteristic](u, v)` for the handle's moduli.
///
/// `characteristic` is the NUL-terminated four-digit string `acbd`.
/// `tail_tolerance <= 0` selects the default (1e-12). The value is written
/// to `(*out_re, *out_im)`.
///
/// # Safety
/// `matrix` must be a live handle, `characteristic` null or a
/// NUL-terminated string, and the out-pointers null or writable.
#[no_mangle]
pub unsafe extern "C" fn theta_g2_theta(
    matrix: *const ThetaG2PeriodMatrix,
    characteristic: *const c_char,
    u_re: f64,
    u_im: f64,
    v_re: f64,
    v_im: f64,
    tail_tolerance: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> ThetaG2Status {
    if matrix.is_null() {
        return ThetaG2Status::NullPointer;
    }
    let ch = match parse_characteristic(characteristic) {
        Ok(ch) => ch,
        Err(status) => return status,
    };
    let opts = match options_for(tail_tolerance) {
        Ok(opts) => opts,
        Err(status) => return status,
    };
    let omega = unsafe { &(*matrix).inner };
    let args = ThetaArgs::new(Complex64::new(u_re, u_im), Complex64::new(v_re, v_im));
    match theta(ch, args, omega, &opts) {
        Ok(value) => write_complex(value, out_re, out_im),
        Err(err) => ThetaG2Status::from(&err),
    }
}

/// Evaluate the hyperelliptic ratio
/// `F[characteristic](u, v) = theta[characteristic](u, v) / theta[0011](u, v)`.
///
/// # Safety
/// Same contract as [`theta_g2_theta`].
#[no_mangle]
pub unsafe extern "C" fn theta_g2_hyperelliptic_f(
    matrix: *const ThetaG2PeriodMatrix,
    characteristic: *const c_char,
    u_re: f64,
    u_im: f64,
    v_re: f64,
    v_im: f64,
    tail_tolerance: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> ThetaG2Status {
    if matrix.is_null() {
        return ThetaG2Status::NullPointer;
    }
    let ch = match parse_characteristic(characteristic) {
        Ok(ch) => ch,
        Err(status) => return status,
    };
    let opts = match options_for(tail_tolerance) {
        Ok(opts) => opts,
        Err(status) => return status,
    };
    let omega = unsafe { &(*matrix).inner };
    match hyperelliptic_f(
        ch,
        Complex64::new(u_re, u_im),
        Complex64::new(v_re, v_im),
        omega,
        &opts,
    ) {
        Ok(value) => write_complex(value, out_re, out_im),
        Err(err) => ThetaG2Status::from(&err),
    }
}

/// Write the six odd half-period pairs (alpha, beta) as 24 doubles:
/// `[alpha0_re, alpha0_im, beta0_re, beta0_im, alpha1_re, ...]`.
/// `out` must point to at least 24 doubles.
///
/// # Safety
/// `matrix` must be a live handle and `out` null or valid for writing 24
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn theta_g2_odd_half_periods(
    matrix: *const ThetaG2PeriodMatrix,
    out: *mut f64,
) -> ThetaG2Status {
    if matrix.is_null() || out.is_null() {
        return ThetaG2Status::NullPointer;
    }
    let omega = unsafe { &(*matrix).inner };
    let pairs = odd_half_periods(omega);
    let slots = unsafe { std::slice::from_raw_parts_mut(out, 24) };
    for (i, (alpha, beta)) in pairs.iter().enumerate() {
        slots[4 * i] = alpha.re;
        slots[4 * i + 1] = alpha.im;
        slots[4 * i + 2] = beta.re;
        slots[4 * i + 3] = beta.im;
    }
    ThetaG2Status::Ok
}
