//! Error type shared by every layer of the crate.

use num_complex::Complex64;
use thiserror::Error;

use crate::characteristic::Characteristic;

/// Everything that can go wrong between parsing an input and producing a
/// residual.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The imaginary part of the period matrix is not positive definite,
    /// so the defining double series diverges.
    #[error("period matrix is not convergent: Im tau1, Im tau2 and det Im must all be positive")]
    NotConvergent,

    /// Convergent, but Im(tau12) <= 0. Kept distinct from `NotConvergent`
    /// so callers can renormalize instead of rejecting outright.
    #[error("Im(tau12) must be positive (got {0})")]
    NegativeTau12Im(f64),

    /// The requested tail tolerance would need a truncation radius beyond
    /// the hard cap; the inputs are pathological for double precision.
    #[error("tail tolerance {tol} needs truncation radius > {cap}")]
    TolTooSmall { tol: f64, cap: u32 },

    /// A characteristic entry was outside {0, 1}.
    #[error("characteristic digit out of range: {0:?}")]
    BadCharacteristic(String),

    /// An identity id that is not in the built-in catalog.
    #[error("unknown identity: {0:?}")]
    UnknownIdentity(String),

    /// A binding did not assign one of the spec's free symbols.
    #[error("binding is missing symbol {0}")]
    MissingSymbol(&'static str),

    /// A precondition theta value was not numerically zero.
    #[error("precondition violated: |theta[{characteristic}]| = {magnitude:e} at the bound point")]
    PreconditionViolated {
        characteristic: Characteristic,
        magnitude: f64,
    },

    /// The hyperelliptic denominator theta[0 0; 1 1](y, z) is too close to
    /// zero relative to the numerator for the ratio to mean anything.
    #[error("hyperelliptic denominator near zero: |theta[0011]| = {denominator:e}")]
    DenominatorNearZero { denominator: f64 },

    /// B0 or B_i in an addition formula fell below the pole guard.
    #[error("pole encountered in addition formula {index}: |{which}| = {magnitude:e}")]
    PoleEncountered {
        index: u8,
        which: &'static str,
        magnitude: f64,
    },

    /// A suite configuration that cannot be run.
    #[error("invalid suite config: {0}")]
    InvalidConfig(String),

    /// A complex literal that does not match the `RE±IMi` grammar.
    #[error("malformed complex literal {input:?}: {reason}")]
    ParseComplex { input: String, reason: &'static str },
}

impl Error {
    /// The offending value for precondition reports.
    pub fn precondition(characteristic: Characteristic, value: Complex64) -> Self {
        Error::PreconditionViolated {
            characteristic,
            magnitude: value.norm(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
