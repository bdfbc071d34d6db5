//! Genus-2 theta functions with half-integer characteristics and the
//! hyperelliptic addition formulas built on them.
//!
//! The crate has three layers:
//!
//! - **Evaluation** ([`eval`], [`characteristic`], [`period`]): the
//!   truncated double lattice sum with a provable tail bound, plus the
//!   characteristic algebra (parity, reduction, half-period shifts).
//! - **Identity tables** ([`identity`], [`tables`], [`hyperelliptic`]):
//!   every addition relation encoded as data (a signed sum of products of
//!   theta or hyperelliptic-F factors with exact rational affine
//!   arguments), together with residual evaluation.
//! - **Verification harness** ([`harness`], [`cli`]): seeded sampling of
//!   moduli and arguments, batch residual statistics, deterministic JSON
//!   reports, and the `theta-g2` command-line interface.
//!
//! [`oracle`] holds slow reference implementations used by the test suite.

pub mod argexpr;
pub mod characteristic;
pub mod cli;
pub mod error;
pub mod eval;
pub mod hyperelliptic;
pub mod harness;
pub mod identity;
pub mod oracle;
pub mod period;
pub mod tables;
pub mod textio;

pub use characteristic::{reduce_characteristic, Characteristic, Parity};
pub use error::{Error, Result};
pub use eval::{
    half_period_shifted_theta, theta, truncation_radius, EvalOptions, HalfPeriodShift,
    ThetaArgs, DEFAULT_TAIL_TOLERANCE, MAX_RADIUS,
};
pub use identity::{
    evaluate_identity, odd_half_periods, tilde_transform, IdentityId, IdentitySpec, Residual,
};
pub use period::PeriodMatrix;
pub use tables::{builtin_identity, builtin_identity_by_name};
