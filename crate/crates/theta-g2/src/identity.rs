//! Identity specifications and residual evaluation.
//!
//! Every relation handled by the crate is data: a signed sum of products of
//! up to four theta factors with affine arguments on each side, plus an
//! optional list of theta values that must vanish before the relation
//! applies. The residual of one instance is `|LHS - RHS|` normalized by the
//! largest single term magnitude across both sides, which keeps the metric
//! meaningful when both sides are exponentially large or small.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::argexpr::{ArgExpr, Binding, SymbolSet};
use crate::characteristic::Characteristic;
use crate::error::{Error, Result};
use crate::eval::{theta, EvalOptions, HalfPeriodShift, ThetaArgs};
use crate::period::PeriodMatrix;

/// Absolute bound under which a precondition theta value counts as zero.
/// Looser than the tail tolerance because the values are themselves
/// truncated sums.
pub const PRECONDITION_TOLERANCE: f64 = 1e-8;

/// One theta factor of a product term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    pub characteristic: Characteristic,
    pub u: ArgExpr,
    pub v: ArgExpr,
}

impl Factor {
    pub fn new(characteristic: Characteristic, u: ArgExpr, v: ArgExpr) -> Self {
        Factor {
            characteristic,
            u,
            v,
        }
    }
}

/// A signed product of at most four theta factors. `coeff` is +-1 except
/// for the two derivation steps that carry an explicit factor 2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i32,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn new(coeff: i32, factors: Vec<Factor>) -> Self {
        debug_assert!(matches!(coeff, -2 | -1 | 1 | 2));
        debug_assert!((1..=4).contains(&factors.len()));
        Term { coeff, factors }
    }
}

/// A theta value that must vanish for the identity to apply.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Precondition {
    pub characteristic: Characteristic,
    pub u: ArgExpr,
    pub v: ArgExpr,
}

/// Identifier of a built-in identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    /// The quartic relation between products at original and transformed
    /// arguments.
    Riemann,
    /// The eight-symbol parameterized relation all others specialize.
    Master,
    /// Fundamental relations 1..=3.
    Kossak(u8),
    /// Addition formulas 1..=16 at the theta level.
    ThetaAdd(u8),
    /// Derivation steps 1..=15.
    Appendix(u8),
}

impl IdentityId {
    /// All 36 built-in ids in catalog order.
    pub fn all() -> Vec<IdentityId> {
        let mut ids = vec![IdentityId::Riemann, IdentityId::Master];
        ids.extend((1..=3).map(IdentityId::Kossak));
        ids.extend((1..=16).map(IdentityId::ThetaAdd));
        ids.extend((1..=15).map(IdentityId::Appendix));
        ids
    }

    /// The source equation label carried into reports.
    pub fn paper_eq(self) -> String {
        match self {
            IdentityId::Riemann => "2-2".into(),
            IdentityId::Master => "2-4".into(),
            IdentityId::Kossak(i) => format!("2-{}", 4 + i),
            IdentityId::ThetaAdd(i) => format!("2-{}", 7 + i),
            IdentityId::Appendix(i) => format!("A-{i}"),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityId::Riemann => write!(f, "riemann"),
            IdentityId::Master => write!(f, "master"),
            IdentityId::Kossak(i) => write!(f, "kossak-{i}"),
            IdentityId::ThetaAdd(i) => write!(f, "theta-add-{i}"),
            IdentityId::Appendix(i) => write!(f, "appendix-A{i}"),
        }
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownIdentity(s.to_string());
        let parse_index = |prefix: &str, max: u8| -> Result<u8> {
            let idx: u8 = s[prefix.len()..].parse().map_err(|_| unknown())?;
            if (1..=max).contains(&idx) {
                Ok(idx)
            } else {
                Err(unknown())
            }
        };
        match s {
            "riemann" => Ok(IdentityId::Riemann),
            "master" => Ok(IdentityId::Master),
            _ if s.starts_with("kossak-") => Ok(IdentityId::Kossak(parse_index("kossak-", 3)?)),
            _ if s.starts_with("theta-add-") => {
                Ok(IdentityId::ThetaAdd(parse_index("theta-add-", 16)?))
            }
            _ if s.starts_with("appendix-A") => {
                Ok(IdentityId::Appendix(parse_index("appendix-A", 15)?))
            }
            _ => Err(unknown()),
        }
    }
}

/// A fully specified identity: LHS terms, RHS terms, preconditions and the
/// symbols a binding must assign.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentitySpec {
    pub id: IdentityId,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
    pub preconditions: Vec<Precondition>,
    pub free_symbols: SymbolSet,
}

impl IdentitySpec {
    /// Derive `free_symbols` from the expressions themselves.
    pub fn with_inferred_symbols(
        id: IdentityId,
        lhs: Vec<Term>,
        rhs: Vec<Term>,
        preconditions: Vec<Precondition>,
    ) -> Self {
        let mut symbols = SymbolSet::EMPTY;
        for term in lhs.iter().chain(rhs.iter()) {
            for factor in &term.factors {
                symbols = symbols.union(factor.u.symbols()).union(factor.v.symbols());
            }
        }
        for pre in &preconditions {
            symbols = symbols.union(pre.u.symbols()).union(pre.v.symbols());
        }
        IdentitySpec {
            id,
            lhs,
            rhs,
            preconditions,
            free_symbols: symbols,
        }
    }

    /// Whether a binding must put (alpha, beta) on the zero locus of
    /// theta[0 0; 0 0].
    pub fn needs_zero_locus(&self) -> bool {
        !self.preconditions.is_empty()
    }

    /// The identity seen through the column-swap rename: characteristics
    /// column-swapped, the two argument slots exchanged, symbol roles
    /// exchanged, tau1 and tau2 exchanged. Each factor keeps its value
    /// under `theta[a c; b d](u, v; t1, t2) = theta[c a; d b](v, u; t2, t1)`,
    /// so evaluating the result at the swapped binding and moduli
    /// reproduces the original residuals.
    pub fn column_swap(&self) -> IdentitySpec {
        let swap_terms = |terms: &[Term]| {
            terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    factors: t
                        .factors
                        .iter()
                        .map(|f| Factor {
                            characteristic: f.characteristic.column_swap(),
                            u: f.v.column_swap(),
                            v: f.u.column_swap(),
                        })
                        .collect(),
                })
                .collect()
        };
        let mut free_symbols = SymbolSet::EMPTY;
        for s in self.free_symbols.iter() {
            free_symbols.insert(s.column_swap());
        }
        IdentitySpec {
            id: self.id,
            lhs: swap_terms(&self.lhs),
            rhs: swap_terms(&self.rhs),
            preconditions: self
                .preconditions
                .iter()
                .map(|p| Precondition {
                    characteristic: p.characteristic.column_swap(),
                    u: p.v.column_swap(),
                    v: p.u.column_swap(),
                })
                .collect(),
            free_symbols,
        }
    }
}

/// Scale-normalized measure of one identity instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    /// |LHS - RHS|.
    pub absolute: f64,
    /// Largest |single term| across both sides.
    pub scale: f64,
    /// `absolute / max(scale, 1e-300)`; this is the reported metric.
    pub relative: f64,
}

impl Residual {
    pub(crate) fn from_parts(absolute: f64, scale: f64) -> Self {
        Residual {
            absolute,
            scale,
            relative: absolute / scale.max(1e-300),
        }
    }
}

/// Memoizes theta evaluations within one identity instance; the same factor
/// value appears many times across terms.
pub(crate) struct ThetaCache<'a> {
    omega: &'a PeriodMatrix,
    opts: &'a EvalOptions,
    values: HashMap<(u8, u64, u64, u64, u64), Complex64>,
}

impl<'a> ThetaCache<'a> {
    pub(crate) fn new(omega: &'a PeriodMatrix, opts: &'a EvalOptions) -> Self {
        ThetaCache {
            omega,
            opts,
            values: HashMap::new(),
        }
    }

    pub(crate) fn theta(&mut self, ch: Characteristic, u: Complex64, v: Complex64) -> Result<Complex64> {
        let key = (
            ch.bits(),
            u.re.to_bits(),
            u.im.to_bits(),
            v.re.to_bits(),
            v.im.to_bits(),
        );
        if let Some(&hit) = self.values.get(&key) {
            return Ok(hit);
        }
        let value = theta(ch, ThetaArgs::new(u, v), self.omega, self.opts)?;
        self.values.insert(key, value);
        Ok(value)
    }
}

fn side_sum(
    terms: &[Term],
    binding: &Binding,
    cache: &mut ThetaCache<'_>,
    scale: &mut f64,
) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for term in terms {
        let mut product = Complex64::new(term.coeff as f64, 0.0);
        for factor in &term.factors {
            let u = factor.u.eval(binding, cache.omega)?;
            let v = factor.v.eval(binding, cache.omega)?;
            product *= cache.theta(factor.characteristic, u, v)?;
        }
        *scale = scale.max(product.norm());
        sum += product;
    }
    Ok(sum)
}

/// Evaluate one instance of an identity with the default precondition
/// tolerance.
pub fn evaluate_identity(
    spec: &IdentitySpec,
    binding: &Binding,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
) -> Result<Residual> {
    evaluate_identity_with_tolerance(spec, binding, omega, opts, PRECONDITION_TOLERANCE)
}

/// Evaluate one instance, checking each precondition theta magnitude
/// against `precondition_tolerance` first.
pub fn evaluate_identity_with_tolerance(
    spec: &IdentitySpec,
    binding: &Binding,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
    precondition_tolerance: f64,
) -> Result<Residual> {
    binding.covers(spec.free_symbols)?;
    let mut cache = ThetaCache::new(omega, opts);
    for pre in &spec.preconditions {
        let u = pre.u.eval(binding, omega)?;
        let v = pre.v.eval(binding, omega)?;
        let value = cache.theta(pre.characteristic, u, v)?;
        if value.norm() >= precondition_tolerance {
            return Err(Error::precondition(pre.characteristic, value));
        }
    }
    let mut scale = 0.0f64;
    let lhs = side_sum(&spec.lhs, binding, &mut cache, &mut scale)?;
    let rhs = side_sum(&spec.rhs, binding, &mut cache, &mut scale)?;
    Ok(Residual::from_parts((lhs - rhs).norm(), scale))
}

/// The half-sum/half-difference argument transform:
/// `(u1,u2,u3,u4) -> ((u1+u2+u3+u4)/2, (u1+u2-u3-u4)/2, (u1-u2+u3-u4)/2,
/// (u1-u2-u3+u4)/2)`, applied to both coordinates. It is an involution.
pub fn tilde_transform(
    u: [Complex64; 4],
    v: [Complex64; 4],
) -> ([Complex64; 4], [Complex64; 4]) {
    let mix = |w: [Complex64; 4]| {
        [
            (w[0] + w[1] + w[2] + w[3]) * 0.5,
            (w[0] + w[1] - w[2] - w[3]) * 0.5,
            (w[0] - w[1] + w[2] - w[3]) * 0.5,
            (w[0] - w[1] - w[2] + w[3]) * 0.5,
        ]
    };
    (mix(u), mix(v))
}

/// The half-period shifts `[q s; p r]` with odd parity `q p + s r`, in the
/// order the zero-locus addition formulas use them.
pub fn odd_half_period_shifts() -> [HalfPeriodShift; 6] {
    // (p, q, r, s)
    [
        HalfPeriodShift::new(1, 1, 1, 0),
        HalfPeriodShift::new(1, 1, 0, 0),
        HalfPeriodShift::new(1, 1, 0, 1),
        HalfPeriodShift::new(1, 0, 1, 1),
        HalfPeriodShift::new(0, 0, 1, 1),
        HalfPeriodShift::new(0, 1, 1, 1),
    ]
}

/// The six (alpha, beta) pairs on which theta[0 0; 0 0] vanishes: the
/// half-periods of the six odd characteristics.
pub fn odd_half_periods(omega: &PeriodMatrix) -> [(Complex64, Complex64); 6] {
    odd_half_period_shifts().map(|shift| shift.displacement(omega))
}
