//! The hyperelliptic function `F[a c; b d](y, z) = theta[a c; b d](y, z) /
//! theta[0 0; 1 1](y, z)` and its fifteen addition formulas
//!
//! ```text
//!   F[target](y+y', z+z') = A_i / (B0 * B_i)
//! ```
//!
//! where `A_i` is a four-term signed sum of products of F-values at (y, z)
//! and (y', z'), `B_i` collects one or two F-values at the origin, and all
//! fifteen formulas share the same `B0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::characteristic::Characteristic;
use crate::error::{Error, Result};
use crate::eval::EvalOptions;
use crate::identity::{Residual, ThetaCache};
use crate::period::PeriodMatrix;

/// Relative threshold below which denominators are treated as poles;
/// smaller ratios are meaningless in double precision.
pub const POLE_GUARD: f64 = 1e-10;

/// The characteristic of the common denominator theta.
pub fn denominator_characteristic() -> Characteristic {
    "0011".parse().unwrap()
}

fn f_value(
    cache: &mut ThetaCache<'_>,
    ch: Characteristic,
    y: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    let numerator = cache.theta(ch, y, z)?;
    let denominator = cache.theta(denominator_characteristic(), y, z)?;
    if denominator.norm() < POLE_GUARD * numerator.norm() {
        return Err(Error::DenominatorNearZero {
            denominator: denominator.norm(),
        });
    }
    Ok(numerator / denominator)
}

/// Evaluate `F[ch](y, z)`.
pub fn hyperelliptic_f(
    ch: Characteristic,
    y: Complex64,
    z: Complex64,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
) -> Result<Complex64> {
    let mut cache = ThetaCache::new(omega, opts);
    f_value(&mut cache, ch, y, z)
}

/// Point a table factor is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FPoint {
    /// (y, z)
    YZ,
    /// (y', z')
    YpZp,
}

/// One signed product of F-factors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FTerm {
    pub sign: i32,
    pub factors: Vec<(Characteristic, FPoint)>,
}

/// The data of one addition formula.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FAdditionSpec {
    pub index: u8,
    /// Characteristic the formula predicts at (y+y', z+z').
    pub target: Characteristic,
    /// The four-term numerator A_i.
    pub numerator: Vec<FTerm>,
    /// Characteristics whose F-values at the origin form B_i.
    pub denominator: Vec<Characteristic>,
}

struct FRow {
    target: &'static str,
    numerator: [(i32, &'static [&'static str], &'static [&'static str]); 4],
    denominator: &'static [&'static str],
}

/// Numerator/denominator tables for formulas 1..=15. Each numerator entry
/// lists the factor characteristics at (y, z) and at (y', z'); formulas
/// 10..=15 carry three-factor first and third terms because an
/// `F[0 0; 1 1] = 1` factor collapses there.
const F_ROWS: [FRow; 15] = [
    FRow {
        target: "0001",
        numerator: [
            (1, &["0001"], &["0001"]),
            (-1, &["1011", "1001"], &["1011", "1001"]),
            (-1, &["0101", "0111"], &["0101", "0111"]),
            (1, &["1101", "1111"], &["1101", "1111"]),
        ],
        denominator: &["0001"],
    },
    FRow {
        target: "0010",
        numerator: [
            (1, &["0010"], &["0010"]),
            (-1, &["1011", "1010"], &["1011", "1010"]),
            (-1, &["0101", "0100"], &["0101", "0100"]),
            (1, &["1101", "1100"], &["1101", "1100"]),
        ],
        denominator: &["0010"],
    },
    FRow {
        target: "1001",
        numerator: [
            (1, &["1001"], &["1001"]),
            (-1, &["1011", "0001"], &["1011", "0001"]),
            (1, &["0101", "1111"], &["0101", "1111"]),
            (-1, &["1101", "0111"], &["1101", "0111"]),
        ],
        denominator: &["1001"],
    },
    FRow {
        target: "0110",
        numerator: [
            (1, &["0110"], &["0110"]),
            (-1, &["1011", "1110"], &["1011", "1110"]),
            (-1, &["0101", "0000"], &["0101", "0000"]),
            (1, &["1101", "1000"], &["1101", "1000"]),
        ],
        denominator: &["0110"],
    },
    FRow {
        target: "0100",
        numerator: [
            (1, &["0100"], &["0100"]),
            (-1, &["1011", "1100"], &["1011", "1100"]),
            (-1, &["0101", "0010"], &["0101", "0010"]),
            (1, &["1101", "1010"], &["1101", "1010"]),
        ],
        denominator: &["0100"],
    },
    FRow {
        target: "1000",
        numerator: [
            (1, &["1000"], &["1000"]),
            (-1, &["1011", "0000"], &["1011", "0000"]),
            (1, &["0101", "1110"], &["0101", "1110"]),
            (-1, &["1101", "0110"], &["1101", "0110"]),
        ],
        denominator: &["1000"],
    },
    FRow {
        target: "1100",
        numerator: [
            (1, &["1100"], &["1100"]),
            (-1, &["1011", "0100"], &["1011", "0100"]),
            (1, &["0101", "1010"], &["0101", "1010"]),
            (-1, &["1101", "0010"], &["1101", "0010"]),
        ],
        denominator: &["1100"],
    },
    FRow {
        target: "1111",
        numerator: [
            (1, &["1111"], &["1111"]),
            (-1, &["1011", "0111"], &["1011", "0111"]),
            (1, &["0101", "1001"], &["0101", "1001"]),
            (-1, &["1101", "0001"], &["1101", "0001"]),
        ],
        denominator: &["1111"],
    },
    FRow {
        target: "0000",
        numerator: [
            (1, &["0000"], &["0000"]),
            (-1, &["1011", "1000"], &["1011", "1000"]),
            (-1, &["0101", "0110"], &["0101", "0110"]),
            (1, &["1101", "1110"], &["1101", "1110"]),
        ],
        denominator: &["0000"],
    },
    FRow {
        target: "1011",
        numerator: [
            (1, &["1011"], &["0001", "1001"]),
            (-1, &["0111", "1111"], &["0101", "1101"]),
            (1, &["0001", "1001"], &["1011"]),
            (-1, &["0101", "1101"], &["0111", "1111"]),
        ],
        denominator: &["1001", "0001"],
    },
    FRow {
        target: "1010",
        numerator: [
            (1, &["1010"], &["0001", "1000"]),
            (-1, &["0111", "1110"], &["0101", "1100"]),
            (1, &["0001", "1000"], &["1010"]),
            (-1, &["0101", "1100"], &["0111", "1110"]),
        ],
        denominator: &["1000", "0001"],
    },
    FRow {
        target: "1110",
        numerator: [
            (1, &["1110"], &["0001", "1100"]),
            (-1, &["0111", "1010"], &["0101", "1000"]),
            (1, &["0001", "1100"], &["1110"]),
            (-1, &["0101", "1000"], &["0111", "1010"]),
        ],
        denominator: &["1100", "0001"],
    },
    FRow {
        target: "0111",
        numerator: [
            (1, &["0111"], &["0010", "0110"]),
            (-1, &["1011", "1111"], &["1010", "1110"]),
            (1, &["0010", "0110"], &["0111"]),
            (-1, &["1010", "1110"], &["1011", "1111"]),
        ],
        denominator: &["0110", "0010"],
    },
    FRow {
        target: "0101",
        numerator: [
            (1, &["0101"], &["0010", "0100"]),
            (-1, &["1011", "1101"], &["1010", "1100"]),
            (1, &["0010", "0100"], &["0101"]),
            (-1, &["1010", "1100"], &["1011", "1101"]),
        ],
        denominator: &["0100", "0010"],
    },
    FRow {
        target: "1101",
        numerator: [
            (1, &["1101"], &["0010", "1100"]),
            (-1, &["1011", "0101"], &["1010", "0100"]),
            (1, &["0010", "1100"], &["1101"]),
            (-1, &["1010", "0100"], &["1011", "0101"]),
        ],
        denominator: &["1100", "0010"],
    },
];

/// The spec of addition formula `i` (1..=15).
pub fn f_addition_spec(index: u8) -> FAdditionSpec {
    assert!((1..=15).contains(&index), "formula index out of range");
    let row = &F_ROWS[(index - 1) as usize];
    let ch = |s: &str| s.parse::<Characteristic>().unwrap();
    let numerator = row
        .numerator
        .iter()
        .map(|&(sign, at_yz, at_ypzp)| {
            let mut factors: Vec<(Characteristic, FPoint)> = Vec::new();
            factors.extend(at_yz.iter().map(|c| (ch(c), FPoint::YZ)));
            factors.extend(at_ypzp.iter().map(|c| (ch(c), FPoint::YpZp)));
            FTerm { sign, factors }
        })
        .collect();
    FAdditionSpec {
        index,
        target: ch(row.target),
        numerator,
        denominator: row.denominator.iter().map(|c| ch(c)).collect(),
    }
}

/// The shared denominator
/// `B0 = 1 - F^2[1 0; 1 1](y,z) F^2[1 0; 1 1](y',z')
///        - F^2[0 1; 0 1](y,z) F^2[0 1; 0 1](y',z')
///        + F^2[1 1; 0 1](y,z) F^2[1 1; 0 1](y',z')`.
pub fn b0(
    y: Complex64,
    z: Complex64,
    yp: Complex64,
    zp: Complex64,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
) -> Result<Complex64> {
    let mut cache = ThetaCache::new(omega, opts);
    b0_cached(&mut cache, y, z, yp, zp).map(|(value, _)| value)
}

/// B0 together with the largest magnitude among its four terms, for the
/// pole guard.
fn b0_cached(
    cache: &mut ThetaCache<'_>,
    y: Complex64,
    z: Complex64,
    yp: Complex64,
    zp: Complex64,
) -> Result<(Complex64, f64)> {
    let ch = |s: &str| s.parse::<Characteristic>().unwrap();
    let square_pair = |cache: &mut ThetaCache<'_>, c: Characteristic| -> Result<Complex64> {
        let a = f_value(cache, c, y, z)?;
        let b = f_value(cache, c, yp, zp)?;
        Ok(a * a * b * b)
    };
    let t1 = square_pair(cache, ch("1011"))?;
    let t2 = square_pair(cache, ch("0101"))?;
    let t3 = square_pair(cache, ch("1101"))?;
    let value = Complex64::new(1.0, 0.0) - t1 - t2 + t3;
    let scale = 1.0f64.max(t1.norm()).max(t2.norm()).max(t3.norm());
    Ok((value, scale))
}

/// Evaluate `A_i / (B0 * B_i)`, the predicted value of `F[target]` at
/// (y+y', z+z').
pub fn f_addition_rhs(
    index: u8,
    y: Complex64,
    z: Complex64,
    yp: Complex64,
    zp: Complex64,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
) -> Result<Complex64> {
    let mut cache = ThetaCache::new(omega, opts);
    f_addition_rhs_cached(&mut cache, index, y, z, yp, zp)
}

fn f_addition_rhs_cached(
    cache: &mut ThetaCache<'_>,
    index: u8,
    y: Complex64,
    z: Complex64,
    yp: Complex64,
    zp: Complex64,
) -> Result<Complex64> {
    let spec = f_addition_spec(index);

    let (b0_value, b0_scale) = b0_cached(cache, y, z, yp, zp)?;
    if b0_value.norm() < POLE_GUARD * b0_scale {
        return Err(Error::PoleEncountered {
            index,
            which: "B0",
            magnitude: b0_value.norm(),
        });
    }

    let zero = Complex64::new(0.0, 0.0);
    let mut b_i = Complex64::new(1.0, 0.0);
    for &c in &spec.denominator {
        b_i *= f_value(cache, c, zero, zero)?;
    }
    if b_i.norm() < POLE_GUARD {
        return Err(Error::PoleEncountered {
            index,
            which: "B_i",
            magnitude: b_i.norm(),
        });
    }

    let mut numerator = Complex64::new(0.0, 0.0);
    for term in &spec.numerator {
        let mut product = Complex64::new(term.sign as f64, 0.0);
        for &(c, point) in &term.factors {
            product *= match point {
                FPoint::YZ => f_value(cache, c, y, z)?,
                FPoint::YpZp => f_value(cache, c, yp, zp)?,
            };
        }
        numerator += product;
    }
    Ok(numerator / (b0_value * b_i))
}

/// Relative residual between the formula's prediction and the directly
/// evaluated `F[target](y+y', z+z')`.
pub fn f_addition_residual(
    index: u8,
    y: Complex64,
    z: Complex64,
    yp: Complex64,
    zp: Complex64,
    omega: &PeriodMatrix,
    opts: &EvalOptions,
) -> Result<Residual> {
    let mut cache = ThetaCache::new(omega, opts);
    let predicted = f_addition_rhs_cached(&mut cache, index, y, z, yp, zp)?;
    let target = f_addition_spec(index).target;
    let direct = f_value(&mut cache, target, y + yp, z + zp)?;
    let scale = predicted.norm().max(direct.norm());
    Ok(Residual::from_parts((predicted - direct).norm(), scale))
}
