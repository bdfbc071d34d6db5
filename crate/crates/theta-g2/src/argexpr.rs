//! Exact rational affine argument expressions.
//!
//! Every theta factor in an identity takes arguments of the form
//!
//! ```text
//!   sum_s q_s * s  +  q0  +  q1 * tau1  +  q2 * tau2  +  q12 * tau12
//! ```
//!
//! over the symbol set {y, z, y', z', alpha, beta, alpha', beta'} with
//! rational coefficients (denominators 1 or 2 in practice). Coefficients
//! stay exact until a numeric binding is substituted.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::period::PeriodMatrix;

pub type Rational = Ratio<i64>;

/// The eight free symbols an identity may quantify over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Y,
    Z,
    YPrime,
    ZPrime,
    Alpha,
    Beta,
    AlphaPrime,
    BetaPrime,
}

impl Symbol {
    pub const ALL: [Symbol; 8] = [
        Symbol::Y,
        Symbol::Z,
        Symbol::YPrime,
        Symbol::ZPrime,
        Symbol::Alpha,
        Symbol::Beta,
        Symbol::AlphaPrime,
        Symbol::BetaPrime,
    ];

    pub fn index(self) -> usize {
        match self {
            Symbol::Y => 0,
            Symbol::Z => 1,
            Symbol::YPrime => 2,
            Symbol::ZPrime => 3,
            Symbol::Alpha => 4,
            Symbol::Beta => 5,
            Symbol::AlphaPrime => 6,
            Symbol::BetaPrime => 7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Y => "y",
            Symbol::Z => "z",
            Symbol::YPrime => "y'",
            Symbol::ZPrime => "z'",
            Symbol::Alpha => "alpha",
            Symbol::Beta => "beta",
            Symbol::AlphaPrime => "alpha'",
            Symbol::BetaPrime => "beta'",
        }
    }

    /// Partner under the column-swap rename: y<->z, y'<->z',
    /// alpha<->beta, alpha'<->beta'.
    pub fn column_swap(self) -> Symbol {
        match self {
            Symbol::Y => Symbol::Z,
            Symbol::Z => Symbol::Y,
            Symbol::YPrime => Symbol::ZPrime,
            Symbol::ZPrime => Symbol::YPrime,
            Symbol::Alpha => Symbol::Beta,
            Symbol::Beta => Symbol::Alpha,
            Symbol::AlphaPrime => Symbol::BetaPrime,
            Symbol::BetaPrime => Symbol::AlphaPrime,
        }
    }
}

/// A subset of the eight symbols, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SymbolSet(u8);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    pub fn of(symbols: &[Symbol]) -> Self {
        let mut set = SymbolSet(0);
        for &s in symbols {
            set.insert(s);
        }
        set
    }

    pub fn insert(&mut self, s: Symbol) {
        self.0 |= 1 << s.index();
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.0 & (1 << s.index()) != 0
    }

    pub fn union(self, other: SymbolSet) -> SymbolSet {
        SymbolSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Symbol> {
        Symbol::ALL.into_iter().filter(move |s| self.contains(*s))
    }
}

/// Affine expression with exact rational coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgExpr {
    /// Coefficient per symbol, indexed by [`Symbol::index`].
    coeffs: [Rational; 8],
    constant: Rational,
    tau1: Rational,
    tau2: Rational,
    tau12: Rational,
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Ratio::new(numer, denom)
}

impl ArgExpr {
    pub const ZERO: ArgExpr = ArgExpr {
        coeffs: [Ratio::new_raw(0, 1); 8],
        constant: Ratio::new_raw(0, 1),
        tau1: Ratio::new_raw(0, 1),
        tau2: Ratio::new_raw(0, 1),
        tau12: Ratio::new_raw(0, 1),
    };

    pub fn symbol(s: Symbol) -> ArgExpr {
        let mut e = ArgExpr::ZERO;
        e.coeffs[s.index()] = rational(1, 1);
        e
    }

    pub fn constant(value: Rational) -> ArgExpr {
        ArgExpr {
            constant: value,
            ..ArgExpr::ZERO
        }
    }

    /// The constant 1/2.
    pub fn half() -> ArgExpr {
        ArgExpr::constant(rational(1, 2))
    }

    pub fn tau1(coeff: Rational) -> ArgExpr {
        ArgExpr {
            tau1: coeff,
            ..ArgExpr::ZERO
        }
    }

    pub fn tau2(coeff: Rational) -> ArgExpr {
        ArgExpr {
            tau2: coeff,
            ..ArgExpr::ZERO
        }
    }

    pub fn tau12(coeff: Rational) -> ArgExpr {
        ArgExpr {
            tau12: coeff,
            ..ArgExpr::ZERO
        }
    }

    pub fn scale(mut self, factor: Rational) -> ArgExpr {
        for c in &mut self.coeffs {
            *c *= factor;
        }
        self.constant *= factor;
        self.tau1 *= factor;
        self.tau2 *= factor;
        self.tau12 *= factor;
        self
    }

    /// Symbols with a nonzero coefficient.
    pub fn symbols(&self) -> SymbolSet {
        let mut set = SymbolSet::EMPTY;
        for s in Symbol::ALL {
            if self.coeffs[s.index()] != Ratio::new_raw(0, 1) {
                set.insert(s);
            }
        }
        set
    }

    /// Substitute a numeric binding and moduli.
    pub fn eval(&self, binding: &Binding, omega: &PeriodMatrix) -> Result<Complex64> {
        let mut acc = Complex64::new(to_f64(self.constant), 0.0);
        acc += omega.tau1() * to_f64(self.tau1);
        acc += omega.tau2() * to_f64(self.tau2);
        acc += omega.tau12() * to_f64(self.tau12);
        for s in Symbol::ALL {
            let q = self.coeffs[s.index()];
            if q != Ratio::new_raw(0, 1) {
                let value = binding.get(s).ok_or(Error::MissingSymbol(s.name()))?;
                acc += value * to_f64(q);
            }
        }
        Ok(acc)
    }

    /// Apply the column-swap rename: swap paired symbols and tau1<->tau2.
    pub fn column_swap(&self) -> ArgExpr {
        let mut out = *self;
        for s in Symbol::ALL {
            out.coeffs[s.column_swap().index()] = self.coeffs[s.index()];
        }
        std::mem::swap(&mut out.tau1, &mut out.tau2);
        out
    }
}

fn to_f64(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

impl Add for ArgExpr {
    type Output = ArgExpr;
    fn add(mut self, rhs: ArgExpr) -> ArgExpr {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self.constant += rhs.constant;
        self.tau1 += rhs.tau1;
        self.tau2 += rhs.tau2;
        self.tau12 += rhs.tau12;
        self
    }
}

impl Sub for ArgExpr {
    type Output = ArgExpr;
    fn sub(self, rhs: ArgExpr) -> ArgExpr {
        self + (-rhs)
    }
}

impl Neg for ArgExpr {
    type Output = ArgExpr;
    fn neg(self) -> ArgExpr {
        self.scale(rational(-1, 1))
    }
}

impl fmt::Display for ArgExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        let piece = |f: &mut fmt::Formatter<'_>,
                         q: Rational,
                         name: &str,
                         wrote: &mut bool|
         -> fmt::Result {
            if q == Ratio::new_raw(0, 1) {
                return Ok(());
            }
            let sign = if q < Ratio::new_raw(0, 1) { "-" } else { "+" };
            if *wrote {
                write!(f, "{sign}")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            *wrote = true;
            let q = if q < Ratio::new_raw(0, 1) { -q } else { q };
            let numer = *q.numer();
            let denom = *q.denom();
            if name.is_empty() {
                if denom == 1 {
                    write!(f, "{numer}")
                } else {
                    write!(f, "{numer}/{denom}")
                }
            } else if numer == 1 && denom == 1 {
                write!(f, "{name}")
            } else if numer == 1 {
                write!(f, "{name}/{denom}")
            } else if denom == 1 {
                write!(f, "{numer}{name}")
            } else {
                write!(f, "{numer}{name}/{denom}")
            }
        };
        for s in Symbol::ALL {
            piece(f, self.coeffs[s.index()], s.name(), &mut wrote)?;
        }
        piece(f, self.constant, "", &mut wrote)?;
        piece(f, self.tau1, "tau1", &mut wrote)?;
        piece(f, self.tau2, "tau2", &mut wrote)?;
        piece(f, self.tau12, "tau12", &mut wrote)?;
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A numeric assignment for the free symbols.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Binding {
    values: [Option<Complex64>; 8],
}

impl Binding {
    pub fn new() -> Self {
        Binding::default()
    }

    pub fn set(&mut self, s: Symbol, value: Complex64) -> &mut Self {
        self.values[s.index()] = Some(value);
        self
    }

    pub fn get(&self, s: Symbol) -> Option<Complex64> {
        self.values[s.index()]
    }

    /// Check that every symbol of `required` is assigned.
    pub fn covers(&self, required: SymbolSet) -> Result<()> {
        for s in required.iter() {
            if self.values[s.index()].is_none() {
                return Err(Error::MissingSymbol(s.name()));
            }
        }
        Ok(())
    }

    /// The binding seen through the column-swap rename: the value of `y`
    /// moves to `z` and so on.
    pub fn column_swap(&self) -> Binding {
        let mut out = Binding::new();
        for s in Symbol::ALL {
            if let Some(v) = self.values[s.index()] {
                out.set(s.column_swap(), v);
            }
        }
        out
    }
}
