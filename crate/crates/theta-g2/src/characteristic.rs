//! Half-integer characteristics for the genus-2 theta function.
//!
//! A characteristic is the 2x2 label
//!
//! ```text
//!     [ a  c ]
//!     [ b  d ]
//! ```
//!
//! with entries in {0, 1} after reduction. `a`, `c` shift the summation
//! lattice; `b`, `d` shift the arguments. Text I/O uses the four-digit
//! string `acbd` (top row then bottom row), e.g. `[0 0; 1 1]` is `"0011"`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parity of a characteristic: odd theta functions vanish at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A reduced genus-2 characteristic. All entries are 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Characteristic {
    pub a: u8,
    pub c: u8,
    pub b: u8,
    pub d: u8,
}

impl Characteristic {
    /// Build from entries that must already be 0 or 1.
    pub fn new(a: u8, c: u8, b: u8, d: u8) -> Result<Self> {
        if a > 1 || c > 1 || b > 1 || d > 1 {
            return Err(Error::BadCharacteristic(format!("[{a} {c}; {b} {d}]")));
        }
        Ok(Characteristic { a, c, b, d })
    }

    /// `(a*b + c*d) mod 2`. Odd characteristics have theta(0,0) = 0.
    pub fn parity(self) -> Parity {
        if (self.a * self.b + self.c * self.d) % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self.parity() == Parity::Odd
    }

    /// Swap the two columns: `[a c; b d] -> [c a; d b]`.
    ///
    /// Under this swap the theta function satisfies
    /// `theta[a c; b d](u, v; t1, t2, t12) = theta[c a; d b](v, u; t2, t1, t12)`.
    pub fn column_swap(self) -> Self {
        Characteristic {
            a: self.c,
            c: self.a,
            b: self.d,
            d: self.b,
        }
    }

    /// All sixteen reduced characteristics in `acbd` counting order.
    pub fn all() -> impl Iterator<Item = Characteristic> {
        (0u8..16).map(|bits| Characteristic {
            a: (bits >> 3) & 1,
            c: (bits >> 2) & 1,
            b: (bits >> 1) & 1,
            d: bits & 1,
        })
    }

    /// The six odd characteristics, in `acbd` counting order.
    pub fn odd() -> impl Iterator<Item = Characteristic> {
        Characteristic::all().filter(|ch| ch.is_odd())
    }

    /// Compact nibble used as a cache key.
    pub(crate) fn bits(self) -> u8 {
        (self.a << 3) | (self.c << 2) | (self.b << 1) | self.d
    }
}

/// Reduce arbitrary integer entries to {0, 1} and return the phase relating
/// the two sums: `theta[raw](u, v) = phase * theta[reduced](u, v)`.
///
/// Shifting `a` or `c` by 2 reindexes the lattice (phase 1). Shifting `b` by
/// 2 multiplies each summand by `exp(2 pi i (m + a/2))`, i.e. by
/// `exp(pi i a)`; likewise `d` by 2 contributes `exp(pi i c)`. The phase is
/// therefore always +1 or -1.
pub fn reduce_characteristic(a: i64, c: i64, b: i64, d: i64) -> (Characteristic, f64) {
    let ar = a.rem_euclid(2) as u8;
    let cr = c.rem_euclid(2) as u8;
    let br = b.rem_euclid(2) as u8;
    let dr = d.rem_euclid(2) as u8;
    // Number of 2-steps taken by b and d (sign of the step does not matter
    // modulo 2).
    let b_steps = (b - br as i64) / 2;
    let d_steps = (d - dr as i64) / 2;
    let exponent = (ar as i64) * b_steps + (cr as i64) * d_steps;
    let phase = if exponent.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    (
        Characteristic {
            a: ar,
            c: cr,
            b: br,
            d: dr,
        },
        phase,
    )
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.a, self.c, self.b, self.d)
    }
}

impl FromStr for Characteristic {
    type Err = Error;

    /// Parse the four-digit `acbd` form, each digit 0 or 1.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.len() != 4 {
            return Err(Error::BadCharacteristic(s.to_string()));
        }
        let mut digits = [0u8; 4];
        for (slot, &byte) in digits.iter_mut().zip(bytes) {
            *slot = match byte {
                b'0' => 0,
                b'1' => 1,
                _ => return Err(Error::BadCharacteristic(s.to_string())),
            };
        }
        Ok(Characteristic {
            a: digits[0],
            c: digits[1],
            b: digits[2],
            d: digits[3],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(s: &str) -> Characteristic {
        s.parse().unwrap()
    }

    #[test]
    fn parity_matches_ab_plus_cd() {
        assert_eq!(ch("0011").parity(), Parity::Even);
        assert_eq!(ch("1010").parity(), Parity::Odd);
        assert_eq!(ch("1111").parity(), Parity::Even);
    }

    #[test]
    fn exactly_six_odd_characteristics() {
        let odd: Vec<String> = Characteristic::odd().map(|c| c.to_string()).collect();
        assert_eq!(odd, ["0101", "0111", "1010", "1011", "1101", "1110"]);
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_characteristic(2, 0, 0, 0), (ch("0000"), 1.0));
        assert_eq!(reduce_characteristic(1, 0, 2, 0), (ch("1000"), -1.0));
        assert_eq!(reduce_characteristic(0, 0, 0, 0), (ch("0000"), 1.0));
    }

    #[test]
    fn reduction_handles_negative_entries() {
        // b = -2 is one 2-step, so the phase is exp(pi i a) again.
        assert_eq!(reduce_characteristic(1, 0, -2, 0), (ch("1000"), -1.0));
        assert_eq!(reduce_characteristic(0, 1, 0, -2), (ch("0100"), -1.0));
        assert_eq!(reduce_characteristic(-1, 0, 0, 0), (ch("1000"), 1.0));
    }

    #[test]
    fn parse_rejects_bad_digits() {
        assert!(matches!(
            "2011".parse::<Characteristic>(),
            Err(Error::BadCharacteristic(_))
        ));
        assert!("001".parse::<Characteristic>().is_err());
        assert!("00111".parse::<Characteristic>().is_err());
    }

    #[test]
    fn column_swap_is_involutive() {
        for c in Characteristic::all() {
            assert_eq!(c.column_swap().column_swap(), c);
        }
    }
}
