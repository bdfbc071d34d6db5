//! Shared text formats: complex scalars as `RE±IMi` and characteristics as
//! the four-digit `acbd` string.
//!
//! Complex literal grammar: optional sign, decimal real part, a mandatory
//! sign, decimal imaginary magnitude, trailing `i`, no whitespace.
//! `0.5-1.25i` parses to `0.5 - 1.25i`. Exponent notation is accepted in
//! either part (`1e-3+2.5e0i`).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parse a complex literal in the `RE±IMi` grammar.
pub fn parse_complex(input: &str) -> Result<Complex64> {
    let malformed = |reason: &'static str| Error::ParseComplex {
        input: input.to_string(),
        reason,
    };
    let bytes = input.as_bytes();
    if bytes.iter().any(|b| b.is_ascii_whitespace()) {
        return Err(malformed("whitespace is not allowed"));
    }
    let Some(stripped) = input.strip_suffix('i') else {
        return Err(malformed("missing trailing 'i'"));
    };
    // The separating sign is the last '+'/'-' that does not follow an
    // exponent marker and is not the leading sign of the real part.
    let split = stripped
        .char_indices()
        .rev()
        .find(|&(idx, ch)| {
            idx > 0
                && (ch == '+' || ch == '-')
                && !matches!(stripped.as_bytes()[idx - 1], b'e' | b'E')
        })
        .map(|(idx, _)| idx);
    let Some(split) = split else {
        return Err(malformed("missing sign between real and imaginary parts"));
    };
    let re: f64 = stripped[..split]
        .parse()
        .map_err(|_| malformed("invalid real part"))?;
    let sign = if stripped.as_bytes()[split] == b'-' {
        -1.0
    } else {
        1.0
    };
    let magnitude: f64 = stripped[split + 1..]
        .parse()
        .map_err(|_| malformed("invalid imaginary part"))?;
    if magnitude.is_sign_negative() {
        return Err(malformed("imaginary magnitude must be unsigned"));
    }
    Ok(Complex64::new(re, sign * magnitude))
}

/// Format with 17 significant digits per part, round-trip safe for f64.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16e}{}{:.16e}i", z.re, sign, z.im.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_plain_literals() {
        assert_eq!(parse_complex("0.5-1.25i").unwrap(), Complex64::new(0.5, -1.25));
        assert_eq!(parse_complex("0+0i").unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(parse_complex("-1+2i").unwrap(), Complex64::new(-1.0, 2.0));
        assert_eq!(parse_complex("0+1i").unwrap(), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn parses_exponent_notation() {
        assert_eq!(
            parse_complex("1e-3+2.5e0i").unwrap(),
            Complex64::new(1e-3, 2.5)
        );
        assert_eq!(
            parse_complex("-2.5E-1-1E2i").unwrap(),
            Complex64::new(-0.25, -100.0)
        );
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "1", "1i", "1+i", "1 + 2i", "1+2", "1+-2i", "i", "1+2j"] {
            assert!(parse_complex(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn formats_example_values() {
        assert_eq!(
            format_complex(Complex64::new(0.5, -1.25)),
            "5.0000000000000000e-1-1.2500000000000000e0i"
        );
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(re in -1e12f64..1e12, im in -1e12f64..1e12) {
            let z = Complex64::new(re, im);
            let back = parse_complex(&format_complex(z)).unwrap();
            prop_assert_eq!(z, back);
        }
    }
}
