//! The built-in identity catalog: the quartic product relation, the
//! parameterized master relation, the three fundamental relations, the 16
//! theta-level addition formulas, and the 15 derivation steps, each encoded
//! as an [`IdentitySpec`] over exact rational arguments.

use crate::argexpr::{rational, ArgExpr, Symbol};
use crate::characteristic::Characteristic;
use crate::error::{Error, Result};
use crate::identity::{Factor, IdentityId, IdentitySpec, Precondition, Term};

fn ch(s: &str) -> Characteristic {
    s.parse().expect("table characteristic")
}

fn y() -> ArgExpr {
    ArgExpr::symbol(Symbol::Y)
}
fn z() -> ArgExpr {
    ArgExpr::symbol(Symbol::Z)
}
fn yp() -> ArgExpr {
    ArgExpr::symbol(Symbol::YPrime)
}
fn zp() -> ArgExpr {
    ArgExpr::symbol(Symbol::ZPrime)
}
fn alpha() -> ArgExpr {
    ArgExpr::symbol(Symbol::Alpha)
}
fn beta() -> ArgExpr {
    ArgExpr::symbol(Symbol::Beta)
}
fn alpha_p() -> ArgExpr {
    ArgExpr::symbol(Symbol::AlphaPrime)
}
fn beta_p() -> ArgExpr {
    ArgExpr::symbol(Symbol::BetaPrime)
}
fn half() -> ArgExpr {
    ArgExpr::half()
}

type Args = (ArgExpr, ArgExpr);

fn origin() -> Args {
    (ArgExpr::ZERO, ArgExpr::ZERO)
}
fn at_yz() -> Args {
    (y(), z())
}
fn at_ypzp() -> Args {
    (yp(), zp())
}
/// (y+y', z+z')
fn at_sum() -> Args {
    (y() + yp(), z() + zp())
}
/// (y-y', z-z')
fn at_diff() -> Args {
    (y() - yp(), z() - zp())
}
/// (alpha, beta)
fn at_ab() -> Args {
    (alpha(), beta())
}
/// (y+y'+alpha, z+z'+beta)
fn at_sum_ab() -> Args {
    (y() + yp() + alpha(), z() + zp() + beta())
}
/// (y+alpha, z+beta)
fn at_y_ab() -> Args {
    (y() + alpha(), z() + beta())
}
/// (y'+alpha, z'+beta)
fn at_yp_ab() -> Args {
    (yp() + alpha(), zp() + beta())
}
/// (1/2, 1/2)
fn at_halves() -> Args {
    (half(), half())
}
/// (0, 1/2)
fn at_zero_half() -> Args {
    (ArgExpr::ZERO, half())
}
/// (y-y'+1/2, z-z'+1/2)
fn at_diff_halves() -> Args {
    (y() - yp() + half(), z() - zp() + half())
}
/// (y-y', z-z'+1/2)
fn at_diff_zhalf() -> Args {
    (y() - yp(), z() - zp() + half())
}
/// (y+alpha+1/2, z+beta+1/2)
fn at_y_ab_h() -> Args {
    (y() + alpha() + half(), z() + beta() + half())
}
/// (y'+alpha+1/2, z'+beta+1/2)
fn at_yp_ab_h() -> Args {
    (yp() + alpha() + half(), zp() + beta() + half())
}
/// (y+alpha, z+beta+1/2)
fn at_y_ab_zh() -> Args {
    (y() + alpha(), z() + beta() + half())
}
/// (y'+alpha, z'+beta+1/2)
fn at_yp_ab_zh() -> Args {
    (yp() + alpha(), zp() + beta() + half())
}
/// (alpha+1/2, beta)
fn at_ab_h() -> Args {
    (alpha() + half(), beta())
}
/// (y+y'+alpha+1/2, z+z'+beta)
fn at_sum_ab_h() -> Args {
    (y() + yp() + alpha() + half(), z() + zp() + beta())
}

fn factor(c: &str, at: Args) -> Factor {
    Factor::new(ch(c), at.0, at.1)
}

fn term(coeff: i32, factors: &[(&str, Args)]) -> Term {
    Term::new(
        coeff,
        factors.iter().map(|&(c, at)| factor(c, at)).collect(),
    )
}

/// Product term of four factors alternating between the two argument pairs
/// `(first, second)`: used by every relation whose terms read
/// `theta[c1](first) theta[c2](second) theta[c3](first') theta[c4](second')`.
fn paired_term(
    coeff: i32,
    chars: [&str; 4],
    first: Args,
    second: Args,
    first_p: Args,
    second_p: Args,
) -> Term {
    term(
        coeff,
        &[
            (chars[0], first),
            (chars[1], second),
            (chars[2], first_p),
            (chars[3], second_p),
        ],
    )
}

/// Characteristics summed over in the quartic and master relations.
const SUMMED_CHARS: [&str; 4] = ["0000", "0100", "1000", "1100"];

const ZERO_LOCUS: fn() -> Precondition = || Precondition {
    characteristic: ch("0000"),
    u: alpha(),
    v: beta(),
};

fn riemann() -> IdentitySpec {
    let u = [y(), yp(), alpha(), alpha_p()];
    let v = [z(), zp(), beta(), beta_p()];
    let tilde = |w: [ArgExpr; 4]| {
        let h = rational(1, 2);
        [
            (w[0] + w[1] + w[2] + w[3]).scale(h),
            (w[0] + w[1] - w[2] - w[3]).scale(h),
            (w[0] - w[1] + w[2] - w[3]).scale(h),
            (w[0] - w[1] - w[2] + w[3]).scale(h),
        ]
    };
    let (tu, tv) = (tilde(u), tilde(v));
    let product = |cname: &str, us: &[ArgExpr; 4], vs: &[ArgExpr; 4]| {
        Term::new(
            1,
            (0..4)
                .map(|i| Factor::new(ch(cname), us[i], vs[i]))
                .collect(),
        )
    };
    IdentitySpec::with_inferred_symbols(
        IdentityId::Riemann,
        SUMMED_CHARS.iter().map(|c| product(c, &u, &v)).collect(),
        SUMMED_CHARS.iter().map(|c| product(c, &tu, &tv)).collect(),
        vec![],
    )
}

fn master() -> IdentitySpec {
    let lhs = SUMMED_CHARS
        .iter()
        .map(|c| {
            term(
                1,
                &[
                    (c, at_ab()),
                    (c, (alpha_p(), beta_p())),
                    (c, at_sum_ab()),
                    (c, (y() - yp() + alpha_p(), z() - zp() + beta_p())),
                ],
            )
        })
        .collect();
    let rhs = SUMMED_CHARS
        .iter()
        .map(|c| {
            term(
                1,
                &[
                    (c, (y() + alpha() + alpha_p(), z() + beta() + beta_p())),
                    (c, at_yz()),
                    (c, (yp() + alpha() - alpha_p(), zp() + beta() - beta_p())),
                    (c, at_ypzp()),
                ],
            )
        })
        .collect();
    IdentitySpec::with_inferred_symbols(IdentityId::Master, lhs, rhs, vec![])
}

/// RHS rows of the three fundamental relations: sign and the four
/// characteristics of `theta[c0](y+a) theta[c1](y) theta[c2](y'+a)
/// theta[c3](y')`.
const KOSSAK_LHS: [[&str; 4]; 3] = [
    ["0000", "0011", "0000", "0011"],
    ["0010", "0001", "0000", "0011"],
    ["0001", "0010", "0000", "0011"],
];

const KOSSAK_RHS: [[(i32, [&str; 4]); 4]; 3] = [
    [
        (1, ["0000", "0011", "0000", "0011"]),
        (-1, ["1000", "1011", "1000", "1011"]),
        (-1, ["0110", "0101", "0110", "0101"]),
        (1, ["1110", "1101", "1110", "1101"]),
    ],
    [
        (1, ["0010", "0001", "0000", "0011"]),
        (-1, ["0110", "0101", "0100", "0111"]),
        (1, ["0000", "0011", "0010", "0001"]),
        (-1, ["0100", "0111", "0110", "0101"]),
    ],
    [
        (1, ["0001", "0010", "0000", "0011"]),
        (-1, ["1001", "1010", "1000", "1011"]),
        (1, ["0000", "0011", "0001", "0010"]),
        (-1, ["1000", "1011", "1001", "1010"]),
    ],
];

fn kossak(index: u8) -> IdentitySpec {
    let i = (index - 1) as usize;
    let [l0, l1, l2, l3] = KOSSAK_LHS[i];
    let lhs = vec![term(
        1,
        &[
            (l0, at_ab()),
            (l1, origin()),
            (l2, at_sum_ab()),
            (l3, at_diff()),
        ],
    )];
    let rhs = KOSSAK_RHS[i]
        .iter()
        .map(|(sign, chars)| {
            paired_term(*sign, *chars, at_y_ab(), at_yz(), at_yp_ab(), at_ypzp())
        })
        .collect();
    let preconditions = if index == 1 { vec![] } else { vec![ZERO_LOCUS()] };
    IdentitySpec::with_inferred_symbols(IdentityId::Kossak(index), lhs, rhs, preconditions)
}

/// One row per theta-level addition formula: the three varying LHS
/// characteristics and the RHS terms. RHS terms read
/// `theta[c0](y,z) theta[c1](y,z) theta[c2](y',z') theta[c3](y',z')`.
struct AdditionRow {
    /// Characteristic evaluated at the origin alongside `lhs_weight`.
    lhs_value: &'static str,
    /// Second origin factor (the normalizing characteristic).
    lhs_weight: &'static str,
    /// Characteristic at the summed argument (y+y', z+z').
    lhs_sum: &'static str,
    rhs: [(i32, [&'static str; 4]); 4],
}

const ADDITION_ROWS: [AdditionRow; 16] = [
    // 1
    AdditionRow {
        lhs_value: "0011",
        lhs_weight: "0011",
        lhs_sum: "0011",
        rhs: [
            (1, ["0011", "0011", "0011", "0011"]),
            (-1, ["1011", "1011", "1011", "1011"]),
            (-1, ["0101", "0101", "0101", "0101"]),
            (1, ["1101", "1101", "1101", "1101"]),
        ],
    },
    // 2
    AdditionRow {
        lhs_value: "0001",
        lhs_weight: "0011",
        lhs_sum: "0001",
        rhs: [
            (1, ["0011", "0001", "0011", "0001"]),
            (-1, ["1011", "1001", "1011", "1001"]),
            (-1, ["0101", "0111", "0101", "0111"]),
            (1, ["1101", "1111", "1101", "1111"]),
        ],
    },
    // 3
    AdditionRow {
        lhs_value: "0010",
        lhs_weight: "0011",
        lhs_sum: "0010",
        rhs: [
            (1, ["0011", "0010", "0011", "0010"]),
            (-1, ["1011", "1010", "1011", "1010"]),
            (-1, ["0101", "0100", "0101", "0100"]),
            (1, ["1101", "1100", "1101", "1100"]),
        ],
    },
    // 4
    AdditionRow {
        lhs_value: "1001",
        lhs_weight: "0011",
        lhs_sum: "1001",
        rhs: [
            (1, ["0011", "1001", "0011", "1001"]),
            (-1, ["1011", "0001", "1011", "0001"]),
            (1, ["0101", "1111", "0101", "1111"]),
            (-1, ["1101", "0111", "1101", "0111"]),
        ],
    },
    // 5
    AdditionRow {
        lhs_value: "0110",
        lhs_weight: "0011",
        lhs_sum: "0110",
        rhs: [
            (1, ["0011", "0110", "0011", "0110"]),
            (-1, ["1011", "1110", "1011", "1110"]),
            (-1, ["0101", "0000", "0101", "0000"]),
            (1, ["1101", "1000", "1101", "1000"]),
        ],
    },
    // 6
    AdditionRow {
        lhs_value: "0100",
        lhs_weight: "0011",
        lhs_sum: "0100",
        rhs: [
            (1, ["0011", "0100", "0011", "0100"]),
            (-1, ["1011", "1100", "1011", "1100"]),
            (-1, ["0101", "0010", "0101", "0010"]),
            (1, ["1101", "1010", "1101", "1010"]),
        ],
    },
    // 7
    AdditionRow {
        lhs_value: "1000",
        lhs_weight: "0011",
        lhs_sum: "1000",
        rhs: [
            (1, ["0011", "1000", "0011", "1000"]),
            (-1, ["1011", "0000", "1011", "0000"]),
            (1, ["0101", "1110", "0101", "1110"]),
            (-1, ["1101", "0110", "1101", "0110"]),
        ],
    },
    // 8
    AdditionRow {
        lhs_value: "1100",
        lhs_weight: "0011",
        lhs_sum: "1100",
        rhs: [
            (1, ["0011", "1100", "0011", "1100"]),
            (-1, ["1011", "0100", "1011", "0100"]),
            (1, ["0101", "1010", "0101", "1010"]),
            (-1, ["1101", "0010", "1101", "0010"]),
        ],
    },
    // 9
    AdditionRow {
        lhs_value: "1111",
        lhs_weight: "0011",
        lhs_sum: "1111",
        rhs: [
            (1, ["0011", "1111", "0011", "1111"]),
            (-1, ["1011", "0111", "1011", "0111"]),
            (1, ["0101", "1001", "0101", "1001"]),
            (-1, ["1101", "0001", "1101", "0001"]),
        ],
    },
    // 10
    AdditionRow {
        lhs_value: "0000",
        lhs_weight: "0011",
        lhs_sum: "0000",
        rhs: [
            (1, ["0011", "0000", "0011", "0000"]),
            (-1, ["1011", "1000", "1011", "1000"]),
            (-1, ["0101", "0110", "0101", "0110"]),
            (1, ["1101", "1110", "1101", "1110"]),
        ],
    },
    // 11
    AdditionRow {
        lhs_value: "1001",
        lhs_weight: "0001",
        lhs_sum: "1011",
        rhs: [
            (1, ["0011", "1011", "0001", "1001"]),
            (-1, ["0111", "1111", "0101", "1101"]),
            (1, ["0001", "1001", "0011", "1011"]),
            (-1, ["0101", "1101", "0111", "1111"]),
        ],
    },
    // 12
    AdditionRow {
        lhs_value: "1000",
        lhs_weight: "0001",
        lhs_sum: "1010",
        rhs: [
            (1, ["0011", "1010", "0001", "1000"]),
            (-1, ["0111", "1110", "0101", "1100"]),
            (1, ["0001", "1000", "0011", "1010"]),
            (-1, ["0101", "1100", "0111", "1110"]),
        ],
    },
    // 13
    AdditionRow {
        lhs_value: "1100",
        lhs_weight: "0001",
        lhs_sum: "1110",
        rhs: [
            (1, ["0011", "1110", "0001", "1100"]),
            (-1, ["0111", "1010", "0101", "1000"]),
            (1, ["0001", "1100", "0011", "1110"]),
            (-1, ["0101", "1000", "0111", "1010"]),
        ],
    },
    // 14
    AdditionRow {
        lhs_value: "0110",
        lhs_weight: "0010",
        lhs_sum: "0111",
        rhs: [
            (1, ["0011", "0111", "0010", "0110"]),
            (-1, ["1011", "1111", "1010", "1110"]),
            (1, ["0010", "0110", "0011", "0111"]),
            (-1, ["1010", "1110", "1011", "1111"]),
        ],
    },
    // 15
    AdditionRow {
        lhs_value: "0100",
        lhs_weight: "0010",
        lhs_sum: "0101",
        rhs: [
            (1, ["0011", "0101", "0010", "0100"]),
            (-1, ["1011", "1101", "1010", "1100"]),
            (1, ["0010", "0100", "0011", "0101"]),
            (-1, ["1010", "1100", "1011", "1101"]),
        ],
    },
    // 16
    AdditionRow {
        lhs_value: "1100",
        lhs_weight: "0010",
        lhs_sum: "1101",
        rhs: [
            (1, ["0011", "1101", "0010", "1100"]),
            (-1, ["1011", "0101", "1010", "0100"]),
            (1, ["0010", "1100", "0011", "1101"]),
            (-1, ["1010", "0100", "1011", "0101"]),
        ],
    },
];

fn theta_addition(index: u8) -> IdentitySpec {
    let row = &ADDITION_ROWS[(index - 1) as usize];
    let lhs = vec![term(
        1,
        &[
            (row.lhs_value, origin()),
            (row.lhs_weight, origin()),
            (row.lhs_sum, at_sum()),
            ("0011", at_diff()),
        ],
    )];
    let rhs = row
        .rhs
        .iter()
        .map(|(sign, chars)| {
            paired_term(*sign, *chars, at_yz(), at_yz(), at_ypzp(), at_ypzp())
        })
        .collect();
    IdentitySpec::with_inferred_symbols(IdentityId::ThetaAdd(index), lhs, rhs, vec![])
}

/// The (alpha, beta) substitutions producing addition formulas 1..=16 from
/// the fundamental relations, as exact expressions in the moduli.
pub fn addition_alpha_beta(index: u8) -> (ArgExpr, ArgExpr) {
    assert!((1..=16).contains(&index), "formula index out of range");
    let h = rational(1, 2);
    let t1 = ArgExpr::tau1(h);
    let t2 = ArgExpr::tau2(h);
    let t12 = ArgExpr::tau12(h);
    match index {
        1 => (half(), half()),
        2 => (ArgExpr::ZERO, half()),
        3 => (half(), ArgExpr::ZERO),
        4 => (t1, t12 + half()),
        5 => (t12 + half(), t2),
        6 => (t12, t2),
        7 => (t1, t12),
        8 => (t1 + t12, t2 + t12),
        9 => (t1 + t12 + half(), t2 + t12 + half()),
        10 => (ArgExpr::ZERO, ArgExpr::ZERO),
        11 => (t1 + half(), t12 + half()),
        12 => (t1 + half(), t12),
        13 => (t1 + t12 + half(), t2 + t12),
        14 => (t12 + half(), t2 + half()),
        15 => (t12, t2 + half()),
        16 => (t1 + t12, t2 + t12 + half()),
        _ => unreachable!(),
    }
}

/// Variant of the first addition formula with the final factor of the last
/// term unsquared. It is not an identity: generic inputs give residuals of
/// order 1e-3 or larger. Kept so a regression test can pin the squared
/// transcription.
pub fn addition_formula_1_unsquared_variant() -> IdentitySpec {
    let mut spec = theta_addition(1);
    let last = spec.rhs.last_mut().expect("four RHS terms");
    last.factors.truncate(3);
    spec
}

fn appendix(step: u8) -> IdentitySpec {
    // Shared four-factor argument patterns.
    let ab_halves =
        |c: &str| term(1, &[(c, at_ab()), (c, at_halves()), (c, at_sum_ab()), (c, at_diff_halves())]);
    let ab_zero_half = |c: &str| {
        term(1, &[(c, at_ab()), (c, at_zero_half()), (c, at_sum_ab()), (c, at_diff_zhalf())])
    };
    let shifted = |sign: i32, c: &str| {
        paired_term(sign, [c; 4], at_y_ab_h(), at_yz(), at_yp_ab_h(), at_ypzp())
    };
    let shifted_z = |sign: i32, c: &str| {
        paired_term(sign, [c; 4], at_y_ab_zh(), at_yz(), at_yp_ab_zh(), at_ypzp())
    };
    let negate = |mut t: Term| {
        t.coeff = -t.coeff;
        t
    };

    let (lhs, rhs, preconditions) = match step {
        1 => (
            vec![ab_halves("0000"), ab_halves("1100")],
            vec![shifted(1, "0000"), shifted(-1, "0100"), shifted(-1, "1000"), shifted(1, "1100")],
            vec![],
        ),
        2 => (
            vec![ab_halves("0000"), negate(ab_halves("1100"))],
            vec![shifted(1, "0001"), shifted(-1, "0101"), shifted(-1, "1001"), shifted(1, "1101")],
            vec![],
        ),
        3 => (
            vec![{
                let mut t = ab_halves("0000");
                t.coeff = 2;
                t
            }],
            vec![
                shifted(1, "0000"),
                shifted(-1, "0100"),
                shifted(-1, "1000"),
                shifted(1, "1100"),
                shifted(1, "0001"),
                shifted(-1, "0101"),
                shifted(-1, "1001"),
                shifted(1, "1101"),
            ],
            vec![],
        ),
        4 => (
            vec![ab_zero_half("0000"), ab_zero_half("1000")],
            vec![shifted_z(1, "0000"), shifted_z(-1, "0100"), shifted_z(1, "1000"), shifted_z(-1, "1100")],
            vec![],
        ),
        5 => (
            vec![ab_zero_half("0000"), ab_zero_half("1000")],
            vec![shifted_z(1, "0001"), shifted_z(-1, "0101"), shifted_z(1, "1001"), shifted_z(-1, "1101")],
            vec![],
        ),
        6 => (
            vec![shifted(1, "0000"), shifted(-1, "0100"), shifted(1, "1000"), shifted(-1, "1100")],
            vec![shifted(1, "0001"), shifted(-1, "0101"), shifted(1, "1001"), shifted(-1, "1101")],
            vec![],
        ),
        7 => (
            vec![term(
                1,
                &[("0000", at_ab()), ("0011", origin()), ("0000", at_sum_ab()), ("0011", at_diff())],
            )],
            vec![
                paired_term(1, ["0011", "0000", "0011", "0000"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
                paired_term(-1, ["0111", "0100", "0111", "0100"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
                paired_term(-1, ["1010", "1001", "1010", "1001"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
                paired_term(1, ["1110", "1101", "1110", "1101"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
            ],
            vec![],
        ),
        8 => (
            vec![term(
                1,
                &[("0000", at_ab()), ("0011", origin()), ("0000", at_sum_ab()), ("0011", at_diff())],
            )],
            vec![
                paired_term(1, ["0000", "0011", "0000", "0011"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
                paired_term(-1, ["0100", "0111", "0100", "0111"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
                paired_term(-1, ["1001", "1010", "1001", "1010"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
                paired_term(1, ["1101", "1110", "1101", "1110"], at_y_ab(), at_yz(), at_yp_ab(), at_ypzp()),
            ],
            vec![],
        ),
        9 => (
            vec![ab_halves("1100")],
            vec![shifted(1, "0000"), shifted(-1, "0100"), shifted(-1, "1000"), shifted(1, "1100")],
            vec![ZERO_LOCUS()],
        ),
        10 => (
            vec![shifted(1, "0000"), shifted(-1, "0100"), shifted(-1, "1000"), shifted(1, "1100")],
            vec![shifted(-1, "0010"), shifted(1, "1010"), shifted(1, "0110"), shifted(-1, "1110")],
            vec![ZERO_LOCUS()],
        ),
        11 => (
            vec![ab_zero_half("0000"), negate(ab_zero_half("1000"))],
            vec![shifted_z(1, "0010"), shifted_z(-1, "0110"), shifted_z(1, "1010"), shifted_z(-1, "1110")],
            vec![],
        ),
        12 => (
            vec![term(
                2,
                &[
                    ("0000", at_ab_h()),
                    ("0000", at_zero_half()),
                    ("0000", at_sum_ab_h()),
                    ("0000", at_diff_zhalf()),
                ],
            )],
            vec![
                shifted(1, "0000"),
                shifted(-1, "0100"),
                shifted(1, "1000"),
                shifted(-1, "1100"),
                shifted(1, "0010"),
                shifted(-1, "0110"),
                shifted(1, "1010"),
                shifted(-1, "1110"),
            ],
            vec![],
        ),
        13 => (
            vec![term(
                1,
                &[
                    ("0000", at_ab_h()),
                    ("0000", at_zero_half()),
                    ("0000", at_sum_ab_h()),
                    ("0000", at_diff_zhalf()),
                ],
            )],
            vec![shifted(1, "0000"), shifted(-1, "0100"), shifted(1, "0010"), shifted(-1, "0110")],
            vec![ZERO_LOCUS()],
        ),
        14 => {
            let k = kossak(2);
            (k.lhs, k.rhs, vec![ZERO_LOCUS()])
        }
        15 => {
            let k = kossak(3);
            (k.lhs, k.rhs, vec![ZERO_LOCUS()])
        }
        _ => unreachable!("appendix step out of range"),
    };
    IdentitySpec::with_inferred_symbols(IdentityId::Appendix(step), lhs, rhs, preconditions)
}

/// Construct the built-in spec for an id.
pub fn builtin_identity(id: IdentityId) -> IdentitySpec {
    match id {
        IdentityId::Riemann => riemann(),
        IdentityId::Master => master(),
        IdentityId::Kossak(i) => kossak(i),
        IdentityId::ThetaAdd(i) => theta_addition(i),
        IdentityId::Appendix(i) => appendix(i),
    }
}

/// Look an identity up by its catalog name.
pub fn builtin_identity_by_name(name: &str) -> Result<IdentitySpec> {
    let id: IdentityId = name.parse().map_err(|_| Error::UnknownIdentity(name.to_string()))?;
    Ok(builtin_identity(id))
}

/// Human-readable listing of the whole catalog: id, source equation, terms
/// with signs, characteristics and arguments.
pub fn catalog_listing() -> String {
    use std::fmt::Write;
    let mut out = String::new();
    for id in IdentityId::all() {
        let spec = builtin_identity(id);
        let _ = writeln!(out, "{} [eq {}]", id, id.paper_eq());
        for pre in &spec.preconditions {
            let _ = writeln!(
                out,
                "  requires theta[{}]({}, {}) = 0",
                pre.characteristic, pre.u, pre.v
            );
        }
        for (label, terms) in [("lhs", &spec.lhs), ("rhs", &spec.rhs)] {
            let _ = writeln!(out, "  {label}:");
            for t in terms {
                let sign = match t.coeff {
                    1 => "+  ".to_string(),
                    -1 => "-  ".to_string(),
                    c if c > 0 => format!("+{c} "),
                    c => format!("-{} ", -c),
                };
                let factors: Vec<String> = t
                    .factors
                    .iter()
                    .map(|f| format!("theta[{}]({}, {})", f.characteristic, f.u, f.v))
                    .collect();
                let _ = writeln!(out, "    {sign}{}", factors.join(" "));
            }
        }
        let _ = writeln!(out);
    }
    out
}
