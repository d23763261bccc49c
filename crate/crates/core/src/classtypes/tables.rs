//! Transcribed reference data for the semisimple types of Sp_4 and Sp_6:
//! counts N_τ(q), centralizer determinants, the rational functions R_τ and
//! per-α factors of H_τ used in the integrality arguments, and the values
//! at x = −1 that those arguments tabulate.
//!
//! Polynomials in x are written as ascending coefficient lists. A factor
//! (s, i, j) of a determinant means 1 + s·t^i·q^j; of an H_τ factor it means
//! 1 + s·α^i·x^j.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Parity, SpType};
use crate::exactalg::{rat, IntPoly, RationalFunction, SymPoly, Var};

type Factors = &'static [&'static [i64]];
type Binomials = &'static [(i64, u32, u32)];

#[derive(Clone, Debug)]
pub struct TableRow {
    /// 1..=4: Sp_4 odd q, Sp_4 even q, Sp_6 odd q, Sp_6 even q.
    pub table: u8,
    pub label: &'static str,
    pub ty: SpType,
    /// N_τ(x) with x = q.
    pub count: RationalFunction,
    pub count_text: &'static str,
    /// det(1 − t·Fr | M) with x = t and α_1 = q.
    pub det: SymPoly,
    pub det_text: &'static str,
    pub r_tau: RationalFunction,
    /// Factor of H_τ for one α, with x = x and α_1 = α.
    pub h_factor: SymPoly,
}

/// Values at x = −1 from the (1 + x)^k part of the argument, where
/// S_τ = (1 + x)^k R_τ and H^{(i)}_τ(−1) is expressed through A·B, A·C, A·D.
#[derive(Clone, Debug)]
pub struct WitnessRow {
    pub label: &'static str,
    pub s: BigRational,
    pub s_prime: Option<BigRational>,
    pub h_prime_ab: i64,
    /// Coefficients of AB, AC, AD in H''_τ(−1).
    pub h_second: Option<(i64, i64, i64)>,
}

#[derive(Clone, Debug)]
pub struct WitnessTable {
    pub n: u32,
    pub parity: Parity,
    /// Power of 1 + x cleared in the derivative argument.
    pub k: u32,
    pub rows: Vec<WitnessRow>,
    /// Rows whose S_τ vanishes to second order, with S''_τ(−1).
    pub second_order: Vec<(&'static str, BigRational)>,
}

fn xpoly(factors: Factors) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| &acc * &IntPoly::from_i64(f))
}

fn ratio(num_scalar: i64, num: Factors, den_scalar: i64, den: Factors) -> RationalFunction {
    RationalFunction::from_x_ratio(xpoly(num).scale(&num_scalar.into()), xpoly(den).scale(&den_scalar.into()))
        .expect("nonzero denominator")
}

/// Π (1 + s·u^i·v^j) with u = α_1, v = x when `alpha_first`, else u = x, v = α_1.
fn binomial_product(factors: Binomials, alpha_first: bool) -> SymPoly {
    let (u, v) = if alpha_first {
        (SymPoly::var(1, Var::A(0)), SymPoly::var(1, Var::X))
    } else {
        (SymPoly::var(1, Var::X), SymPoly::var(1, Var::A(0)))
    };
    factors.iter().fold(SymPoly::one(1), |acc, &(s, i, j)| {
        let term = (&u.pow(i) * &v.pow(j)).scale(&BigInt::from(s));
        &acc * &(&SymPoly::one(1) + &term)
    })
}

const X1: &[i64] = &[1, 1];
const XM1: &[i64] = &[-1, 1];
const XM2: &[i64] = &[-2, 1];
const XM3: &[i64] = &[-3, 1];
const XM4: &[i64] = &[-4, 1];
const XM5: &[i64] = &[-5, 1];
const X: &[i64] = &[0, 1];
const TWO: &[i64] = &[2];
const PHI3: &[i64] = &[1, 1, 1];
const PHI4: &[i64] = &[1, 0, 1];
const PHI5: &[i64] = &[1, 1, 1, 1, 1];
const PHI6: &[i64] = &[1, -1, 1];

struct Raw {
    table: u8,
    label: &'static str,
    ty: (u32, u32, &'static [(u32, u32)]),
    count: (Factors, i64),
    count_text: &'static str,
    det: Binomials,
    det_text: &'static str,
    r: (i64, Factors, i64, Factors),
    h: Binomials,
}


fn raw_rows() -> Vec<Raw> {
    vec![
        // Sp_4, q odd.
        Raw {
            table: 1,
            label: "tau1",
            ty: (2, 0, &[]),
            count: (&[TWO], 1),
            count_text: "2",
            det: &[(-1, 1, 1), (-1, 1, 3)],
            det_text: "(1-tq)(1-tq^3)",
            r: (2, &[PHI3], 1, &[X1, X1, PHI4]),
            h: &[(-1, 1, 1), (-1, 1, 3)],
        },
        Raw {
            table: 1,
            label: "tau2",
            ty: (1, 1, &[]),
            count: (&[], 1),
            count_text: "1",
            det: &[(-1, 1, 1), (-1, 1, 1)],
            det_text: "(1-tq)^2",
            r: (1, &[], 1, &[X1, X1]),
            h: &[(-1, 1, 1), (-1, 1, 1)],
        },
        Raw {
            table: 1,
            label: "tau3",
            ty: (1, 0, &[(1, 1)]),
            count: (&[XM1], 1),
            count_text: "q-1",
            det: &[(-1, 1, 1), (1, 1, 0)],
            det_text: "(1-tq)(1+t)",
            r: (2, &[XM1], 1, &[X1, X1]),
            h: &[(1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 1,
            label: "tau4",
            ty: (0, 0, &[(1, 2)]),
            count: (&[XM1], 2),
            count_text: "(q-1)/2",
            det: &[(1, 1, 0), (-1, 1, 1)],
            det_text: "(1+t)(1-tq)",
            r: (1, &[XM1], 1, &[X1, X1]),
            h: &[(1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 1,
            label: "tau5",
            ty: (0, 0, &[(1, 1), (1, 1)]),
            count: (&[XM1, XM3], 8),
            count_text: "(q-1)(q-3)/8",
            det: &[(1, 1, 0), (1, 1, 0)],
            det_text: "(1+t)^2",
            r: (1, &[XM1, XM3], 2, &[X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0)],
        },
        Raw {
            table: 1,
            label: "tau6",
            ty: (0, 0, &[(2, 1)]),
            count: (&[XM1, X1], 4),
            count_text: "(q^2-1)/4",
            det: &[(1, 2, 0)],
            det_text: "1+t^2",
            r: (1, &[XM1, X1], 2, &[PHI4]),
            h: &[(1, 2, 0)],
        },
        // Sp_4, q even.
        Raw {
            table: 2,
            label: "tau'1",
            ty: (2, 0, &[]),
            count: (&[], 1),
            count_text: "1",
            det: &[(-1, 1, 1), (-1, 1, 3)],
            det_text: "(1-tq)(1-tq^3)",
            r: (1, &[PHI3], 1, &[X1, X1, PHI4]),
            h: &[(-1, 1, 1), (-1, 1, 3)],
        },
        Raw {
            table: 2,
            label: "tau'3",
            ty: (1, 0, &[(1, 1)]),
            count: (&[X], 2),
            count_text: "q/2",
            det: &[(-1, 1, 1), (1, 1, 0)],
            det_text: "(1-tq)(1+t)",
            r: (1, &[X], 1, &[X1, X1]),
            h: &[(1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 2,
            label: "tau'4",
            ty: (0, 0, &[(1, 2)]),
            count: (&[X], 2),
            count_text: "q/2",
            det: &[(1, 1, 0), (-1, 1, 1)],
            det_text: "(1+t)(1-tq)",
            r: (1, &[X], 1, &[X1, X1]),
            h: &[(1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 2,
            label: "tau'5",
            ty: (0, 0, &[(1, 1), (1, 1)]),
            count: (&[X, XM2], 8),
            count_text: "q(q-2)/8",
            det: &[(1, 1, 0), (1, 1, 0)],
            det_text: "(1+t)^2",
            r: (1, &[X, XM2], 2, &[X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0)],
        },
        Raw {
            table: 2,
            label: "tau'6",
            ty: (0, 0, &[(2, 1)]),
            count: (&[X, X], 4),
            count_text: "q^2/4",
            det: &[(1, 2, 0)],
            det_text: "1+t^2",
            r: (1, &[X, X], 2, &[PHI4]),
            h: &[(1, 2, 0)],
        },
        // Sp_6, q odd.
        Raw {
            table: 3,
            label: "tau1",
            ty: (3, 0, &[]),
            count: (&[TWO], 1),
            count_text: "2",
            det: &[(-1, 1, 1), (-1, 1, 3), (-1, 1, 5)],
            det_text: "(1-tq)(1-tq^3)(1-tq^5)",
            r: (2, &[PHI5], 1, &[X1, X1, X1, PHI4, PHI6]),
            h: &[(-1, 1, 1), (-1, 1, 3), (-1, 1, 5)],
        },
        Raw {
            table: 3,
            label: "tau2",
            ty: (2, 1, &[]),
            count: (&[TWO], 1),
            count_text: "2",
            det: &[(-1, 1, 1), (-1, 1, 1), (-1, 1, 3)],
            det_text: "(1-tq)^2(1-tq^3)",
            r: (2, &[PHI3], 1, &[X1, X1, X1, PHI4]),
            h: &[(-1, 1, 1), (-1, 1, 1), (-1, 1, 3)],
        },
        Raw {
            table: 3,
            label: "tau3",
            ty: (2, 0, &[(1, 1)]),
            count: (&[XM1], 1),
            count_text: "q-1",
            det: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 3)],
            det_text: "(1+t)(1-tq)(1-tq^3)",
            r: (2, &[XM1, PHI3], 1, &[X1, X1, X1, PHI4]),
            h: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 3)],
        },
        Raw {
            table: 3,
            label: "tau4",
            ty: (1, 1, &[(1, 1)]),
            count: (&[XM1], 2),
            count_text: "(q-1)/2",
            det: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 1)],
            det_text: "(1+t)(1-tq)^2",
            r: (1, &[XM1], 1, &[X1, X1, X1]),
            h: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 1)],
        },
        Raw {
            table: 3,
            label: "tau5",
            ty: (1, 0, &[(1, 2)]),
            count: (&[XM1], 1),
            count_text: "q-1",
            det: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 1)],
            det_text: "(1+t)(1-tq)^2",
            r: (2, &[XM1], 1, &[X1, X1, X1]),
            h: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 1)],
        },
        Raw {
            table: 3,
            label: "tau6",
            ty: (1, 0, &[(1, 1), (1, 1)]),
            count: (&[XM1, XM3], 4),
            count_text: "(q-1)(q-3)/4",
            det: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
            det_text: "(1+t)^2(1-tq)",
            r: (1, &[XM1, XM3], 1, &[X1, X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 3,
            label: "tau7",
            ty: (1, 0, &[(2, 1)]),
            count: (&[XM1, X1], 2),
            count_text: "(q^2-1)/2",
            det: &[(1, 2, 0), (-1, 1, 1)],
            det_text: "(1+t^2)(1-tq)",
            r: (1, &[XM1], 1, &[PHI4]),
            h: &[(1, 2, 0), (-1, 1, 1)],
        },
        Raw {
            table: 3,
            label: "tau8",
            ty: (0, 0, &[(1, 3)]),
            count: (&[XM1], 2),
            count_text: "(q-1)/2",
            det: &[(1, 1, 0), (-1, 1, 1), (1, 1, 2)],
            det_text: "(1+t)(1-tq)(1+tq^2)",
            r: (1, &[XM1, PHI4], 1, &[X1, X1, X1, PHI6]),
            h: &[(1, 1, 0), (-1, 1, 1), (1, 1, 2)],
        },
        Raw {
            table: 3,
            label: "tau9",
            ty: (0, 0, &[(1, 2), (1, 1)]),
            count: (&[XM1, XM3], 4),
            count_text: "(q-1)(q-3)/4",
            det: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
            det_text: "(1+t)^2(1-tq)",
            r: (1, &[XM1, XM3], 1, &[X1, X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 3,
            label: "tau10",
            ty: (0, 0, &[(1, 1), (1, 1), (1, 1)]),
            count: (&[XM1, XM3, XM5], 48),
            count_text: "(q-1)(q-3)(q-5)/48",
            det: &[(1, 1, 0), (1, 1, 0), (1, 1, 0)],
            det_text: "(1+t)^3",
            r: (1, &[XM1, XM3, XM5], 6, &[X1, X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0), (1, 1, 0)],
        },
        Raw {
            table: 3,
            label: "tau11",
            ty: (0, 0, &[(2, 1), (1, 1)]),
            count: (&[XM1, XM1, X1], 8),
            count_text: "(q-1)(q^2-1)/8",
            det: &[(1, 1, 0), (1, 2, 0)],
            det_text: "(1+t)(1+t^2)",
            r: (1, &[XM1, XM1], 2, &[PHI4]),
            h: &[(1, 1, 0), (1, 2, 0)],
        },
        Raw {
            table: 3,
            label: "tau12",
            ty: (0, 0, &[(3, 1)]),
            count: (&[X, XM1, X1], 6),
            count_text: "(q^3-q)/6",
            det: &[(1, 3, 0)],
            det_text: "1+t^3",
            r: (1, &[X, XM1], 3, &[PHI6]),
            h: &[(1, 3, 0)],
        },
        // Sp_6, q even.
        Raw {
            table: 4,
            label: "tau'1",
            ty: (3, 0, &[]),
            count: (&[], 1),
            count_text: "1",
            det: &[(-1, 1, 1), (-1, 1, 3), (-1, 1, 5)],
            det_text: "(1-tq)(1-tq^3)(1-tq^5)",
            r: (1, &[PHI5], 1, &[X1, X1, X1, PHI4, PHI6]),
            h: &[(-1, 1, 1), (-1, 1, 3), (-1, 1, 5)],
        },
        Raw {
            table: 4,
            label: "tau'3",
            ty: (2, 0, &[(1, 1)]),
            count: (&[X], 2),
            count_text: "q/2",
            det: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 3)],
            det_text: "(1+t)(1-tq)(1-tq^3)",
            r: (1, &[X, PHI3], 1, &[X1, X1, X1, PHI4]),
            h: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 3)],
        },
        Raw {
            table: 4,
            label: "tau'5",
            ty: (1, 0, &[(1, 2)]),
            count: (&[X], 2),
            count_text: "q/2",
            det: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 1)],
            det_text: "(1+t)(1-tq)^2",
            r: (1, &[X], 1, &[X1, X1, X1]),
            h: &[(1, 1, 0), (-1, 1, 1), (-1, 1, 1)],
        },
        Raw {
            table: 4,
            label: "tau'6",
            ty: (1, 0, &[(1, 1), (1, 1)]),
            count: (&[X, XM2], 8),
            count_text: "q(q-2)/8",
            det: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
            det_text: "(1+t)^2(1-tq)",
            r: (1, &[X, XM2], 2, &[X1, X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 4,
            label: "tau'7",
            ty: (1, 0, &[(2, 1)]),
            count: (&[X, X], 4),
            count_text: "q^2/4",
            det: &[(1, 2, 0), (-1, 1, 1)],
            det_text: "(1+t^2)(1-tq)",
            r: (1, &[X, X], 2, &[X1, PHI4]),
            h: &[(1, 2, 0), (-1, 1, 1)],
        },
        Raw {
            table: 4,
            label: "tau'8",
            ty: (0, 0, &[(1, 3)]),
            count: (&[X], 2),
            count_text: "q/2",
            det: &[(1, 1, 0), (-1, 1, 1), (1, 1, 2)],
            det_text: "(1+t)(1-tq)(1+tq^2)",
            r: (1, &[X, PHI4], 1, &[X1, X1, X1, PHI6]),
            h: &[(1, 1, 0), (-1, 1, 1), (1, 1, 2)],
        },
        Raw {
            table: 4,
            label: "tau'9",
            ty: (0, 0, &[(1, 2), (1, 1)]),
            count: (&[X, XM2], 4),
            count_text: "q(q-2)/4",
            det: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
            det_text: "(1+t)^2(1-tq)",
            r: (1, &[X, XM2], 1, &[X1, X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0), (-1, 1, 1)],
        },
        Raw {
            table: 4,
            label: "tau'10",
            ty: (0, 0, &[(1, 1), (1, 1), (1, 1)]),
            count: (&[X, XM2, XM4], 48),
            count_text: "q(q-2)(q-4)/48",
            det: &[(1, 1, 0), (1, 1, 0), (1, 1, 0)],
            det_text: "(1+t)^3",
            r: (1, &[X, XM2, XM4], 6, &[X1, X1, X1]),
            h: &[(1, 1, 0), (1, 1, 0), (1, 1, 0)],
        },
        Raw {
            table: 4,
            label: "tau'11",
            ty: (0, 0, &[(2, 1), (1, 1)]),
            count: (&[X, X, X], 8),
            count_text: "q^3/8",
            det: &[(1, 1, 0), (1, 2, 0)],
            det_text: "(1+t)(1+t^2)",
            r: (1, &[X, X, X], 2, &[X1, PHI4]),
            h: &[(1, 1, 0), (1, 2, 0)],
        },
        Raw {
            table: 4,
            label: "tau'12",
            ty: (0, 0, &[(3, 1)]),
            count: (&[X, XM1, X1], 6),
            count_text: "(q^3-q)/6",
            det: &[(1, 3, 0)],
            det_text: "1+t^3",
            r: (1, &[X, XM1], 3, &[PHI6]),
            h: &[(1, 3, 0)],
        },
    ]
}

/// Every transcribed row, Sp_4 and Sp_6 for both parities.
pub fn table_goldens() -> Vec<TableRow> {
    raw_rows()
        .into_iter()
        .map(|r| TableRow {
            table: r.table,
            label: r.label,
            ty: SpType::new(r.ty.0, r.ty.1, r.ty.2.to_vec(), vec![]).expect("transcribed type is valid"),
            count: ratio(1, r.count.0, r.count.1, &[]),
            count_text: r.count_text,
            det: binomial_product(r.det, false),
            det_text: r.det_text,
            r_tau: ratio(r.r.0, r.r.1, r.r.2, r.r.3),
            h_factor: binomial_product(r.h, true),
        })
        .collect()
}

pub fn table_number(n: u32, parity: Parity) -> Option<u8> {
    match (n, parity) {
        (2, Parity::Odd) => Some(1),
        (2, Parity::Even) => Some(2),
        (3, Parity::Odd) => Some(3),
        (3, Parity::Even) => Some(4),
        _ => None,
    }
}

/// Rows for Sp_2n with q of the given parity; empty outside n ∈ {2, 3}.
pub fn table(n: u32, parity: Parity) -> Vec<TableRow> {
    match table_number(n, parity) {
        Some(t) => table_goldens().into_iter().filter(|r| r.table == t).collect(),
        None => Vec::new(),
    }
}

/// The stated common denominator D with D·𝒫 ∈ ℤ[x, J].
pub fn clearing_denominator(n: u32) -> Option<IntPoly> {
    match n {
        2 => Some(xpoly(&[X1, X1, PHI4]).scale(&2.into())),
        3 => Some(xpoly(&[X1, X1, X1, PHI4, PHI6]).scale(&6.into())),
        _ => None,
    }
}

fn w(label: &'static str, s: (i64, i64), s_prime: Option<(i64, i64)>, h1: i64, h2: Option<(i64, i64, i64)>) -> WitnessRow {
    WitnessRow { label, s: rat(s.0, s.1), s_prime: s_prime.map(|(a, b)| rat(a, b)), h_prime_ab: h1, h_second: h2 }
}

pub fn witness_goldens(n: u32, parity: Parity) -> Option<WitnessTable> {
    let (k, rows, second_order) = match (n, parity) {
        (2, Parity::Odd) => (
            2,
            vec![
                w("tau1", (1, 1), None, -4, None),
                w("tau2", (1, 1), None, -2, None),
                w("tau3", (-4, 1), None, -1, None),
                w("tau4", (-2, 1), None, -1, None),
                w("tau5", (4, 1), None, 0, None),
            ],
            vec![],
        ),
        (2, Parity::Even) => (
            2,
            vec![
                w("tau'1", (1, 2), None, -4, None),
                w("tau'3", (-1, 1), None, -1, None),
                w("tau'4", (-1, 1), None, -1, None),
                w("tau'5", (3, 2), None, 0, None),
            ],
            vec![],
        ),
        (3, Parity::Odd) => (
            3,
            vec![
                w("tau1", (1, 3), Some((0, 1)), -9, Some((26, 46, 81))),
                w("tau2", (1, 1), Some((0, 1)), -5, Some((6, 14, 25))),
                w("tau3", (-2, 1), Some((1, 1)), -4, Some((6, 6, 16))),
                w("tau4", (-2, 1), Some((1, 1)), -2, Some((0, 2, 4))),
                w("tau5", (-4, 1), Some((2, 1)), -2, Some((0, 2, 4))),
                w("tau6", (8, 1), Some((-6, 1)), -1, Some((0, 0, 1))),
                w("tau8", (-4, 3), Some((2, 3)), -3, Some((2, 4, 9))),
                w("tau9", (8, 1), Some((-6, 1)), -1, Some((0, 0, 1))),
                w("tau10", (-8, 1), Some((22, 3)), 0, Some((0, 0, 0))),
            ],
            vec![],
        ),
        (3, Parity::Even) => (
            3,
            vec![
                w("tau'1", (1, 6), Some((0, 1)), -9, Some((26, 46, 81))),
                w("tau'3", (-1, 2), Some((1, 2)), -4, Some((6, 6, 16))),
                w("tau'5", (-1, 1), Some((1, 1)), -2, Some((0, 2, 4))),
                w("tau'6", (3, 2), Some((-2, 1)), -1, Some((0, 0, 1))),
                w("tau'8", (-2, 3), Some((2, 3)), -3, Some((2, 4, 9))),
                w("tau'9", (3, 1), Some((-4, 1)), -1, Some((0, 0, 1))),
                w("tau'10", (-5, 2), Some((23, 6)), 0, Some((0, 0, 0))),
            ],
            vec![("tau'7", rat(1, 2)), ("tau'11", rat(-1, 2))],
        ),
        _ => return None,
    };
    Some(WitnessTable { n, parity, k, rows, second_order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classtypes::{count_sp, count_sp_poly, enumerate_sp_types, motive_ratio};
    use crate::exactalg::rat_int;
    use crate::motive::frobenius_det;

    #[test]
    fn table_sizes() {
        let sizes: Vec<usize> = (1..=4u8)
            .map(|t| table_goldens().iter().filter(|r| r.table == t).count())
            .collect();
        assert_eq!(sizes, [6, 5, 12, 10]);
    }

    #[test]
    fn tables_list_exactly_the_enumerated_types() {
        for n in [2, 3] {
            for parity in [Parity::Odd, Parity::Even] {
                let mut from_table: Vec<SpType> = table(n, parity).into_iter().map(|r| r.ty).collect();
                from_table.sort();
                assert_eq!(from_table, enumerate_sp_types(n, parity), "n={n} {parity}");
            }
        }
    }

    #[test]
    fn determinants_match_centralizer_motives() {
        for row in table_goldens() {
            assert_eq!(frobenius_det(&row.ty.centralizer_motive()), row.det, "{} {}", row.table, row.label);
        }
    }

    #[test]
    fn h_factor_is_the_determinant_at_alpha() {
        for row in table_goldens() {
            let m = row.ty.centralizer_motive();
            let at_alpha = m.det_substituted(&SymPoly::var(1, Var::A(0)), &SymPoly::var(1, Var::X));
            assert_eq!(at_alpha, row.h_factor, "{} {}", row.table, row.label);
        }
    }

    #[test]
    fn counts_match_the_formula() {
        for row in table_goldens() {
            let parity = if row.table % 2 == 1 { Parity::Odd } else { Parity::Even };
            assert_eq!(count_sp_poly(&row.ty, parity).unwrap(), row.count, "{} {}", row.table, row.label);
            let qs: &[u64] = if parity == Parity::Odd { &[3, 5, 7, 9, 11] } else { &[2, 4, 8, 16] };
            for &q in qs {
                assert_eq!(count_sp(&row.ty, q).unwrap(), row.count.eval_x(&rat_int(q)).unwrap());
            }
        }
    }

    #[test]
    fn r_tau_is_count_times_ratio() {
        for row in table_goldens() {
            let derived = &row.count * &motive_ratio(&row.ty.centralizer_motive());
            assert_eq!(derived, row.r_tau, "{} {}", row.table, row.label);
        }
    }

    #[test]
    fn spot_values() {
        let t2 = table(2, Parity::Even);
        let tau5 = t2.iter().find(|r| r.label == "tau'5").unwrap();
        assert_eq!(tau5.count_text, "q(q-2)/8");
        let t3 = table(3, Parity::Odd);
        let tau12 = t3.iter().find(|r| r.label == "tau12").unwrap();
        assert_eq!(tau12.count.eval_x(&rat_int(3)).unwrap(), rat_int(4));
        let tau5 = table(2, Parity::Odd).into_iter().find(|r| r.label == "tau5").unwrap();
        assert_eq!(tau5.count.eval_x(&rat_int(3)).unwrap(), rat_int(0));
    }
}
