//! Certificates for Sp_4 and Sp_6: 𝒫 = Σ_τ R_τ·H_τ is cleared by a stated
//! denominator D = c·(1 + x)^k·Π Φ_m, and 𝒫 ∈ ℤ[x, J] follows from one
//! condition per factor of D. Prime factors are checked coefficientwise,
//! cyclotomic factors by exact remainder, (1 + x)^k by derivatives at −1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{is_symmetric, Checks, Regime, SymbolicCertificate, Variant};
use crate::classtypes::tables::{clearing_denominator, table, witness_goldens, TableRow};
use crate::classtypes::{count_sp_poly, enumerate_sp_types, motive_ratio, Parity};
use crate::error::{Error, Result};
use crate::exactalg::{cyclotomic, fmt_rational, poly_divrem, IntPoly, RationalFunction, SymPoly, Var};
use crate::motive::GroupSpec;

/// Cleared forms of the quantities at x = −1, with u = 1 + α:
/// A = Π u^k, A·B = Σ_i α_i u_i^{k−1} Π_{j≠i} u_j^k,
/// A·C = Σ_i α_i² u_i^{k−2} Π_{j≠i} u_j^k,
/// A·D = Σ_{i≠j} α_i α_j (u_i u_j)^{k−1} Π_{l≠i,j} u_l^k (ordered pairs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeWitness {
    pub k: u32,
    pub a: SymPoly,
    pub ab: SymPoly,
    pub ac: SymPoly,
    pub ad: SymPoly,
}

impl DerivativeWitness {
    pub fn new(r: usize, k: u32) -> Self {
        assert!(k >= 2, "the witness needs k ≥ 2");
        let alpha = |i| SymPoly::var(r, Var::A(i));
        let u = |i| &SymPoly::one(r) + &alpha(i);
        let rest = |skip: &[usize]| {
            (0..r).filter(|l| !skip.contains(l)).fold(SymPoly::one(r), |acc, l| &acc * &u(l).pow(k))
        };
        let a = rest(&[]);
        let mut ab = SymPoly::zero(r);
        let mut ac = SymPoly::zero(r);
        let mut ad = SymPoly::zero(r);
        for i in 0..r {
            let others = rest(&[i]);
            ab = &ab + &(&(&alpha(i) * &u(i).pow(k - 1)) * &others);
            ac = &ac + &(&(&alpha(i).pow(2) * &u(i).pow(k - 2)) * &others);
            for j in (0..r).filter(|&j| j != i) {
                let pair = &(&alpha(i) * &alpha(j)) * &(&u(i) * &u(j)).pow(k - 1);
                ad = &ad + &(&pair * &rest(&[i, j]));
            }
        }
        DerivativeWitness { k, a, ab, ac, ad }
    }
}

enum Factor {
    Prime(u32),
    OnePlusX(u32),
    Cyclotomic(u64),
}

struct Condition {
    label: &'static str,
    factor: Factor,
    /// Types whose terms survive reduction modulo the factor.
    survivors: &'static [&'static str],
}

fn conditions(n: u32, parity: Parity) -> Vec<Condition> {
    use Factor::*;
    let c = |label, factor, survivors| Condition { label, factor, survivors };
    match (n, parity) {
        (2, Parity::Odd) => vec![
            c("(a)", Prime(2), &["tau5", "tau6"]),
            c("(b)", OnePlusX(2), &[]),
            c("(c)", Cyclotomic(4), &["tau1", "tau6"]),
        ],
        (2, Parity::Even) => vec![
            c("(a)", Prime(2), &["tau'5", "tau'6"]),
            c("(b)", OnePlusX(2), &[]),
            c("(c)", Cyclotomic(4), &["tau'1", "tau'6"]),
        ],
        (3, Parity::Odd) => vec![
            c("(a)", Prime(2), &["tau10", "tau11"]),
            c("(b)", Prime(3), &["tau10", "tau12"]),
            c("(c)", OnePlusX(3), &[]),
            c("(d)", Cyclotomic(4), &["tau1", "tau2", "tau3", "tau7", "tau11"]),
            c("(e)", Cyclotomic(6), &["tau1", "tau8", "tau12"]),
        ],
        (3, Parity::Even) => vec![
            c("(a)", Prime(2), &["tau'6", "tau'7", "tau'10", "tau'11"]),
            c("(b)", Prime(3), &["tau'10", "tau'12"]),
            c("(c)", OnePlusX(3), &[]),
            c("(d)", Cyclotomic(4), &["tau'1", "tau'3", "tau'7", "tau'11"]),
            c("(e)", Cyclotomic(6), &["tau'1", "tau'8", "tau'12"]),
        ],
        _ => Vec::new(),
    }
}

/// Π over r symbolic α's of a one-α factor in (x, α_1).
fn over_alphas(factor: &SymPoly, r: usize) -> SymPoly {
    (0..r).fold(SymPoly::one(r), |acc, i| &acc * &factor.embed(r, &[i]))
}

fn one_plus_x_pow(k: u32) -> IntPoly {
    IntPoly::from_i64(&[1, 1]).pow(k)
}

fn at_minus_one(f: &RationalFunction) -> Result<BigRational> {
    f.eval_x(&BigRational::from_integer(BigInt::from(-1)))
}

fn sym_at_minus_one(p: &SymPoly) -> SymPoly {
    p.subst_x(&BigInt::from(-1))
}

fn is_zero_mod(p: &SymPoly, f: &IntPoly) -> Result<bool> {
    Ok(poly_divrem(p, &SymPoly::from_x_poly(p.nvars(), f.clone()), Var::X)?.1.is_zero())
}

fn names(rows: &[&TableRow]) -> String {
    rows.iter().map(|r| r.label).collect::<Vec<_>>().join(",")
}

/// Builds and checks the Sp_2n certificate (n ∈ {2, 3}) for q of the given
/// parity with r symbolic J-variables.
pub fn sp_certificate(n: u32, parity: Parity, r: usize) -> Result<SymbolicCertificate> {
    let rows = table(n, parity);
    let (Some(den), Some(witness)) = (clearing_denominator(n), witness_goldens(n, parity)) else {
        return Err(Error::invalid(format!("Sp certificates exist for Sp_4 and Sp_6, got Sp_{}", 2 * n)));
    };
    let mut checks = Checks::default();

    // Double entry: transcribed R_τ and H_τ against the motives.
    let x = SymPoly::var(1, Var::X);
    for row in &rows {
        let motive = row.ty.centralizer_motive();
        let derived = &count_sp_poly(&row.ty, parity)? * &motive_ratio(&motive);
        checks.push(format!("R_{} = N·ratio", row.label), derived == row.r_tau, row.r_tau.to_string());
        let h = motive.det_substituted(&SymPoly::var(1, Var::A(0)), &x);
        checks.push(format!("H_{} factor = det(1 - alpha Fr)", row.label), h == row.h_factor, row.h_factor.to_string());
    }

    let h: Vec<SymPoly> = rows.iter().map(|row| over_alphas(&row.h_factor, r)).collect();
    let cleared_r: Vec<Option<IntPoly>> = rows
        .iter()
        .map(|row| row.r_tau.mul_poly(&SymPoly::from_x_poly(0, den.clone())).to_polynomial().and_then(|p| p.as_x_poly()))
        .collect();
    let not_cleared: Vec<&str> =
        rows.iter().zip(&cleared_r).filter(|(_, c)| c.is_none()).map(|(row, _)| row.label).collect();
    checks.push("D clears every R_tau", not_cleared.is_empty(), format!("D = {den}; failing: {}", not_cleared.join(",")));
    let cleared_r: Vec<IntPoly> = cleared_r.into_iter().map(|c| c.unwrap_or_else(IntPoly::zero)).collect();
    let term = |i: usize| h[i].mul_x_poly(&cleared_r[i]);

    let script_p = rows.iter().zip(&h).fold(RationalFunction::from_poly(SymPoly::zero(r)), |acc, (row, hi)| {
        &acc + &row.r_tau.with_arity(r).mul_poly(hi)
    });
    let big_n = (0..rows.len()).fold(SymPoly::zero(r), |acc, i| &acc + &term(i));
    checks.push(
        "D*P in Z[x,J]",
        script_p.mul_poly(&SymPoly::from_x_poly(r, den.clone())).to_polynomial().as_ref() == Some(&big_n),
        format!("{} terms", big_n.term_count()),
    );

    let k = witness.k;
    for cond in conditions(n, parity) {
        let survivors: Vec<&TableRow> = rows.iter().filter(|row| cond.survivors.contains(&row.label)).collect();
        let partial = |keep: bool| {
            rows.iter()
                .enumerate()
                .filter(|(_, row)| cond.survivors.contains(&row.label) == keep)
                .fold(SymPoly::zero(r), |acc, (i, _)| &acc + &term(i))
        };
        match cond.factor {
            Factor::Prime(p) => {
                let pb = BigInt::from(p);
                let expected: Vec<&str> = rows
                    .iter()
                    .zip(&cleared_r)
                    .filter(|(_, c)| !c.coeffs().iter().all(|v| v.is_multiple_of(&pb)))
                    .map(|(row, _)| row.label)
                    .collect();
                checks.push(
                    format!("{} surviving types mod {p}", cond.label),
                    expected == cond.survivors,
                    format!("computed {}", expected.join(",")),
                );
                checks.push(
                    format!("{} other terms vanish mod {p}", cond.label),
                    partial(false).all_coefficients_divisible_by(&pb),
                    "coefficientwise",
                );
                // Π(1+α)^p − Π(1+α^p) ≡ 0 mod p, times Π(1+α)^{k−p}.
                let u = over_alphas(&(&SymPoly::one(1) + &SymPoly::var(1, Var::A(0))), r);
                let up = over_alphas(&(&SymPoly::one(1) + &SymPoly::var(1, Var::A(0)).pow(p)), r);
                let frobenius = &u.pow(k - p) * &(&u.pow(p) - &up);
                checks.push(
                    format!("{} Frobenius congruence mod {p}", cond.label),
                    frobenius.all_coefficients_divisible_by(&pb),
                    format!("{} terms", frobenius.term_count()),
                );
                checks.push(
                    format!("{} surviving terms vanish mod {p}", cond.label),
                    partial(true).all_coefficients_divisible_by(&pb),
                    names(&survivors),
                );
                checks.push(
                    format!("{} D*P = 0 mod {p}", cond.label),
                    big_n.all_coefficients_divisible_by(&pb),
                    "coefficientwise",
                );
            }
            Factor::Cyclotomic(m) => {
                let phi = cyclotomic(m);
                let expected: Vec<&str> = rows
                    .iter()
                    .filter(|row| row.r_tau.denominator().divrem(&phi).map(|(_, rem)| rem.is_zero()).unwrap_or(false))
                    .map(|row| row.label)
                    .collect();
                checks.push(
                    format!("{} types with a pole at zeta_{m}", cond.label),
                    expected == cond.survivors,
                    format!("computed {}", expected.join(",")),
                );
                checks.push(format!("{} other terms vanish mod Phi_{m}", cond.label), is_zero_mod(&partial(false), &phi)?, "remainder");
                checks.push(
                    format!("{} surviving terms vanish mod Phi_{m}", cond.label),
                    is_zero_mod(&partial(true), &phi)?,
                    names(&survivors),
                );
                checks.push(format!("{} D*P = 0 mod Phi_{m}", cond.label), is_zero_mod(&big_n, &phi)?, "remainder");
            }
            Factor::OnePlusX(kk) => {
                derivative_checks(cond.label, kk, &rows, &h, &script_p, &witness, r, &mut checks)?;
                checks.push(
                    format!("{} D*P = 0 mod (1+x)^{kk}", cond.label),
                    is_zero_mod(&big_n, &one_plus_x_pow(kk))?,
                    "remainder",
                );
            }
        }
    }

    let polynomial = script_p.to_polynomial();
    checks.push(
        "P in Z[x,J]",
        polynomial.is_some(),
        format!("denominator {}", script_p.denominator()),
    );
    let polynomial = polynomial.unwrap_or_else(|| SymPoly::zero(r));
    checks.push("symmetric in J", is_symmetric(&polynomial), format!("{} terms", polynomial.term_count()));
    Ok(SymbolicCertificate {
        group: GroupSpec::Sp(2 * n),
        j_arity: r,
        variants: vec![Variant { regime: Regime::Parity { parity }, polynomial: polynomial.clone() }],
        polynomial,
        checks: checks.finish()?,
    })
}

#[allow(clippy::too_many_arguments)]
fn derivative_checks(
    label: &str,
    k: u32,
    rows: &[TableRow],
    h: &[SymPoly],
    script_p: &RationalFunction,
    witness: &crate::classtypes::tables::WitnessTable,
    r: usize,
    checks: &mut Checks,
) -> Result<()> {
    let dw = DerivativeWitness::new(r, k);
    let lift = |f: &RationalFunction| f.mul_poly(&SymPoly::from_x_poly(0, one_plus_x_pow(k)));
    let index = |name: &str| rows.iter().position(|row| row.label == name);

    // Which types carry a pole at −1 must match the table rows.
    let mut listed: Vec<&str> = witness.rows.iter().map(|w| w.label).chain(witness.second_order.iter().map(|s| s.0)).collect();
    listed.sort_unstable();
    let mut poles: Vec<&str> = rows
        .iter()
        .filter(|row| row.r_tau.denominator().eval(&BigInt::from(-1)).is_zero())
        .map(|row| row.label)
        .collect();
    poles.sort_unstable();
    checks.push(format!("{label} types with a pole at -1"), listed == poles, format!("computed {}", poles.join(",")));

    // Σ S_τ vanishes to order k at −1.
    let total = [witness.rows.iter().map(|w| w.label).collect::<Vec<_>>(), witness.second_order.iter().map(|s| s.0).collect()]
        .concat()
        .into_iter()
        .filter_map(index)
        .fold(RationalFunction::from_poly(SymPoly::zero(0)), |acc, i| &acc + &lift(&rows[i].r_tau));
    let mut d = total;
    let mut values = Vec::new();
    for _ in 0..k {
        values.push(at_minus_one(&d)?);
        d = d.derivative_x();
    }
    checks.push(
        format!("{label} sum of S_tau vanishes to order {k}"),
        values.iter().all(|v| v.is_zero()),
        values.iter().map(fmt_rational).collect::<Vec<_>>().join(","),
    );

    let mut sum_s_h1 = BigRational::zero();
    let mut sum_sp_h1 = BigRational::zero();
    let mut sum_s_h2 = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
    for w in &witness.rows {
        let i = index(w.label).ok_or_else(|| Error::certificate(label, format!("unknown type {}", w.label)))?;
        let s = lift(&rows[i].r_tau);
        let s0 = at_minus_one(&s)?;
        let s1 = at_minus_one(&s.derivative_x())?;
        checks.push(format!("{label} S_{}(-1)", w.label), s0 == w.s, fmt_rational(&s0));
        if let Some(sp) = &w.s_prime {
            checks.push(format!("{label} S'_{}(-1)", w.label), s1 == *sp, fmt_rational(&s1));
        }
        let h0 = sym_at_minus_one(&h[i]);
        checks.push(format!("{label} H_{}(-1) = A", w.label), h0 == dw.a, "");
        let dh = h[i].derivative(Var::X);
        let h1 = sym_at_minus_one(&dh);
        checks.push(
            format!("{label} H'_{}(-1) = {}AB", w.label, w.h_prime_ab),
            h1 == dw.ab.scale(&BigInt::from(w.h_prime_ab)),
            "",
        );
        sum_s_h1 += &s0 * BigRational::from_integer(BigInt::from(w.h_prime_ab));
        sum_sp_h1 += &s1 * BigRational::from_integer(BigInt::from(w.h_prime_ab));
        if let Some((c1, c2, c3)) = w.h_second {
            let h2 = sym_at_minus_one(&dh.derivative(Var::X));
            let expected = &(&dw.ab.scale(&BigInt::from(c1)) + &dw.ac.scale(&BigInt::from(c2))) + &dw.ad.scale(&BigInt::from(c3));
            checks.push(format!("{label} H''_{}(-1) = {c1}AB+{c2}AC+{c3}AD", w.label), h2 == expected, "");
            for (acc, c) in sum_s_h2.iter_mut().zip([c1, c2, c3]) {
                *acc += &s0 * BigRational::from_integer(BigInt::from(c));
            }
        }
    }
    checks.push(format!("{label} AB coefficient of P'_k(-1)"), sum_s_h1.is_zero(), fmt_rational(&sum_s_h1));
    if k >= 3 {
        let ab = BigRational::from_integer(BigInt::from(2)) * &sum_sp_h1 + &sum_s_h2[0];
        checks.push(format!("{label} AB coefficient of P''_k(-1)"), ab.is_zero(), fmt_rational(&ab));
        checks.push(format!("{label} AC coefficient of P''_k(-1)"), sum_s_h2[1].is_zero(), fmt_rational(&sum_s_h2[1]));
        checks.push(format!("{label} AD coefficient of P''_k(-1)"), sum_s_h2[2].is_zero(), fmt_rational(&sum_s_h2[2]));
    }
    let mut second_sum = BigRational::zero();
    for (name, s2) in &witness.second_order {
        let i = index(name).ok_or_else(|| Error::certificate(label, format!("unknown type {name}")))?;
        let s = lift(&rows[i].r_tau);
        let vals = [at_minus_one(&s)?, at_minus_one(&s.derivative_x())?, at_minus_one(&s.derivative_x().derivative_x())?];
        checks.push(
            format!("{label} S_{name} vanishes to order 2 with S''(-1) = {}", fmt_rational(s2)),
            vals[0].is_zero() && vals[1].is_zero() && vals[2] == *s2,
            fmt_rational(&vals[2]),
        );
        second_sum += &vals[2];
    }
    if !witness.second_order.is_empty() {
        checks.push(format!("{label} second-order terms cancel"), second_sum.is_zero(), fmt_rational(&second_sum));
    }

    // The condition itself: (1 + x)^k·𝒫 and its first k − 1 derivatives vanish at −1.
    let mut pk = script_p.mul_poly(&SymPoly::from_x_poly(r, one_plus_x_pow(k)));
    for j in 0..k {
        let (num, _) = pk.subst_x(&BigInt::from(-1))?;
        checks.push(format!("{label} derivative {j} of (1+x)^{k} P at -1"), num.is_zero(), format!("{} terms", num.term_count()));
        pk = pk.derivative_x();
    }
    Ok(())
}

/// Output of the general-n harness. This is evidence for a single
/// (n, parity, r), not a proof.
#[derive(Clone, Debug, Serialize)]
pub struct SpEvidence {
    pub n: u32,
    pub parity: Parity,
    pub j_arity: usize,
    pub types: usize,
    /// Denominator of Σ_τ R_τ·H_τ after reduction; 1 when it clears.
    pub denominator: IntPoly,
    pub integral: bool,
    /// The assembled sum when it clears to ℤ[x, J].
    pub polynomial: Option<SymPoly>,
    pub status: &'static str,
    #[serde(skip)]
    pub assembled: RationalFunction,
}

/// Assembles Σ_τ N_τ·ratio_τ·H_τ for Sp_2n from the generic type
/// enumeration and motives, without any transcribed data.
pub fn sp_experimental(n: u32, parity: Parity, r: usize) -> Result<SpEvidence> {
    if n == 0 {
        return Err(Error::invalid("Sp_2n needs n ≥ 1"));
    }
    let types = enumerate_sp_types(n, parity);
    let x = SymPoly::var(r, Var::X);
    let mut acc = RationalFunction::from_poly(SymPoly::zero(r));
    for t in &types {
        let motive = t.centralizer_motive();
        let ratio = &count_sp_poly(t, parity)? * &motive_ratio(&motive);
        let h = (0..r).fold(SymPoly::one(r), |p, i| &p * &motive.det_substituted(&SymPoly::var(r, Var::A(i)), &x));
        acc = &acc + &ratio.with_arity(r).mul_poly(&h);
    }
    Ok(SpEvidence {
        n,
        parity,
        j_arity: r,
        types: types.len(),
        denominator: acc.denominator().clone(),
        integral: acc.denominator().is_one(),
        polynomial: acc.to_polynomial(),
        status: "evidence",
        assembled: acc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classsum::class_sum;
    use crate::geometry::CurveDatum;

    #[test]
    fn sp4_trivial_arity() {
        let c = sp_certificate(2, Parity::Odd, 0).unwrap();
        assert!(c.polynomial.is_one());
        assert!(sp_certificate(2, Parity::Even, 0).unwrap().polynomial.is_one());
    }

    #[test]
    fn sp4_odd_arity_two_phi4_condition() {
        let c = sp_certificate(2, Parity::Odd, 2).unwrap();
        assert!(c.check("(c) D*P = 0 mod Phi_4").unwrap().passed);
        assert!(c.check("(c) surviving terms vanish mod Phi_4").unwrap().passed);
        assert!(c.all_passed());
    }

    #[test]
    fn sp6_even_witness_rows() {
        let c = sp_certificate(3, Parity::Even, 1).unwrap();
        let s = c.check("(c) S_tau'1(-1)").unwrap();
        assert!(s.passed);
        assert_eq!(s.witness, "1/6");
        assert!(c.check("(c) second-order terms cancel").unwrap().passed);
    }

    #[test]
    fn witness_for_one_variable() {
        // r = 1, k = 2: A = (1+α)², AB = α(1+α), AC = α², AD = 0.
        let w = DerivativeWitness::new(1, 2);
        let a = SymPoly::var(1, Var::A(0));
        let u = &SymPoly::one(1) + &a;
        assert_eq!(w.a, u.pow(2));
        assert_eq!(w.ab, &a * &u);
        assert_eq!(w.ac, a.pow(2));
        assert!(w.ad.is_zero());
        let w2 = DerivativeWitness::new(2, 3);
        assert_eq!(w2.ad, w2.ad.swap_vars(0, 1));
    }

    #[test]
    fn certificates_match_generic_assembly() {
        for n in [2, 3] {
            for parity in [Parity::Odd, Parity::Even] {
                for r in [0, 1, 2] {
                    let cert = sp_certificate(n, parity, r).unwrap();
                    let generic = sp_experimental(n, parity, r).unwrap();
                    assert!(generic.integral);
                    assert_eq!(generic.assembled.to_polynomial().unwrap(), cert.polynomial, "n={n} {parity} r={r}");
                }
            }
        }
    }

    #[test]
    fn certificate_matches_class_sum() {
        let cert_odd = sp_certificate(2, Parity::Odd, 2).unwrap();
        let cert_even = sp_certificate(2, Parity::Even, 2).unwrap();
        for (q, a) in [(3u64, 1i64), (5, -2), (2, 1), (4, 3)] {
            let c = CurveDatum::elliptic(q, a, &[1, 1], &[]).unwrap();
            let cert = if q % 2 == 1 { &cert_odd } else { &cert_even };
            assert_eq!(cert.evaluate(&c, 1).unwrap(), class_sum(&GroupSpec::Sp(4), &c).unwrap(), "q={q}");
        }
    }

    #[test]
    fn rejects_unsupported_rank() {
        assert!(sp_certificate(4, Parity::Odd, 0).is_err());
    }
}
