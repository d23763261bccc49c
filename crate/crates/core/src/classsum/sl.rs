//! Certificates for SL_ℓ (ℓ prime) and for the SL_n polynomial
//! 𝒫 = Σ_{d|n} H_{n′n, d′d}·M_{n,d}, valid when gcd(n, q − 1) = 1.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{is_symmetric, Checks, Regime, SymbolicCertificate, Variant};
use crate::error::{Error, Result};
use crate::exactalg::{
    cyclotomic, divisors, factorize, gcd_u64, is_prime, lcm_u64, mobius, poly_divrem, IntPoly, RationalFunction,
    SymPoly, Var,
};
use crate::motive::GroupSpec;

fn alpha(r: usize, i: usize) -> SymPoly {
    SymPoly::var(r, Var::A(i))
}

/// 1 + α + … + α^{k−1}.
fn geometric(a: &SymPoly, k: u64) -> SymPoly {
    let mut acc = SymPoly::zero(a.nvars());
    let mut p = SymPoly::one(a.nvars());
    for _ in 0..k {
        acc = &acc + &p;
        p = &p * a;
    }
    acc
}

/// H_{N,D}(x, J) = Π_α (1 − α^D)/(1 − α) · Π_{i=1}^{N/D−1} (1 − α^D x^{iD})
/// over r symbolic α's; needs D | N.
pub fn h_nd(big_n: u64, big_d: u64, r: usize) -> Result<SymPoly> {
    if big_d == 0 || big_n % big_d != 0 {
        return Err(Error::invalid(format!("H_{{N,D}} needs D | N, got N = {big_n}, D = {big_d}")));
    }
    let one = SymPoly::one(r);
    let mut acc = one.clone();
    for a in 0..r {
        let ad = alpha(r, a).pow(big_d as u32);
        acc = &acc * &geometric(&alpha(r, a), big_d);
        for i in 1..big_n / big_d {
            let term = ad.mul_x_poly(&IntPoly::monomial(1, (i * big_d) as usize));
            acc = &acc * &(&one - &term);
        }
    }
    Ok(acc)
}

/// Σ_{e|d} μ(e)(x^{d/e} − 1), the numerator of M_{n,d} over x^n − 1.
fn m_numerator(d: u64) -> IntPoly {
    divisors(d).into_iter().fold(IntPoly::zero(), |acc, e| {
        &acc + &IntPoly::x_pow_minus_one((d / e) as usize).scale(&BigInt::from(mobius(e)))
    })
}

/// H_{n,d}(ζ_c, J) = Π_α (1 − α^L)^{n/L}/(1 − α) with L = lcm(c, d), checked
/// as equality of remainders modulo Φ_c.
pub fn lemma_cyclotomic_value(n: u64, d: u64, c: u64, r: usize) -> Result<bool> {
    if c == 0 || n % c != 0 {
        return Err(Error::invalid(format!("c = {c} must divide n = {n}")));
    }
    let h = h_nd(n, d, r)?;
    let phi = SymPoly::from_x_poly(r, cyclotomic(c));
    let lhs = poly_divrem(&h, &phi, Var::X)?.1;
    let l = lcm_u64(c, d);
    let one = SymPoly::one(r);
    let mut rhs = one.clone();
    for a in 0..r {
        let al = alpha(r, a);
        rhs = &rhs * &geometric(&al, l);
        rhs = &rhs * &(&one - &al.pow(l as u32)).pow((n / l - 1) as u32);
    }
    Ok(lhs == rhs)
}

/// SL_ℓ: R = (H_1 − H_ℓ)/Φ_ℓ, with ℒ = ℓ·R + H_ℓ when q ≡ 1 mod ℓ and
/// R + H_ℓ otherwise. The certified polynomial is R.
pub fn sl_prime_certificate(l: u32, r: usize) -> Result<SymbolicCertificate> {
    if !is_prime(l as u64) {
        return Err(Error::invalid(format!("ℓ = {l} is not prime")));
    }
    let one = SymPoly::one(r);
    let mut h1 = one.clone();
    let mut hl = one.clone();
    for a in 0..r {
        let al = alpha(r, a);
        for i in 1..l as usize {
            h1 = &h1 * &(&one - &al.mul_x_poly(&IntPoly::monomial(1, i)));
        }
        hl = &hl * &geometric(&al, l as u64);
    }
    let phi = cyclotomic(l as u64);
    let (quotient, rem) = poly_divrem(&(&h1 - &hl), &SymPoly::from_x_poly(r, phi.clone()), Var::X)?;
    let mut checks = Checks::default();
    checks.push(
        "H_1 - H_l divisible by Phi_l",
        rem.is_zero(),
        format!("remainder has {} terms", rem.term_count()),
    );
    checks.push("R symmetric in J", is_symmetric(&quotient), format!("{} terms", quotient.term_count()));

    // The rearrangement N_1·ρ·H_1 + ℓN_ℓ·ρ·H_ℓ = μ·R + H_ℓ with ρ = (1 − x)/(1 − x^ℓ),
    // ℓN_ℓ = (1 − x^ℓ)/(1 − x) − μ and μ = #μ_ℓ(F_q) ∈ {1, ℓ}.
    let rho = RationalFunction::from_x_ratio(IntPoly::from_i64(&[1, -1]), &IntPoly::one() - &IntPoly::monomial(1, l as usize))?
        .with_arity(r);
    let geometric_x = RationalFunction::from_x_ratio(phi, IntPoly::one())?.with_arity(r);
    let mut variants = Vec::new();
    for (regime, mu) in [
        (Regime::CongruentOne { modulus: l }, l as i64),
        (Regime::NotCongruentOne { modulus: l }, 1),
    ] {
        let mu_rf = RationalFunction::constant(r, &BigRational::from_integer(BigInt::from(mu)));
        let summed = &(&mu_rf * &rho).mul_poly(&h1) + &(&(&geometric_x - &mu_rf) * &rho).mul_poly(&hl);
        let closed = &quotient.scale(&BigInt::from(mu)) + &hl;
        checks.push(
            format!("closed form for mu = {mu}"),
            summed.to_polynomial().as_ref() == Some(&closed),
            format!("class-type sum denominator {}", summed.denominator()),
        );
        variants.push(Variant { regime, polynomial: closed });
    }
    Ok(SymbolicCertificate {
        group: GroupSpec::SL(l),
        j_arity: r,
        polynomial: quotient,
        variants,
        checks: checks.finish()?,
    })
}

/// Σ_{d|n} H_{n′n, d′d}(x, J)·M_{n,d}(x), certified to lie in ℤ[x, J].
/// With n′ = d′ = 1 this is 𝒫 with ℒ(SL_n) = 𝒫(q, J) whenever
/// gcd(n, q − 1) = 1.
pub fn sl_script_p(n: u32, r: usize, n_prime: u32, d_prime: u32) -> Result<SymbolicCertificate> {
    let (n, np, dp) = (n as u64, n_prime as u64, d_prime as u64);
    if n == 0 || np == 0 || dp == 0 || np % dp != 0 {
        return Err(Error::invalid(format!("need n ≥ 1 and d′ | n′, got n′ = {np}, d′ = {dp}")));
    }
    if gcd_u64(dp, n) != 1 {
        return Err(Error::invalid(format!("d′ = {dp} must be prime to n = {n}")));
    }
    let mut cache: HashMap<u64, SymPoly> = HashMap::new();
    let mut h = |dd: u64| -> Result<SymPoly> {
        if let Some(p) = cache.get(&dd) {
            return Ok(p.clone());
        }
        let p = h_nd(np * n, dp * dd, r)?;
        cache.insert(dd, p.clone());
        Ok(p)
    };
    let xn1 = IntPoly::x_pow_minus_one(n as usize);
    let mut numerator = SymPoly::zero(r);
    let mut assembled = RationalFunction::from_poly(SymPoly::zero(r));
    for d in divisors(n) {
        let hd = h(d)?;
        let md = m_numerator(d);
        numerator = &numerator + &hd.mul_x_poly(&md);
        assembled = &assembled + &RationalFunction::from_x_ratio(md, xn1.clone())?.with_arity(r).mul_poly(&hd);
    }
    let (p, rem) = poly_divrem(&numerator, &SymPoly::from_x_poly(r, xn1), Var::X)?;
    let mut checks = Checks::default();
    checks.push(
        "numerator divisible by x^n - 1",
        rem.is_zero(),
        format!("remainder has {} terms", rem.term_count()),
    );
    checks.push(
        "rational assembly clears to the same polynomial",
        assembled.to_polynomial().as_ref() == Some(&p),
        format!("denominator {}", assembled.denominator()),
    );
    checks.push("symmetric in J", is_symmetric(&p), format!("{} terms", p.term_count()));

    // Inductive step on n = ℓ^k·N: H_{n′n, d′ℓ^i d} and H_{n′n, d′ℓ^{i+1} d}
    // agree at every ζ_c with ℓ^{i+1} | c | n.
    for (l, k) in factorize(n) {
        let big_n = n / l.pow(k);
        let mut tested = 0usize;
        let mut failures = Vec::new();
        for i in 0..k {
            let li = l.pow(i);
            for d in divisors(big_n) {
                let diff = &h(li * d)? - &h(li * l * d)?;
                for c in divisors(n).into_iter().filter(|c| c % (li * l) == 0) {
                    let phi = SymPoly::from_x_poly(r, cyclotomic(c));
                    tested += 1;
                    if !poly_divrem(&diff, &phi, Var::X)?.1.is_zero() {
                        failures.push(format!("(i={i}, d={d}, c={c})"));
                    }
                }
            }
        }
        checks.push(
            format!("cyclotomic agreement at l = {l}"),
            failures.is_empty(),
            if failures.is_empty() { format!("{tested} remainders vanish") } else { failures.join(" ") },
        );
    }

    let variants = if np == 1 && dp == 1 {
        vec![Variant { regime: Regime::CoprimeToQMinusOne { n: n as u32 }, polynomial: p.clone() }]
    } else {
        Vec::new()
    };
    Ok(SymbolicCertificate {
        group: GroupSpec::SL(n as u32),
        j_arity: r,
        polynomial: p,
        variants,
        checks: checks.finish()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classsum::class_sum;
    use crate::exactalg::rat_int;
    use crate::geometry::CurveDatum;

    #[test]
    fn sl2_examples() {
        let c0 = sl_prime_certificate(2, 0).unwrap();
        assert!(c0.polynomial.is_zero());
        assert!(c0.variants.iter().all(|v| v.polynomial.is_one()));
        let c1 = sl_prime_certificate(2, 1).unwrap();
        assert_eq!(c1.polynomial, -&SymPoly::var(1, Var::A(0)));
    }

    #[test]
    fn sl3_remainder_vanishes() {
        let c = sl_prime_certificate(3, 1).unwrap();
        assert!(c.check("H_1 - H_l divisible by Phi_l").unwrap().passed);
        assert!(sl_prime_certificate(4, 1).is_err());
    }

    #[test]
    fn sl_prime_matches_class_sum() {
        for l in [2u32, 3] {
            let cert0 = sl_prime_certificate(l, 0).unwrap();
            let cert2 = sl_prime_certificate(l, 2).unwrap();
            for q in [2u64, 3, 4, 7] {
                let p1 = CurveDatum::projective_line(q, &[1, 1], &[]).unwrap();
                assert_eq!(cert0.evaluate(&p1, 1).unwrap(), class_sum(&GroupSpec::SL(l), &p1).unwrap());
            }
            for a in [-1i64, 0, 1] {
                let e = CurveDatum::elliptic(2, a, &[1, 1], &[]).unwrap();
                for m in 1..=3 {
                    let direct = class_sum(&GroupSpec::SL(l), &e.base_change(m).unwrap()).unwrap();
                    assert_eq!(cert2.evaluate(&e, m).unwrap(), direct, "l={l} a={a} m={m}");
                }
            }
        }
    }

    #[test]
    fn script_p_trivial_and_integral() {
        let c = sl_script_p(2, 0, 1, 1).unwrap();
        assert!(c.polynomial.is_one());
        for n in 1..=6 {
            assert!(sl_script_p(n, 1, 1, 1).unwrap().all_passed());
        }
        assert!(sl_script_p(4, 1, 3, 1).unwrap().all_passed());
        assert!(sl_script_p(3, 1, 5, 5).unwrap().all_passed());
        assert!(sl_script_p(5, 1, 5, 5).is_err());
        assert!(sl_script_p(4, 1, 3, 2).is_err());
    }

    #[test]
    fn script_p_matches_class_sum_when_coprime() {
        let cert = sl_script_p(2, 1, 1, 1).unwrap();
        for q in [2u64, 4, 8] {
            let c = CurveDatum::projective_line(q, &[1, 2], &[]).unwrap();
            assert_eq!(c.j_poly().unwrap().deg(), 1);
            assert_eq!(cert.evaluate(&c, 1).unwrap(), class_sum(&GroupSpec::SL(2), &c).unwrap(), "q={q}");
        }
        let odd = CurveDatum::projective_line(3, &[1, 2], &[]).unwrap();
        assert!(cert.evaluate(&odd, 1).is_err());
        let cert3 = sl_script_p(3, 0, 1, 1).unwrap();
        let p1 = CurveDatum::projective_line(2, &[1, 1], &[]).unwrap();
        assert_eq!(cert3.evaluate(&p1, 1).unwrap(), rat_int(1));
    }

    #[test]
    fn lemma_value_mod_phi() {
        assert!(lemma_cyclotomic_value(4, 2, 4, 2).unwrap());
        for (n, d, c) in [(6, 2, 3), (6, 3, 2), (8, 1, 8), (4, 4, 2), (6, 1, 6)] {
            assert!(lemma_cyclotomic_value(n, d, c, 1).unwrap(), "n={n} d={d} c={c}");
        }
    }

    #[test]
    fn h_nd_base_change_law() {
        // H_{mn, md}(x) = H_{n,d}(x^m, J^m)·Π (1 − α^m)/(1 − α), with r = 1.
        let (n, d, m) = (4u64, 2u64, 3u64);
        let lhs = h_nd(m * n, m * d, 1).unwrap();
        let base = h_nd(n, d, 1).unwrap();
        let mut rhs = SymPoly::zero(1);
        for (xe, key, c) in base.monomials() {
            rhs = &rhs + &SymPoly::monomial(1, c.clone(), xe * m as usize, &[key[0] * m as u32]);
        }
        let rhs = &rhs * &geometric(&SymPoly::var(1, Var::A(0)), m);
        assert_eq!(lhs, rhs);
    }
}
