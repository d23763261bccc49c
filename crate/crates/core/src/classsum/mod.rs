//! Class sums ℒ(G) = Σ_[γ] L_S(M_{G_γ}) over semisimple classes, computed
//! numerically type by type, and symbolic certificates: integer polynomials
//! 𝒫(x, J) with ℒ(G, m) = 𝒫(q^m, J^m), together with the divisibility
//! conditions checked while clearing their denominators.
//!
//! A certificate's α-variables stand for the multiset J = J_X ∪ J_S − {1, 1};
//! its arity r must equal deg of the curve's J-polynomial to be evaluated.

mod sl;
mod sp;

pub use sl::{h_nd, lemma_cyclotomic_value, sl_prime_certificate, sl_script_p};
pub use sp::{sp_certificate, sp_experimental, DerivativeWitness, SpEvidence};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classtypes::{count_sl, count_sp, enumerate_sl_types, enumerate_sp_types_all, motive_ratio, ratio_at_one, Parity};
use crate::error::{Error, Result};
use crate::exactalg::{big_pow, reduce_symmetric, root_power_transform, IntPoly, SymPoly};
use crate::geometry::CurveDatum;
use crate::lfun::l_value;
use crate::motive::GroupSpec;

/// Default bound on the number of symbolic J-variables. Degrees grow
/// linearly in r, term counts much faster.
pub const MAX_ARITY: usize = 4;

/// The set of q for which a closed form applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Regime {
    Any,
    Parity { parity: Parity },
    /// q ≡ 1 mod `modulus`.
    CongruentOne { modulus: u32 },
    /// q ≢ 1 mod `modulus`.
    NotCongruentOne { modulus: u32 },
    /// gcd(n, q − 1) = 1.
    CoprimeToQMinusOne { n: u32 },
}

impl Regime {
    pub fn contains(&self, q: &BigInt) -> bool {
        let residue = |m: u32| ((q - 1u32) % m).is_zero();
        match self {
            Regime::Any => true,
            Regime::Parity { parity } => (q % 2u32).is_zero() == (*parity == Parity::Even),
            Regime::CongruentOne { modulus } => residue(*modulus),
            Regime::NotCongruentOne { modulus } => !residue(*modulus),
            Regime::CoprimeToQMinusOne { n } => num_integer::gcd(q - 1u32, BigInt::from(*n)).is_one(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Variant {
    pub regime: Regime,
    pub polynomial: SymPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicCertificate {
    pub group: GroupSpec,
    pub j_arity: usize,
    /// The polynomial whose integrality is certified.
    pub polynomial: SymPoly,
    /// Closed forms for ℒ, one per regime of q.
    pub variants: Vec<Variant>,
    pub checks: Vec<Check>,
}

impl SymbolicCertificate {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// ℒ over F_{q^m}: the closed form for q^m evaluated at x = q^m and at
    /// the m-th powers of the roots of the curve's J-polynomial.
    pub fn evaluate(&self, c: &CurveDatum, m: u32) -> Result<BigRational> {
        let qm = big_pow(c.q, m as u64);
        let variant = self
            .variants
            .iter()
            .find(|v| v.regime.contains(&qm))
            .ok_or_else(|| Error::Precondition(format!("no closed form in this certificate applies to q = {qm}")))?;
        let w = root_power_transform(&c.j_poly()?, m)?;
        evaluate_symmetric(&variant.polynomial, &qm, &w)
    }
}

/// Collects checks and fails on the first one that does not pass.
#[derive(Default)]
pub(crate) struct Checks(Vec<Check>);

impl Checks {
    pub(crate) fn push(&mut self, label: impl Into<String>, passed: bool, witness: impl Into<String>) {
        self.0.push(Check { label: label.into(), passed, witness: witness.into() });
    }

    pub(crate) fn finish(self) -> Result<Vec<Check>> {
        match self.0.iter().find(|c| !c.passed) {
            Some(c) => Err(Error::certificate(c.label.clone(), c.witness.clone())),
            None => Ok(self.0),
        }
    }
}

/// Refuses symbolic arities above `cap`.
pub fn check_arity(r: usize, cap: usize) -> Result<()> {
    if r > cap {
        return Err(Error::budget("symbolic J arity", r as u128, cap as u128));
    }
    Ok(())
}

/// Swapping any two α-variables leaves `p` unchanged.
pub(crate) fn is_symmetric(p: &SymPoly) -> bool {
    (1..p.nvars()).all(|j| p.swap_vars(j - 1, j) == *p)
}

/// p(x = q, α = roots of w).
pub fn evaluate_symmetric(p: &SymPoly, q: &BigInt, w: &IntPoly) -> Result<BigRational> {
    if p.nvars() != w.deg() {
        return Err(Error::invalid(format!(
            "polynomial has {} J-variables but the J-polynomial has degree {}",
            p.nvars(),
            w.deg()
        )));
    }
    let block: Vec<usize> = (0..p.nvars()).collect();
    let v = reduce_symmetric(&p.subst_x(q), &block, w)?;
    let c = v.as_constant().ok_or_else(|| Error::NotSymmetric("value depends on x after substitution".into()))?;
    Ok(BigRational::from_integer(c))
}

fn class_sum_preconditions(c: &CurveDatum) -> Result<()> {
    if !c.t_degrees.is_empty() {
        return Err(Error::Precondition("class sums need T empty".into()));
    }
    if c.s_degrees.len() < 2 {
        return Err(Error::Precondition("class sums need at least two places in S".into()));
    }
    Ok(())
}

/// Σ over semisimple types of (number of classes) × L_S(centralizer motive).
/// Types are skipped only when det(1 − Fr)/det(1 − q·Fr) vanishes identically.
pub fn class_sum(spec: &GroupSpec, c: &CurveDatum) -> Result<BigRational> {
    class_sum_preconditions(c)?;
    let mut total = BigRational::zero();
    match *spec {
        GroupSpec::SL(n) if n >= 1 => {
            for t in enumerate_sl_types(n) {
                if ratio_at_one(&t).is_zero() {
                    continue;
                }
                let d = t.pairs()[0].0;
                let count = count_sl(n, d, c.q)?;
                total += BigRational::from_integer(count) * l_value(&t.centralizer_motive(), c)?;
            }
        }
        GroupSpec::Sp(m) if m >= 2 && m % 2 == 0 => {
            for t in enumerate_sp_types_all(m / 2, Parity::of(c.q)) {
                let motive = t.centralizer_motive();
                if motive_ratio(&motive).is_zero() {
                    continue;
                }
                total += count_sp(&t, c.q)? * l_value(&motive, c)?;
            }
        }
        _ => return Err(Error::invalid(format!("class sums are implemented for SL(n) and Sp(2n), got {spec:?}"))),
    }
    Ok(total)
}

/// ℒ on P¹ with two places of degree 1 in S equals 1.
pub fn verify_sum_identity(spec: &GroupSpec, q: u64) -> bool {
    CurveDatum::projective_line(q, &[1, 1], &[])
        .and_then(|c| class_sum(spec, &c))
        .is_ok_and(|v| v.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;

    #[test]
    fn sum_identity_examples() {
        assert!(verify_sum_identity(&GroupSpec::SL(4), 3));
        assert!(verify_sum_identity(&GroupSpec::Sp(6), 2));
        assert!(verify_sum_identity(&GroupSpec::SL(2), 9));
        for n in 1..=6 {
            for q in [2, 3, 4, 5] {
                assert!(verify_sum_identity(&GroupSpec::SL(n), q), "SL{n} q={q}");
            }
        }
        for q in [2, 3, 5] {
            assert!(verify_sum_identity(&GroupSpec::Sp(4), q));
        }
    }

    #[test]
    fn class_sum_preconditions_enforced() {
        let one_place = CurveDatum::projective_line(3, &[1], &[]).unwrap();
        assert!(matches!(class_sum(&GroupSpec::SL(2), &one_place), Err(Error::Precondition(_))));
        let with_t = CurveDatum::projective_line(3, &[1, 1], &[1]).unwrap();
        assert!(class_sum(&GroupSpec::SL(2), &with_t).is_err());
        let p1 = CurveDatum::projective_line(3, &[1, 1], &[]).unwrap();
        assert!(class_sum(&GroupSpec::GL(2), &p1).is_err());
    }

    #[test]
    fn sl2_class_sum_by_hand() {
        // q = 2, P_X = 1 − t + 2t², S = {1, 1}: J = {α, β}, α + β = 1, αβ = 2.
        // d = 1: one class, ratio 1/(1 + q), H_1 = Π(1 − αq) = 7.
        // d = 2: one class (x² + x + 1), ratio 2/(1 + q), H_2 = Π(1 + α) = 4.
        // ℒ = 7/3 + 8/3 = 5.
        let c = CurveDatum::elliptic(2, 1, &[1, 1], &[]).unwrap();
        assert_eq!(class_sum(&GroupSpec::SL(2), &c).unwrap(), rat_int(5));
    }

    #[test]
    fn regimes() {
        let q = BigInt::from(7);
        assert!(Regime::CongruentOne { modulus: 3 }.contains(&q));
        assert!(!Regime::NotCongruentOne { modulus: 3 }.contains(&q));
        assert!(Regime::Parity { parity: Parity::Odd }.contains(&q));
        assert!(!Regime::CoprimeToQMinusOne { n: 4 }.contains(&q));
        assert!(Regime::CoprimeToQMinusOne { n: 3 }.contains(&BigInt::from(8)));
    }
}
