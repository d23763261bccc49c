//! Formal sums f(m) = Σ n_i α_i^m with cyclotomic-rational coefficients and
//! bases, closed under the ring operations, the rescaling m ↦ ℓm, and the
//! transform f ↦ f_N with f_N(m) = f(lcm(N, m))^{gcd(N, m)}.

mod cyclo;

pub use cyclo::{CyclotomicRational, CONDUCTOR_CAP};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{factorize, lcm_u64};

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzTerm {
    pub coefficient: CyclotomicRational,
    pub base: CyclotomicRational,
}

/// Canonical form: all terms share one conductor, bases are distinct and
/// nonzero, coefficients nonzero, terms sorted.
#[derive(Clone, Debug, Serialize)]
pub struct LefschetzFunction {
    terms: Vec<LefschetzTerm>,
}

impl LefschetzFunction {
    pub fn zero() -> Self {
        LefschetzFunction { terms: Vec::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CyclotomicRational, CyclotomicRational)>) -> Self {
        let raw: Vec<(CyclotomicRational, CyclotomicRational)> = terms.into_iter().collect();
        let l = raw
            .iter()
            .fold(1, |l, (c, b)| lcm_u64(lcm_u64(l, c.conductor()), b.conductor()));
        let mut merged: Vec<LefschetzTerm> = Vec::new();
        let mut lifted: Vec<(CyclotomicRational, CyclotomicRational)> =
            raw.into_iter().map(|(c, b)| (c.lift(l), b.lift(l))).collect();
        lifted.sort_by(|a, b| a.1.key_cmp(&b.1));
        for (c, b) in lifted {
            if b.is_zero() || c.is_zero() {
                continue;
            }
            match merged.last_mut() {
                Some(t) if t.base.key_cmp(&b).is_eq() => t.coefficient = (&t.coefficient + &c).lift(l),
                _ => merged.push(LefschetzTerm { coefficient: c, base: b }),
            }
        }
        merged.retain(|t| !t.coefficient.is_zero());
        LefschetzFunction { terms: merged }
    }

    /// The constant function c = c·1^m.
    pub fn constant(c: CyclotomicRational) -> Self {
        Self::from_terms([(c, CyclotomicRational::one())])
    }

    pub fn single_base(coefficient: CyclotomicRational, base: CyclotomicRational) -> Self {
        Self::from_terms([(coefficient, base)])
    }

    /// χ_n(m) = Σ_{i<n} ζ_n^{im}: n when n | m, else 0.
    pub fn chi(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("chi needs n >= 1"));
        }
        let mut terms = Vec::new();
        for i in 0..n {
            terms.push((CyclotomicRational::one(), CyclotomicRational::root_of_unity(n, i)?));
        }
        Ok(Self::from_terms(terms))
    }

    pub fn terms(&self) -> &[LefschetzTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn conductor(&self) -> u64 {
        self.terms.first().map_or(1, |t| t.base.conductor())
    }

    pub fn evaluate(&self, m: u64) -> CyclotomicRational {
        self.terms.iter().fold(CyclotomicRational::zero(), |acc, t| &acc + &(&t.coefficient * &t.base.pow(m)))
    }

    pub fn equals(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    pub fn scale(&self, c: &CyclotomicRational) -> Self {
        Self::from_terms(self.terms.iter().map(|t| (&t.coefficient * c, t.base.clone())))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::constant(CyclotomicRational::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// m ↦ f(ℓm): every base α becomes α^ℓ.
    pub fn compose_scale(&self, l: u64) -> Self {
        Self::from_terms(self.terms.iter().map(|t| (t.coefficient.clone(), t.base.pow(l))))
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|t| t.coefficient.to_integer().is_some())
    }

    /// f(m) ∈ ℤ for m = 1..=max(1, #terms).
    pub fn is_integer_valued(&self) -> bool {
        (1..=self.terms.len().max(1) as u64).all(|m| self.evaluate(m).to_integer().is_some())
    }

    /// g with g(m) = f(lcm(N, m))^{gcd(N, m)}, via the prime-power recursion
    /// f_{ℓ^e} = g_{ℓ^{e−1}} + χ_{ℓ^e}·h where g(m) = f(ℓm) and
    /// h = (f^{ℓ^e} − g^{ℓ^{e−1}}) / ℓ^e.
    pub fn f_n_transform(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("N must be positive"));
        }
        if !self.has_integer_coefficients() {
            return Err(Error::Precondition("f_N needs integer coefficients".into()));
        }
        if lcm_u64(self.conductor(), n) > CONDUCTOR_CAP {
            return Err(Error::invalid(format!("conductor for N = {n} exceeds the cap {CONDUCTOR_CAP}")));
        }
        let mut out = self.clone();
        for (l, e) in factorize(n) {
            out = out.prime_power_transform(l, e)?;
        }
        Ok(out)
    }

    fn prime_power_transform(&self, l: u64, e: u32) -> Result<Self> {
        if e == 0 {
            return Ok(self.clone());
        }
        let le = l.pow(e);
        let g = self.compose_scale(l);
        let g_part = g.prime_power_transform(l, e - 1)?;
        let diff = &self.pow(le) - &g.pow(le / l);
        let modulus = BigInt::from(le);
        let mut h_terms = Vec::with_capacity(diff.terms.len());
        for t in &diff.terms {
            let c = t.coefficient.to_integer().ok_or_else(|| {
                Error::inexact(format!("coefficient {} of f^{le} - g^{} is not an integer", t.coefficient, le / l))
            })?;
            let (q, r) = c.div_rem(&modulus);
            if r != BigInt::from(0) {
                return Err(Error::inexact(format!(
                    "coefficient {c} at base {} is not divisible by {le}",
                    t.base
                )));
            }
            h_terms.push((CyclotomicRational::from_int(q), t.base.clone()));
        }
        let h = Self::from_terms(h_terms);
        Ok(&g_part + &(&Self::chi(le)? * &h))
    }

    /// Π over degrees d of f_d: m ↦ Π_{w ∈ T_m} f(m·deg w).
    pub fn place_product(&self, degrees: &[u32]) -> Result<Self> {
        let mut acc = Self::constant(CyclotomicRational::one());
        for &d in degrees {
            acc = &acc * &self.f_n_transform(d as u64)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("function serializes")
    }
}

impl fmt::Display for LefschetzFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Bases other than nonnegative rationals are parenthesized so "^m" binds to all of it.
        let base = |b: &CyclotomicRational| match b.to_rational() {
            Some(r) if !r.is_negative() => b.to_string(),
            Some(_) => format!("({b})"),
            None => b.to_string(),
        };
        let parts: Vec<String> = self.terms.iter().map(|t| format!("{}*{}^m", t.coefficient, base(&t.base))).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl std::ops::Add for &LefschetzFunction {
    type Output = LefschetzFunction;
    fn add(self, rhs: &LefschetzFunction) -> LefschetzFunction {
        LefschetzFunction::from_terms(
            self.terms
                .iter()
                .chain(&rhs.terms)
                .map(|t| (t.coefficient.clone(), t.base.clone())),
        )
    }
}

impl std::ops::Neg for &LefschetzFunction {
    type Output = LefschetzFunction;
    fn neg(self) -> LefschetzFunction {
        LefschetzFunction::from_terms(self.terms.iter().map(|t| (-&t.coefficient, t.base.clone())))
    }
}

impl std::ops::Sub for &LefschetzFunction {
    type Output = LefschetzFunction;
    fn sub(self, rhs: &LefschetzFunction) -> LefschetzFunction {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &LefschetzFunction {
    type Output = LefschetzFunction;
    fn mul(self, rhs: &LefschetzFunction) -> LefschetzFunction {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                terms.push((&a.coefficient * &b.coefficient, &a.base * &b.base));
            }
        }
        LefschetzFunction::from_terms(terms)
    }
}
