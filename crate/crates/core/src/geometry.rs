//! Curve data over F_q: Weil numerator, and place-degree multisets S and T.
//! Places are identified only by degree.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{gcd_u64, prime_power, root_power_transform, IntPoly, SymPoly, Var};
use crate::motive::ArtinTateMotive;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDatum {
    pub q: u64,
    /// P_X(t) = Π (1 − α t) over the Frobenius eigenvalues α on H¹.
    pub weil_numerator: IntPoly,
    pub s_degrees: Vec<u32>,
    #[serde(default)]
    pub t_degrees: Vec<u32>,
}

impl CurveDatum {
    pub fn new(q: u64, weil_numerator: IntPoly, s_degrees: Vec<u32>, t_degrees: Vec<u32>) -> Result<Self> {
        let mut c = CurveDatum { q, weil_numerator, s_degrees, t_degrees };
        c.s_degrees.sort_unstable();
        c.t_degrees.sort_unstable();
        c.validate()?;
        Ok(c)
    }

    pub fn projective_line(q: u64, s: &[u32], t: &[u32]) -> Result<Self> {
        Self::new(q, IntPoly::one(), s.to_vec(), t.to_vec())
    }

    /// P_X = 1 − a t + q t².
    pub fn elliptic(q: u64, a: i64, s: &[u32], t: &[u32]) -> Result<Self> {
        let p = IntPoly::new(vec![BigInt::from(1), BigInt::from(-a), BigInt::from(q)]);
        Self::new(q, p, s.to_vec(), t.to_vec())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: CurveDatum = serde_json::from_str(s)?;
        Self::new(c.q, c.weil_numerator, c.s_degrees, c.t_degrees)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("curve datum serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if prime_power(self.q).is_none() {
            return Err(Error::invalid(format!("q = {} is not a prime power", self.q)));
        }
        if self.weil_numerator.coeff(0) != BigInt::from(1) {
            return Err(Error::invalid("Weil numerator must satisfy P(0) = 1"));
        }
        if self.weil_numerator.deg() % 2 == 1 {
            return Err(Error::invalid("Weil numerator must have even degree"));
        }
        if self.s_degrees.is_empty() {
            return Err(Error::invalid("S must be nonempty"));
        }
        if self.s_degrees.iter().chain(&self.t_degrees).any(|&d| d == 0) {
            return Err(Error::invalid("place degrees must be positive"));
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.weil_numerator.deg() / 2
    }

    /// Monic polynomial whose roots are the eigenvalues J_X.
    pub fn j_x_poly(&self) -> IntPoly {
        self.weil_numerator.reverse()
    }

    /// Monic polynomial whose roots are J_X ∪ J_S − {1, 1}; needs |S| ≥ 2.
    pub fn j_poly(&self) -> Result<IntPoly> {
        if self.s_degrees.len() < 2 {
            return Err(Error::Precondition("need at least two places in S".into()));
        }
        let mut w = self.j_x_poly();
        for &d in &self.s_degrees {
            w = &w * &IntPoly::x_pow_minus_one(d as usize);
        }
        let line = IntPoly::from_i64(&[-1, 1]);
        w.div_exact(&(&line * &line))
    }

    pub fn base_change(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("base change degree must be positive"));
        }
        let q = self
            .q
            .checked_pow(m)
            .ok_or_else(|| Error::invalid(format!("q^m overflows for q = {}, m = {m}", self.q)))?;
        let w = root_power_transform(&self.j_x_poly(), m)?;
        Ok(CurveDatum {
            q,
            weil_numerator: w.reverse(),
            s_degrees: split_places(&self.s_degrees, m),
            t_degrees: split_places(&self.t_degrees, m),
        })
    }
}

/// A place of degree d splits into gcd(d, m) places of degree d / gcd(d, m).
pub fn split_places(degrees: &[u32], m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for &d in degrees {
        let g = gcd_u64(d as u64, m as u64) as u32;
        out.extend(std::iter::repeat(d / g).take(g as usize));
    }
    out.sort_unstable();
    out
}

/// Π_v det(1 − t^{deg v} Fr^{deg v} | M) with x = t and α_1 = q.
pub fn h0_det(place_degrees: &[u32], motive: &ArtinTateMotive) -> Result<SymPoly> {
    let t = SymPoly::var(1, Var::X);
    let q = SymPoly::var(1, Var::A(0));
    let mut acc = SymPoly::one(1);
    for &k in place_degrees {
        let mk = motive.base_change(k)?;
        acc = &acc * &mk.det_substituted(&t.pow(k), &q.pow(k));
    }
    Ok(acc)
}

/// `h0_det` with q numeric, as a polynomial in t.
pub fn h0_det_at_q(place_degrees: &[u32], motive: &ArtinTateMotive, q: &BigInt) -> Result<IntPoly> {
    let mut acc = IntPoly::one();
    for &k in place_degrees {
        let det = motive.base_change(k)?.det_at_q(&num_traits::pow(q.clone(), k as usize));
        acc = &acc * &det.compose_power(k as usize);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::{motive_of, GroupSpec};

    #[test]
    fn json_schema() {
        let c = CurveDatum::from_json(r#"{"q":2,"weil_numerator":[1,-1,2],"s_degrees":[1,1],"t_degrees":[]}"#)
            .unwrap();
        assert_eq!(c, CurveDatum::elliptic(2, 1, &[1, 1], &[]).unwrap());
        assert!(CurveDatum::from_json(r#"{"q":6,"weil_numerator":[1],"s_degrees":[1]}"#).is_err());
        assert!(CurveDatum::from_json(r#"{"q":2,"weil_numerator":[2],"s_degrees":[1]}"#).is_err());
        assert!(CurveDatum::from_json(r#"{"q":2,"weil_numerator":[1,1],"s_degrees":[1]}"#).is_err());
        assert!(CurveDatum::from_json(r#"{"q":2,"weil_numerator":[1],"s_degrees":[]}"#).is_err());
        assert!(CurveDatum::from_json(r#"{"q":2}"#).is_err());
    }

    #[test]
    fn base_change_examples() {
        assert_eq!(split_places(&[2], 2), vec![1, 1]);
        let c = CurveDatum::elliptic(2, 1, &[1, 2], &[3]).unwrap();
        assert_eq!(c.base_change(1).unwrap(), c);
        let c2 = c.base_change(2).unwrap();
        assert_eq!(c2.q, 4);
        assert_eq!(c2.weil_numerator, IntPoly::from_i64(&[1, 3, 4]));
        assert_eq!(c2.s_degrees, vec![1, 1, 1]);
        assert_eq!(c2.t_degrees, vec![3]);
    }

    #[test]
    fn base_change_composes_and_preserves_total_degree() {
        for a in -2..=2 {
            let c = CurveDatum::elliptic(3, a, &[1, 2, 4], &[3, 6]).unwrap();
            for x in 1..=4 {
                for y in 1..=4 {
                    let lhs = c.base_change(x).unwrap().base_change(y).unwrap();
                    assert_eq!(lhs, c.base_change(x * y).unwrap());
                }
                let cx = c.base_change(x).unwrap();
                let total = |v: &[u32]| v.iter().sum::<u32>();
                assert_eq!(total(&cx.s_degrees), total(&c.s_degrees));
                assert_eq!(total(&cx.t_degrees), total(&c.t_degrees));
            }
        }
        let p1 = CurveDatum::projective_line(5, &[1], &[]).unwrap();
        assert!(p1.base_change(3).unwrap().weil_numerator.is_one());
    }

    #[test]
    fn h0_det_examples() {
        let sp2 = motive_of(&GroupSpec::Sp(2));
        let d = h0_det(&[1, 1], &sp2).unwrap();
        let one_minus_tq = &SymPoly::one(1) - &(&SymPoly::var(1, Var::X) * &SymPoly::var(1, Var::A(0)));
        assert_eq!(d, &one_minus_tq * &one_minus_tq);
        let u1 = motive_of(&GroupSpec::U(1));
        assert_eq!(h0_det(&[2], &u1).unwrap().as_x_poly().unwrap(), IntPoly::from_i64(&[1, 0, -1]));
        assert!(h0_det(&[], &sp2).unwrap().is_one());
    }

    #[test]
    fn h0_det_numeric_matches_symbolic() {
        let m = motive_of(&GroupSpec::Product(vec![GroupSpec::Sp(4), GroupSpec::Res(3, Box::new(GroupSpec::U(2)))]));
        let degs = [1, 2, 3, 6];
        let sym = h0_det(&degs, &m).unwrap();
        for q in [2i64, 3, 5] {
            let num = h0_det_at_q(&degs, &m, &BigInt::from(q)).unwrap();
            let mut direct = IntPoly::zero();
            for (xe, alpha, c) in sym.monomials() {
                let term = c * num_traits::pow(BigInt::from(q), alpha[0] as usize);
                direct = &direct + &IntPoly::monomial(term, xe);
            }
            assert_eq!(num, direct);
        }
    }
}
