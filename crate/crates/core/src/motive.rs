//! Artin–Tate motives M_G = ⊕_d V_d(1−d) of split groups and their
//! closure operations. A piece stores only det(1 − u·F | V_d); the Tate twist
//! is carried by the weight index.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, SymPoly, Var};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradedPiece {
    pub weight_index: u32,
    /// c_d(u) = det(1 − u·F_d | V_d), so c_d(0) = 1.
    pub artin_charpoly: IntPoly,
}

/// Pieces with strictly increasing weight, none trivial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ArtinTateMotive {
    pieces: Vec<GradedPiece>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    GL(u32),
    SL(u32),
    U(u32),
    /// Sp(2n), stored by its matrix size 2n.
    Sp(u32),
    /// SO(2n+1), stored by its matrix size 2n+1.
    SO(u32),
    Res(u32, Box<GroupSpec>),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::GL(n) | GroupSpec::SL(n) | GroupSpec::U(n) if *n == 0 => {
                Err(Error::invalid("group rank must be positive"))
            }
            GroupSpec::Sp(m) if *m == 0 || m % 2 == 1 => {
                Err(Error::invalid(format!("Sp needs a positive even size, got {m}")))
            }
            GroupSpec::SO(m) if *m < 3 || m % 2 == 0 => {
                Err(Error::invalid(format!("SO needs an odd size >= 3, got {m}")))
            }
            GroupSpec::Res(d, _) if *d == 0 => Err(Error::invalid("restriction degree must be positive")),
            GroupSpec::Res(_, h) => h.validate(),
            GroupSpec::Product(v) => v.iter().try_for_each(|g| g.validate()),
            _ => Ok(()),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let g: GroupSpec = serde_json::from_str(s)?;
        g.validate()?;
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group spec serializes")
    }
}

fn one_minus_u() -> IntPoly {
    IntPoly::from_i64(&[1, -1])
}

impl ArtinTateMotive {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Merges equal weights by multiplying charpolys and drops trivial pieces.
    pub fn from_pieces(pieces: impl IntoIterator<Item = (u32, IntPoly)>) -> Self {
        let mut map: BTreeMap<u32, IntPoly> = BTreeMap::new();
        for (d, c) in pieces {
            assert!(d >= 1, "weight index must be positive");
            assert!(c.coeff(0) == BigInt::from(1), "charpoly must have constant term 1");
            let e = map.entry(d).or_insert_with(IntPoly::one);
            *e = &*e * &c;
        }
        let pieces = map
            .into_iter()
            .filter(|(_, c)| !c.is_one())
            .map(|(d, c)| GradedPiece { weight_index: d, artin_charpoly: c })
            .collect();
        ArtinTateMotive { pieces }
    }

    pub fn pieces(&self) -> &[GradedPiece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.pieces.iter().map(|p| p.artin_charpoly.deg()).sum()
    }

    pub fn piece(&self, d: u32) -> Option<&IntPoly> {
        self.pieces.iter().find(|p| p.weight_index == d).map(|p| &p.artin_charpoly)
    }

    /// Frobenius eigenvalues λ on V_d raised to the m-th power.
    pub fn base_change(&self, m: u32) -> Result<Self> {
        let mut out = Vec::new();
        for p in &self.pieces {
            let w = p.artin_charpoly.reverse();
            let wm = crate::exactalg::root_power_transform(&w, m)?;
            out.push((p.weight_index, wm.reverse()));
        }
        Ok(Self::from_pieces(out))
    }

    /// Π_d c_d(T · Q^{d−1}) for arbitrary expressions T, Q in a common ring.
    pub fn det_substituted(&self, t: &SymPoly, q: &SymPoly) -> SymPoly {
        let n = t.nvars();
        let mut acc = SymPoly::one(n);
        for p in &self.pieces {
            let u = t * &q.pow(p.weight_index - 1);
            let mut val = SymPoly::zero(n);
            for c in p.artin_charpoly.coeffs().iter().rev() {
                val = &(&val * &u) + &SymPoly::constant(n, c.clone());
            }
            acc = &acc * &val;
        }
        acc
    }

    /// Numeric q: det(1 − t·Fr | M) as a polynomial in t.
    pub fn det_at_q(&self, q: &BigInt) -> IntPoly {
        let t = SymPoly::var(0, Var::X);
        let q = SymPoly::constant(0, q.clone());
        self.det_substituted(&t, &q).as_x_poly().expect("no α in a t-polynomial")
    }

    /// One parenthesized factor per weight, e.g. "(1 - t*q)(1 - t*q^3)".
    pub fn fmt_det(&self) -> String {
        if self.pieces.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for p in &self.pieces {
            let det = frobenius_det(&ArtinTateMotive { pieces: vec![p.clone()] });
            out.push_str(&format!("({})", det.fmt_named("t", &|_| "q".to_string())));
        }
        out
    }
}

impl fmt::Display for ArtinTateMotive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_det())
    }
}

pub fn motive_of(spec: &GroupSpec) -> ArtinTateMotive {
    match spec {
        GroupSpec::GL(n) => ArtinTateMotive::from_pieces((1..=*n).map(|d| (d, one_minus_u()))),
        GroupSpec::SL(n) => ArtinTateMotive::from_pieces((2..=*n).map(|d| (d, one_minus_u()))),
        GroupSpec::U(n) => ArtinTateMotive::from_pieces((1..=*n).map(|d| {
            let sign = if d % 2 == 1 { 1 } else { -1 };
            (d, IntPoly::from_i64(&[1, sign]))
        })),
        GroupSpec::Sp(m) | GroupSpec::SO(m) => {
            let n = m / 2;
            ArtinTateMotive::from_pieces((1..=n).map(|i| (2 * i, one_minus_u())))
        }
        GroupSpec::Res(d, h) => induce(&motive_of(h), *d),
        GroupSpec::Product(v) => v
            .iter()
            .fold(ArtinTateMotive::empty(), |acc, g| direct_sum(&acc, &motive_of(g))),
    }
}

pub fn direct_sum(a: &ArtinTateMotive, b: &ArtinTateMotive) -> ArtinTateMotive {
    ArtinTateMotive::from_pieces(
        a.pieces
            .iter()
            .chain(&b.pieces)
            .map(|p| (p.weight_index, p.artin_charpoly.clone())),
    )
}

/// c(u) ↦ c(u^d) on every piece.
pub fn induce(m: &ArtinTateMotive, d: u32) -> ArtinTateMotive {
    assert!(d >= 1, "induction degree must be positive");
    ArtinTateMotive::from_pieces(
        m.pieces
            .iter()
            .map(|p| (p.weight_index, p.artin_charpoly.compose_power(d as usize))),
    )
}

/// Removes one trivial summand from the weight-1 piece.
pub fn quotient_trivial(m: &ArtinTateMotive) -> Result<ArtinTateMotive> {
    let c1 = m
        .piece(1)
        .ok_or_else(|| Error::Precondition("motive has no weight-1 piece".into()))?;
    let q = c1
        .div_exact(&one_minus_u())
        .map_err(|_| Error::Precondition(format!("weight-1 charpoly {} is not divisible by 1 - u", c1.fmt_var("u"))))?;
    let mut pieces: Vec<(u32, IntPoly)> = m
        .pieces
        .iter()
        .filter(|p| p.weight_index != 1)
        .map(|p| (p.weight_index, p.artin_charpoly.clone()))
        .collect();
    pieces.push((1, q));
    Ok(ArtinTateMotive::from_pieces(pieces))
}

/// det(1 − t·Fr_q | M) = Π_d c_d(t·q^{d−1}) as a polynomial with x = t and α_1 = q.
pub fn frobenius_det(m: &ArtinTateMotive) -> SymPoly {
    let t = SymPoly::var(1, Var::X);
    let q = SymPoly::var(1, Var::A(0));
    m.det_substituted(&t, &q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::cyclotomic;

    fn u(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn det_str(m: &ArtinTateMotive) -> String {
        frobenius_det(m).fmt_named("t", &|_| "q".into())
    }

    #[test]
    fn motive_examples() {
        assert_eq!(motive_of(&GroupSpec::SL(2)), ArtinTateMotive::from_pieces([(2, u(&[1, -1]))]));
        let res = motive_of(&GroupSpec::Res(2, Box::new(GroupSpec::U(1))));
        assert_eq!(res, ArtinTateMotive::from_pieces([(1, u(&[1, 0, 1]))]));
        assert!(motive_of(&GroupSpec::Product(vec![])).is_empty());
    }

    #[test]
    fn direct_sum_examples() {
        let sp2 = motive_of(&GroupSpec::Sp(2));
        assert_eq!(direct_sum(&sp2, &sp2), ArtinTateMotive::from_pieces([(2, u(&[1, -2, 1]))]));
        assert_eq!(direct_sum(&sp2, &ArtinTateMotive::empty()), sp2);
        let s = direct_sum(&motive_of(&GroupSpec::Sp(4)), &motive_of(&GroupSpec::U(1)));
        assert_eq!(
            s,
            ArtinTateMotive::from_pieces([(1, u(&[1, 1])), (2, u(&[1, -1])), (4, u(&[1, -1]))])
        );
    }

    #[test]
    fn induce_examples() {
        let u1 = motive_of(&GroupSpec::U(1));
        assert_eq!(induce(&u1, 3), ArtinTateMotive::from_pieces([(1, u(&[1, 0, 0, 1]))]));
        assert_eq!(induce(&u1, 1), u1);
        let gl1 = motive_of(&GroupSpec::GL(1));
        assert_eq!(induce(&gl1, 2), ArtinTateMotive::from_pieces([(1, u(&[1, 0, -1]))]));
    }

    #[test]
    fn quotient_trivial_examples() {
        let m = ArtinTateMotive::from_pieces([(1, &u(&[1, -1]) * &u(&[1, 0, -1]))]);
        assert_eq!(quotient_trivial(&m).unwrap(), ArtinTateMotive::from_pieces([(1, u(&[1, 0, -1]))]));
        let m = ArtinTateMotive::from_pieces([(1, u(&[1, -1]))]);
        assert!(quotient_trivial(&m).unwrap().is_empty());
        let m = ArtinTateMotive::from_pieces([(1, u(&[1, 1]))]);
        assert!(quotient_trivial(&m).is_err());
    }

    #[test]
    fn frobenius_det_examples() {
        assert_eq!(det_str(&motive_of(&GroupSpec::Sp(4))), "1 - t*q - t*q^3 + t^2*q^4");
        assert_eq!(det_str(&ArtinTateMotive::empty()), "1");
        assert_eq!(det_str(&motive_of(&GroupSpec::Res(2, Box::new(GroupSpec::U(1))))), "1 + t^2");
        assert_eq!(motive_of(&GroupSpec::Sp(4)).fmt_det(), "(1 - t*q)(1 - t*q^3)");
    }

    #[test]
    fn json_encoding() {
        let g = GroupSpec::from_json(r#"{"Res":[2,{"U":1}]}"#).unwrap();
        assert_eq!(g, GroupSpec::Res(2, Box::new(GroupSpec::U(1))));
        let p = GroupSpec::from_json(r#"{"Product":[{"Sp":4},{"U":1}]}"#).unwrap();
        assert_eq!(p.to_json(), r#"{"Product":[{"Sp":4},{"U":1}]}"#);
        assert!(GroupSpec::from_json(r#"{"Sp":3}"#).is_err());
        assert!(GroupSpec::from_json(r#"{"GL":0}"#).is_err());
        assert!(GroupSpec::from_json("[").is_err());
    }

    fn all_specs() -> Vec<GroupSpec> {
        use GroupSpec::*;
        let mut v = vec![];
        for n in 1..=5 {
            v.push(GL(n));
            v.push(U(n));
            if n >= 2 {
                v.push(SL(n));
            }
            v.push(Sp(2 * n));
            v.push(SO(2 * n + 1));
        }
        v.push(Res(3, Box::new(U(2))));
        v.push(Product(vec![Sp(4), Res(2, Box::new(GL(2))), U(3)]));
        v
    }

    #[test]
    fn charpolys_factor_into_cyclotomics() {
        for g in all_specs() {
            for p in motive_of(&g).pieces() {
                let mut c = p.artin_charpoly.clone();
                let bound = 2 * (c.deg() as u64).pow(2);
                for k in 1..=bound.max(1) {
                    let phi = cyclotomic(k);
                    while let Ok(q) = c.div_exact(&phi) {
                        c = q;
                    }
                }
                assert!(c.is_constant(), "{g:?} leaves {c}");
            }
        }
    }

    #[test]
    fn gl_is_sl_plus_trivial() {
        for n in 2..=6 {
            let lhs = motive_of(&GroupSpec::GL(n));
            let rhs = direct_sum(&motive_of(&GroupSpec::SL(n)), &motive_of(&GroupSpec::GL(1)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn det_is_multiplicative_and_induction_composes() {
        let specs = all_specs();
        for a in &specs {
            for b in specs.iter().take(6) {
                let (ma, mb) = (motive_of(a), motive_of(b));
                assert_eq!(frobenius_det(&direct_sum(&ma, &mb)), &frobenius_det(&ma) * &frobenius_det(&mb));
            }
            let m = motive_of(a);
            assert_eq!(induce(&induce(&m, 2), 3), induce(&m, 6));
        }
    }

    #[test]
    fn base_change_powers_eigenvalues() {
        let m = motive_of(&GroupSpec::Res(3, Box::new(GroupSpec::U(1))));
        // eigenvalues: cube roots of -1; cubed they are all -1
        assert_eq!(m.base_change(3).unwrap(), ArtinTateMotive::from_pieces([(1, u(&[1, 1]).pow(3))]));
    }
}
