//! L_{S,T}(M) at s = 0, the polynomial Z_q(t, J) whose value at t = q is
//! that L-value, and the multiplicity sums built from them.
//!
//! Counts produced here are conditional: they equal cuspidal multiplicity
//! sums only under the global conjectures on Euler–Poincaré functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{big_pow, gcd_u64, reduce_modulo_roots, resultant, root_power_transform, IntPoly, SymPoly, Var};
use crate::geometry::{h0_det_at_q, CurveDatum};
use crate::lefschetz::{CyclotomicRational, LefschetzFunction};
use crate::motive::{motive_of, ArtinTateMotive, GroupSpec};

/// F₁·F₂·F₃ with q numeric. F₂ and F₃ divide as polynomials in t before
/// evaluating, so a trivial summand of M makes F₂ vanish rather than 0/0.
pub fn l_value(m: &ArtinTateMotive, c: &CurveDatum) -> Result<BigRational> {
    if c.s_degrees.is_empty() {
        return Err(Error::Precondition("S must be nonempty".into()));
    }
    let q = BigInt::from(c.q);
    let d = m.det_at_q(&q);
    let f1 = resultant(&c.j_x_poly(), &d)?;
    let s_part = h0_det_at_q(&c.s_degrees, m, &q)?
        .div_exact(&d)
        .map_err(|_| Error::inexact("H0(S) determinant not divisible by det(1 - tFr|M)"))?;
    let f2 = s_part.eval(&BigInt::one());
    let f3 = if c.t_degrees.is_empty() {
        let den = d.eval(&q);
        assert!(!den.is_zero(), "det(1 - qFr|M) vanishes");
        BigRational::new(BigInt::one(), den)
    } else {
        let t_part = h0_det_at_q(&c.t_degrees, m, &q)?
            .div_exact(&d)
            .map_err(|_| Error::inexact("H0(T) determinant not divisible by det(1 - tFr|M)"))?;
        BigRational::from_integer(t_part.eval(&q))
    };
    Ok(BigRational::from_integer(f1 * f2) * f3)
}

/// A block of J-variables standing for the roots of a monic integer polynomial.
#[derive(Clone, Debug)]
pub struct JBlock {
    pub label: String,
    pub vars: Vec<usize>,
    pub minimal_poly: IntPoly,
}

/// Z as a product of factors 1 − a·δ·x^e over J-blocks, where a runs over
/// J_X ∪ J_S − {1} (e = d − 1) or J_T − {1} (e = d), and δ over the
/// eigenvalues of Fr on V_d.
#[derive(Clone, Debug)]
pub struct ZPolynomial {
    q: u64,
    nvars: usize,
    blocks: Vec<JBlock>,
    factors: Vec<SymPoly>,
}

impl ZPolynomial {
    pub fn new(m: &ArtinTateMotive, c: &CurveDatum) -> Result<Self> {
        if c.t_degrees.is_empty() {
            return Err(Error::NotPolynomial("T is empty: Z is rational, not polynomial".into()));
        }
        if c.s_degrees.is_empty() {
            return Err(Error::Precondition("S must be nonempty".into()));
        }
        let line = IntPoly::from_i64(&[-1, 1]);
        let places = |degs: &[u32]| {
            degs.iter()
                .fold(IntPoly::one(), |acc, &k| &acc * &IntPoly::x_pow_minus_one(k as usize))
                .div_exact(&line)
        };
        let w_a = &c.j_x_poly() * &places(&c.s_degrees)?;
        let w_b = places(&c.t_degrees)?;
        let mut blocks = Vec::new();
        let mut next = 0usize;
        let mut push = |label: String, w: IntPoly, blocks: &mut Vec<JBlock>| {
            let vars: Vec<usize> = (next..next + w.deg()).collect();
            next += w.deg();
            blocks.push(JBlock { label, vars, minimal_poly: w });
            blocks.len() - 1
        };
        let a = push("J_X+J_S-1".into(), w_a, &mut blocks);
        let b = push("J_T-1".into(), w_b, &mut blocks);
        let mut deltas = Vec::new();
        for p in m.pieces() {
            let i = push(format!("J_{}", p.weight_index), p.artin_charpoly.reverse(), &mut blocks);
            deltas.push((p.weight_index, i));
        }
        let nvars = next;
        let mut factors = Vec::new();
        for (d, i) in deltas {
            for &delta in &blocks[i].vars {
                let dv = SymPoly::var(nvars, Var::A(delta));
                for (blk, e) in [(a, d - 1), (b, d)] {
                    for &v in &blocks[blk].vars {
                        let u = &(&SymPoly::var(nvars, Var::A(v)) * &dv) * &SymPoly::var(nvars, Var::X).pow(e);
                        factors.push(&SymPoly::one(nvars) - &u);
                    }
                }
            }
        }
        Ok(ZPolynomial { q: c.q, nvars, blocks, factors })
    }

    /// Number of J-variables.
    pub fn arity(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[JBlock] {
        &self.blocks
    }

    /// Fully expanded polynomial in (x, J).
    pub fn expand(&self) -> SymPoly {
        self.factors.iter().fold(SymPoly::one(self.nvars), |acc, f| &acc * f)
    }

    /// Z(x, J^m) as a polynomial in x: every block is evaluated at the m-th
    /// powers of its roots.
    pub fn reduce(&self, m: u32) -> Result<IntPoly> {
        self.reduce_with(m, |f| f.clone())?
            .as_x_poly()
            .ok_or_else(|| Error::NotSymmetric("Z depends on J after reduction".into()))
    }

    /// Z(q^m, J^m).
    pub fn evaluate(&self, m: u32) -> Result<BigInt> {
        let x = big_pow(self.q, m as u64);
        self.reduce_with(m, |f| f.subst_x(&x))?
            .as_constant()
            .ok_or_else(|| Error::NotSymmetric("Z depends on J after reduction".into()))
    }

    fn reduce_with(&self, m: u32, prep: impl Fn(&SymPoly) -> SymPoly) -> Result<SymPoly> {
        let mins: Vec<IntPoly> = self
            .blocks
            .iter()
            .map(|b| root_power_transform(&b.minimal_poly, m))
            .collect::<Result<_>>()?;
        let mut acc = SymPoly::one(self.nvars);
        for f in &self.factors {
            acc = &acc * &prep(f);
            for (b, w) in self.blocks.iter().zip(&mins) {
                acc = reduce_modulo_roots(&acc, &b.vars, w)?;
            }
        }
        Ok(acc)
    }
}

/// Z as a polynomial in x alone (`symbolic_j` = 0) or in x and all
/// J-variables (`symbolic_j` equal to the J arity).
pub fn z_polynomial(m: &ArtinTateMotive, c: &CurveDatum, symbolic_j: usize) -> Result<SymPoly> {
    let z = ZPolynomial::new(m, c)?;
    if symbolic_j == 0 {
        Ok(SymPoly::from_x_poly(0, z.reduce(1)?))
    } else if symbolic_j == z.arity() {
        Ok(z.expand())
    } else {
        Err(Error::invalid(format!(
            "symbolic J arity must be 0 or {}, got {symbolic_j}",
            z.arity()
        )))
    }
}

/// #Z(F_{q^k}) as a function of q^k.
type CenterOrder = Box<dyn Fn(u64) -> u64>;

/// Rank and center order of SL_n or Sp_2n.
fn rank_and_center(spec: &GroupSpec) -> Result<(u32, CenterOrder)> {
    match *spec {
        GroupSpec::SL(n) if n >= 1 => Ok((n - 1, Box::new(move |f| gcd_u64(n as u64, f - 1)))),
        GroupSpec::Sp(m) if m >= 2 && m % 2 == 0 => Ok((m / 2, Box::new(|f| gcd_u64(2, f - 1)))),
        _ => Err(Error::invalid(format!("multiplicity sums need SL(n) or Sp(2n), got {spec:?}"))),
    }
}

/// (−1)^{(#S+#T)·r}·L_{S,T}(M_G), times Π_{v∈T} #Z(F_{q^deg v})·(q^deg v − 1)
/// when the central character is not fixed.
pub fn multiplicity_sum(spec: &GroupSpec, c: &CurveDatum, fixed_chi: bool) -> Result<BigRational> {
    if c.t_degrees.is_empty() {
        return Err(Error::Precondition("T must be nonempty; use the class sum when T is empty".into()));
    }
    let (r, center) = rank_and_center(spec)?;
    let mut v = l_value(&motive_of(spec), c)?;
    if ((c.s_degrees.len() + c.t_degrees.len()) as u64 * r as u64) % 2 == 1 {
        v = -v;
    }
    if !fixed_chi {
        for &k in &c.t_degrees {
            let f = c
                .q
                .checked_pow(k)
                .ok_or_else(|| Error::invalid("q^deg v overflows"))?;
            v *= BigRational::from_integer(BigInt::from(center(f)) * BigInt::from(f - 1));
        }
    }
    Ok(v)
}

/// Finds f = Σ n_i b_i^m with f(m) = values[m − 1], solving on the first
/// |bases| points and checking all the others.
pub fn lefschetz_fit(values: &[BigRational], bases: &[CyclotomicRational]) -> Result<LefschetzFunction> {
    let k = bases.len();
    if values.len() < 2 * k {
        return Err(Error::Precondition(format!(
            "{} values cannot certify a fit over {k} bases; need at least {}",
            values.len(),
            2 * k
        )));
    }
    if let Some(i) = bases.iter().position(|b| b.is_zero()) {
        return Err(Error::Singular(format!("base {i} is zero")));
    }
    for i in 0..k {
        for j in 0..i {
            if bases[i] == bases[j] {
                return Err(Error::Singular(format!("bases {j} and {i} coincide: {}", bases[i])));
            }
        }
    }
    // y_i = n_i b_i solves Σ_i y_i b_i^j = values[j]; with P(z) = Π (z − b_i),
    // y_i = Σ_j [z^j](P(z)/(z − b_i)) values[j] / P'(b_i).
    let one = CyclotomicRational::one();
    let mut master = vec![one.clone()];
    for b in bases {
        let mut next = vec![CyclotomicRational::zero(); master.len() + 1];
        for (j, c) in master.iter().enumerate() {
            next[j + 1] = &next[j + 1] + c;
            next[j] = &next[j] - &(c * b);
        }
        master = next;
    }
    let vals: Vec<CyclotomicRational> = values.iter().map(CyclotomicRational::from_rational).collect();
    let mut terms = Vec::with_capacity(k);
    for (i, b) in bases.iter().enumerate() {
        // synthetic division of P by (z − b), highest coefficient first
        let mut quot = vec![CyclotomicRational::zero(); k];
        let mut carry = CyclotomicRational::zero();
        for j in (0..k).rev() {
            carry = &master[j + 1] + &(&carry * b);
            quot[j] = carry.clone();
        }
        let mut deriv = CyclotomicRational::zero();
        for j in (0..k).rev() {
            deriv = &(&deriv * b) + &quot[j];
        }
        let num = quot
            .iter()
            .zip(&vals)
            .fold(CyclotomicRational::zero(), |acc, (l, v)| &acc + &(l * v));
        let denom = (&deriv * b)
            .inverse()
            .map_err(|_| Error::Singular(format!("base {i} makes the system singular")))?;
        terms.push((&num * &denom, b.clone()));
    }
    let f = LefschetzFunction::from_terms(terms);
    for (m, v) in values.iter().enumerate() {
        let got = f.evaluate(m as u64 + 1);
        if got != CyclotomicRational::from_rational(v) {
            return Err(Error::certificate(
                "lefschetz_fit",
                format!("fit {f} gives {got} at m = {} but the value is {}", m + 1, crate::exactalg::fmt_rational(v)),
            ));
        }
    }
    Ok(f)
}

/// Integer sequence as fit input.
pub fn integer_values(v: impl IntoIterator<Item = BigInt>) -> Vec<BigRational> {
    v.into_iter().map(BigRational::from_integer).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};

    /// det(1 − A) for a rational matrix, by Gaussian elimination.
    fn det_one_minus(a: &[Vec<BigRational>]) -> BigRational {
        let n = a.len();
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { rat_int(1) } else { rat_int(0) } - a[i][j].clone()).collect())
            .collect();
        let mut det = rat_int(1);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else { return rat_int(0) };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det *= m[col][col].clone();
            for r in col + 1..n {
                let f = m[r][col].clone() / m[col][col].clone();
                for c in col..n {
                    let t = f.clone() * m[col][c].clone();
                    m[r][c] -= t;
                }
            }
        }
        det
    }

    fn companion(w: &IntPoly) -> Vec<Vec<BigRational>> {
        let n = w.deg();
        let mut c = vec![vec![rat_int(0); n]; n];
        for i in 1..n {
            c[i][i - 1] = rat_int(1);
        }
        for i in 0..n {
            c[i][n - 1] = BigRational::from_integer(-w.coeff(i));
        }
        c
    }

    fn kron(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        let (n, m) = (a.len(), b.len());
        let mut out = vec![vec![rat_int(0); n * m]; n * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out[i * m + k][j * m + l] = a[i][j].clone() * b[k][l].clone();
                    }
                }
            }
        }
        out
    }

    fn block_diag(blocks: &[Vec<Vec<BigRational>>]) -> Vec<Vec<BigRational>> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut out = vec![vec![rat_int(0); n]; n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.len() {
                for j in 0..b.len() {
                    out[off + i][off + j] = b[i][j].clone();
                }
            }
            off += b.len();
        }
        out
    }

    fn scaled(a: &[Vec<BigRational>], s: &BigRational) -> Vec<Vec<BigRational>> {
        a.iter().map(|r| r.iter().map(|x| x.clone() * s.clone()).collect()).collect()
    }

    /// Independent L-value: Frobenius as explicit matrices on H¹(X), on
    /// H⁰(S) and H⁰(T) with the trivial line removed, and on M; every factor
    /// is det(1 − Frobenius) of a Kronecker product.
    fn l_value_by_matrices(m: &ArtinTateMotive, c: &CurveDatum) -> BigRational {
        let q = rat_int(c.q);
        let fr_m = block_diag(
            &m.pieces()
                .iter()
                .map(|p| scaled(&companion(&p.artin_charpoly.reverse()), &num_traits::pow(q.clone(), p.weight_index as usize - 1)))
                .collect::<Vec<_>>(),
        );
        let reduced_places = |degs: &[u32]| {
            let w = degs
                .iter()
                .fold(IntPoly::one(), |a, &k| &a * &IntPoly::x_pow_minus_one(k as usize))
                .div_exact(&IntPoly::from_i64(&[-1, 1]))
                .unwrap();
            companion(&w)
        };
        let det_or_one = |a: &[Vec<BigRational>]| if a.is_empty() { rat_int(1) } else { det_one_minus(a) };
        let f1 = if c.genus() == 0 { rat_int(1) } else { det_or_one(&kron(&companion(&c.j_x_poly()), &fr_m)) };
        let f2 = det_or_one(&kron(&reduced_places(&c.s_degrees), &fr_m));
        let f3 = if c.t_degrees.is_empty() {
            rat_int(1) / det_or_one(&scaled(&fr_m, &q))
        } else {
            det_or_one(&scaled(&kron(&reduced_places(&c.t_degrees), &fr_m), &q))
        };
        f1 * f2 * f3
    }

    fn groups() -> Vec<GroupSpec> {
        let mut v: Vec<GroupSpec> = (2..=5).map(GroupSpec::SL).collect();
        v.extend([GroupSpec::Sp(4), GroupSpec::Sp(6), GroupSpec::GL(3), GroupSpec::SO(5)]);
        v.push(GroupSpec::Res(2, Box::new(GroupSpec::U(2))));
        v.push(GroupSpec::Res(3, Box::new(GroupSpec::SL(2))));
        v.push(GroupSpec::U(3));
        v
    }

    fn curves() -> Vec<CurveDatum> {
        vec![
            CurveDatum::projective_line(3, &[1], &[1]).unwrap(),
            CurveDatum::projective_line(2, &[1, 1], &[]).unwrap(),
            CurveDatum::projective_line(5, &[1, 2], &[3]).unwrap(),
            CurveDatum::elliptic(2, 1, &[1], &[1]).unwrap(),
            CurveDatum::elliptic(3, -2, &[2], &[]).unwrap(),
            CurveDatum::elliptic(2, 0, &[1, 1], &[2]).unwrap(),
        ]
    }

    #[test]
    fn trivial_l_value_on_the_line() {
        for q in [2, 3, 4, 5] {
            let c = CurveDatum::projective_line(q, &[1], &[1]).unwrap();
            for g in groups() {
                assert_eq!(l_value(&motive_of(&g), &c).unwrap(), rat_int(1), "{g:?} q = {q}");
            }
        }
    }

    #[test]
    fn central_sp4_value() {
        let c = CurveDatum::projective_line(3, &[1, 1], &[]).unwrap();
        assert_eq!(l_value(&motive_of(&GroupSpec::Sp(4)), &c).unwrap(), rat(13, 160));
    }

    #[test]
    fn general_linear_piece_vanishes_without_t() {
        let c = CurveDatum::projective_line(3, &[1, 1], &[]).unwrap();
        let res = motive_of(&GroupSpec::Res(2, Box::new(GroupSpec::GL(1))));
        assert!(l_value(&res, &c).unwrap().is_zero());
        assert!(l_value(&motive_of(&GroupSpec::GL(2)), &c).unwrap().is_zero());
    }

    #[test]
    fn l_value_matches_matrix_oracle() {
        for c in curves() {
            for g in groups() {
                let m = motive_of(&g);
                let expected = l_value_by_matrices(&m, &c);
                assert_eq!(l_value(&m, &c).unwrap(), expected, "{g:?} on {}", c.to_json());
            }
        }
    }

    #[test]
    fn z_examples() {
        let c = CurveDatum::projective_line(3, &[1], &[1]).unwrap();
        let z = z_polynomial(&motive_of(&GroupSpec::SL(2)), &c, 0).unwrap();
        assert!(z.is_one());
        assert!(z_polynomial(&ArtinTateMotive::empty(), &c, 0).unwrap().is_one());
        let no_t = CurveDatum::projective_line(3, &[1, 1], &[]).unwrap();
        assert!(matches!(
            z_polynomial(&motive_of(&GroupSpec::SL(2)), &no_t, 0),
            Err(Error::NotPolynomial(_))
        ));
    }

    #[test]
    fn z_at_q_is_the_l_value() {
        for c in curves().into_iter().filter(|c| !c.t_degrees.is_empty()) {
            for g in groups() {
                let m = motive_of(&g);
                let z = z_polynomial(&m, &c, 0).unwrap().as_x_poly().unwrap();
                let at_q = z.eval(&BigInt::from(c.q));
                assert_eq!(rat_int(at_q), l_value(&m, &c).unwrap(), "{g:?}");
            }
        }
    }

    #[test]
    fn symbolic_z_reduces_to_numeric_z() {
        let c = CurveDatum::elliptic(2, 1, &[1, 1], &[1, 2]).unwrap();
        let m = motive_of(&GroupSpec::Sp(4));
        let z = ZPolynomial::new(&m, &c).unwrap();
        let mut sym = z_polynomial(&m, &c, z.arity()).unwrap();
        for b in z.blocks() {
            sym = crate::exactalg::reduce_symmetric(&sym, &b.vars, &b.minimal_poly).unwrap();
        }
        assert_eq!(sym.as_x_poly().unwrap(), z.reduce(1).unwrap());
        assert!(z_polynomial(&m, &c, 1).is_err());
    }

    #[test]
    fn base_change_law() {
        for c in curves().into_iter().filter(|c| !c.t_degrees.is_empty()) {
            for g in [GroupSpec::SL(3), GroupSpec::Sp(4), GroupSpec::Res(2, Box::new(GroupSpec::U(2)))] {
                let m = motive_of(&g);
                let z = ZPolynomial::new(&m, &c).unwrap();
                for k in 1..=4 {
                    let direct = l_value(&m.base_change(k).unwrap(), &c.base_change(k).unwrap()).unwrap();
                    assert_eq!(rat_int(z.evaluate(k).unwrap()), direct, "{g:?} m = {k}");
                }
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        let c = CurveDatum::projective_line(3, &[1], &[1]).unwrap();
        assert_eq!(multiplicity_sum(&GroupSpec::SL(2), &c, true).unwrap(), rat_int(1));
        assert_eq!(multiplicity_sum(&GroupSpec::Sp(4), &c, true).unwrap(), rat_int(1));
        assert_eq!(multiplicity_sum(&GroupSpec::SL(2), &c, false).unwrap(), rat_int(4));
        let c4 = CurveDatum::projective_line(4, &[1], &[1]).unwrap();
        assert_eq!(multiplicity_sum(&GroupSpec::SL(3), &c4, false).unwrap(), rat_int(9));
        let no_t = CurveDatum::projective_line(3, &[1], &[]).unwrap();
        assert!(multiplicity_sum(&GroupSpec::SL(2), &no_t, true).is_err());
        assert!(multiplicity_sum(&GroupSpec::GL(2), &c, true).is_err());
    }

    #[test]
    fn sign_follows_place_count_and_rank() {
        let c = CurveDatum::projective_line(2, &[1, 1], &[1]).unwrap();
        let l = l_value(&motive_of(&GroupSpec::SL(2)), &c).unwrap();
        assert_eq!(multiplicity_sum(&GroupSpec::SL(2), &c, true).unwrap(), -l);
    }

    fn z(n: u64, k: u64) -> CyclotomicRational {
        CyclotomicRational::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn fit_examples() {
        let alt: Vec<BigRational> = (1..=8).map(|m| rat_int(if m % 2 == 0 { 2 } else { 0 })).collect();
        let f = lefschetz_fit(&alt, &[CyclotomicRational::one(), z(2, 1)]).unwrap();
        assert!(f.equals(&LefschetzFunction::chi(2).unwrap()));
        let zeros = vec![rat_int(0); 6];
        assert!(lefschetz_fit(&zeros, &[CyclotomicRational::one(), z(3, 1)]).unwrap().is_zero());
        let pow3: Vec<BigRational> = (1..=4).map(|m| rat_int(3i64.pow(m))).collect();
        let f = lefschetz_fit(&pow3, &[CyclotomicRational::from_int(3)]).unwrap();
        assert!(f.equals(&LefschetzFunction::single_base(CyclotomicRational::one(), CyclotomicRational::from_int(3))));
    }

    #[test]
    fn fit_failures() {
        let v = vec![rat_int(1); 4];
        assert!(matches!(lefschetz_fit(&v, &[z(2, 1), z(2, 1)]), Err(Error::Singular(_))));
        assert!(matches!(lefschetz_fit(&v[..3], &[z(2, 1), z(3, 1)]), Err(Error::Precondition(_))));
        let squares: Vec<BigRational> = (1..=6i64).map(|m| rat_int(m * m)).collect();
        assert!(matches!(
            lefschetz_fit(&squares, &[CyclotomicRational::one(), CyclotomicRational::from_int(2)]),
            Err(Error::CertificateFailure { .. })
        ));
    }

    #[test]
    fn fit_recovers_cyclotomic_coefficients() {
        // gcd(3, 2^m − 1)·(2^m − 1) has period 2 in its gcd factor
        let values: Vec<BigRational> = (1..=12u32)
            .map(|m| {
                let f = 2u64.pow(m) - 1;
                rat_int(gcd_u64(3, f) * f)
            })
            .collect();
        let mut bases = Vec::new();
        for o in [1u64, 2] {
            for k in (0..o).filter(|&k| gcd_u64(k, o) == 1) {
                for p in [1i64, 2] {
                    bases.push(&z(o, k) * &CyclotomicRational::from_int(p));
                }
            }
        }
        let f = lefschetz_fit(&values, &bases).unwrap();
        assert!(f.has_integer_coefficients());
        for m in 1..=30u32 {
            let g = 2u64.pow(m) - 1;
            assert_eq!(f.evaluate(m as u64), CyclotomicRational::from_int(gcd_u64(3, g) * g));
        }
    }
}
