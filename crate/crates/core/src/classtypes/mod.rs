//! Types of semisimple classes in SL_n(F_q) and Sp_2n(F_q), the Artin–Tate
//! motives of their centralizers, and the number of classes of each type.
//!
//! An SL type is a multiset of pairs (d, a): an irreducible factor of degree d
//! occurring with multiplicity a in the characteristic polynomial. An Sp type
//! records the half-multiplicities a± of x ∓ 1, unitary blocks (d, b) for a
//! self-reciprocal irreducible of degree 2d with multiplicity b, and
//! general-linear blocks (e, c) for a pair Q·Q* with deg Q = e and
//! multiplicity c.

pub mod tables;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{
    big_pow, divisors, factorial, falling_factorial, gcd_u64, mobius, prime_power, rat_int, IntPoly,
    RationalFunction, SymPoly, Var,
};
use crate::motive::{direct_sum, induce, motive_of, quotient_trivial, ArtinTateMotive, GroupSpec};
use crate::oracle::{irreducible_monics, FiniteField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(q: u64) -> Self {
        if q % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SLType {
    /// (d, a), sorted.
    pairs: Vec<(u32, u32)>,
}

impl SLType {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() || pairs.iter().any(|&(d, a)| d == 0 || a == 0) {
            return Err(Error::invalid("SL type needs nonempty pairs with positive entries"));
        }
        pairs.sort_unstable();
        Ok(SLType { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn n(&self) -> u32 {
        self.pairs.iter().map(|&(d, a)| d * a).sum()
    }

    /// Number of distinct irreducible factors.
    pub fn r(&self) -> usize {
        self.pairs.len()
    }

    /// Space-separated "d^a", safe inside CSV.
    pub fn label(&self) -> String {
        self.pairs.iter().map(|(d, a)| format!("{d}^{a}")).collect::<Vec<_>>().join(" ")
    }

    /// Π Res_{F_{q^d}/F_q} GL_a modulo the centre's trivial torus.
    pub fn centralizer_motive(&self) -> ArtinTateMotive {
        let gl = self
            .pairs
            .iter()
            .fold(ArtinTateMotive::empty(), |acc, &(d, a)| direct_sum(&acc, &induce(&motive_of(&GroupSpec::GL(a)), d)));
        quotient_trivial(&gl).expect("every GL block contributes a trivial weight-1 summand")
    }
}

impl fmt::Display for SLType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.pairs.iter().map(|(d, a)| format!("({d},{a})")).collect();
        write!(f, "[{}]", body.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpType {
    pub a_plus: u32,
    pub a_minus: u32,
    /// (d, b): self-reciprocal irreducible of degree 2d, multiplicity b.
    pub unitary: Vec<(u32, u32)>,
    /// (e, c): a pair Q, Q* of degree e each, multiplicity c.
    pub gl: Vec<(u32, u32)>,
}

impl SpType {
    /// Canonical form: a_plus ≥ a_minus, since swapping x − 1 and x + 1 is
    /// the same type; blocks sorted.
    pub fn new(a_plus: u32, a_minus: u32, mut unitary: Vec<(u32, u32)>, mut gl: Vec<(u32, u32)>) -> Result<Self> {
        if unitary.iter().chain(&gl).any(|&(d, b)| d == 0 || b == 0) {
            return Err(Error::invalid("Sp type blocks need positive entries"));
        }
        unitary.sort_unstable();
        gl.sort_unstable();
        let (a_plus, a_minus) = if a_plus >= a_minus { (a_plus, a_minus) } else { (a_minus, a_plus) };
        let t = SpType { a_plus, a_minus, unitary, gl };
        if t.half_dim() == 0 {
            return Err(Error::invalid("Sp type of dimension 0"));
        }
        Ok(t)
    }

    pub fn half_dim(&self) -> u32 {
        self.a_plus + self.a_minus + self.unitary.iter().chain(&self.gl).map(|&(d, b)| d * b).sum::<u32>()
    }

    pub fn has_gl_blocks(&self) -> bool {
        !self.gl.is_empty()
    }

    pub fn allowed_for(&self, parity: Parity) -> bool {
        parity == Parity::Odd || self.a_minus == 0
    }

    pub fn centralizer_group(&self) -> GroupSpec {
        let mut parts = Vec::new();
        for a in [self.a_plus, self.a_minus] {
            if a > 0 {
                parts.push(GroupSpec::Sp(2 * a));
            }
        }
        for &(d, b) in &self.unitary {
            parts.push(GroupSpec::Res(d, Box::new(GroupSpec::U(b))));
        }
        for &(e, c) in &self.gl {
            parts.push(GroupSpec::Res(e, Box::new(GroupSpec::GL(c))));
        }
        GroupSpec::Product(parts)
    }

    pub fn centralizer_motive(&self) -> ArtinTateMotive {
        motive_of(&self.centralizer_group())
    }

    /// Space-separated tokens "a{+}:{-}", "u{d}^{b}", "g{e}^{c}", safe inside CSV.
    pub fn label(&self) -> String {
        let mut out = format!("a{}:{}", self.a_plus, self.a_minus);
        for (d, b) in &self.unitary {
            out.push_str(&format!(" u{d}^{b}"));
        }
        for (e, c) in &self.gl {
            out.push_str(&format!(" g{e}^{c}"));
        }
        out
    }
}

impl fmt::Display for SpType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[(u32, u32)]| v.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(",");
        write!(f, "({},{};{};{})", self.a_plus, self.a_minus, list(&self.unitary), list(&self.gl))
    }
}

/// All multisets of `items` (by index, nondecreasing) whose weights sum to `total`.
fn multisets(weights: &[u32], total: u32) -> Vec<Vec<usize>> {
    fn go(weights: &[u32], start: usize, left: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..weights.len() {
            if weights[i] <= left {
                cur.push(i);
                go(weights, i, left - weights[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(weights, 0, total, &mut Vec::new(), &mut out);
    out
}

fn block_items(n: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for d in 1..=n {
        for a in 1..=n / d {
            v.push((d, a));
        }
    }
    v
}

pub fn enumerate_sl_types(n: u32) -> Vec<SLType> {
    let items = block_items(n);
    let weights: Vec<u32> = items.iter().map(|&(d, a)| d * a).collect();
    let mut out: Vec<SLType> = multisets(&weights, n)
        .into_iter()
        .map(|idx| SLType::new(idx.into_iter().map(|i| items[i]).collect()).expect("positive pairs"))
        .collect();
    out.sort();
    out
}

/// Types whose centralizer has no general-linear block; the others have
/// vanishing L-value and are absent from the tables.
pub fn enumerate_sp_types(n: u32, parity: Parity) -> Vec<SpType> {
    enumerate_sp(n, parity, false)
}

/// Every type, general-linear blocks included.
pub fn enumerate_sp_types_all(n: u32, parity: Parity) -> Vec<SpType> {
    enumerate_sp(n, parity, true)
}

fn enumerate_sp(n: u32, parity: Parity, with_gl: bool) -> Vec<SpType> {
    let items = block_items(n);
    let kinds = if with_gl { 2 } else { 1 };
    let mut weights = Vec::new();
    for _ in 0..kinds {
        weights.extend(items.iter().map(|&(d, b)| d * b));
    }
    let mut out = Vec::new();
    for a_plus in 0..=n {
        for a_minus in 0..=a_plus.min(n - a_plus) {
            if parity == Parity::Even && a_minus > 0 {
                continue;
            }
            for idx in multisets(&weights, n - a_plus - a_minus) {
                let (mut u, mut g) = (Vec::new(), Vec::new());
                for i in idx {
                    if i < items.len() {
                        u.push(items[i]);
                    } else {
                        g.push(items[i - items.len()]);
                    }
                }
                if let Ok(t) = SpType::new(a_plus, a_minus, u, g) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// det(1 − Fr)/det(1 − q·Fr) for an SL_n type in closed form: d(1 − q)/(1 − q^n)
/// when the type is a single block (d, n/d), zero otherwise. The variable is x = q.
pub fn ratio_at_one(t: &SLType) -> RationalFunction {
    match t.pairs() {
        [(d, _)] => {
            let n = t.n() as usize;
            let num = IntPoly::from_i64(&[*d as i64, -(*d as i64)]);
            let den = &IntPoly::one() - &IntPoly::monomial(1, n);
            RationalFunction::from_x_ratio(num, den).expect("nonzero denominator")
        }
        _ => RationalFunction::from_poly(SymPoly::zero(0)),
    }
}

/// det(1 − Fr | M) / det(1 − q·Fr | M) as a rational function of x = q,
/// read straight off the motive.
pub fn motive_ratio(m: &ArtinTateMotive) -> RationalFunction {
    let x = SymPoly::var(0, Var::X);
    let num = m.det_substituted(&SymPoly::one(0), &x).as_x_poly().expect("x only");
    let den = m.det_substituted(&x, &x).as_x_poly().expect("x only");
    RationalFunction::from_x_ratio(num, den).expect("det(1 - q Fr) is a nonzero polynomial")
}

fn check_q(q: u64) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::invalid(format!("q = {q} is not a prime power")));
    }
    Ok(())
}

/// N_{n,d}(q): irreducible monic P of degree d over F_q with P(0)^{n/d} = (−1)^n.
pub fn count_sl(n: u32, d: u32, q: u64) -> Result<BigInt> {
    check_q(q)?;
    if d == 0 || n % d != 0 {
        return Err(Error::invalid(format!("degree {d} does not divide {n}")));
    }
    let g = gcd_u64(n as u64, q - 1);
    if d == 1 {
        return Ok(BigInt::from(g));
    }
    if g == 1 {
        let mut acc = BigInt::zero();
        for e in divisors(d as u64) {
            acc += BigInt::from(mobius(e)) * (big_pow(q, d as u64 / e) - 1);
        }
        let den = BigInt::from(d as u64 * (q - 1));
        let (quo, rem) = acc.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::certificate("class count", format!("N_{{{n},{d}}}({q}) is not integral")));
        }
        return Ok(quo);
    }
    // No closed form is claimed here; count by enumeration.
    let field = FiniteField::cached(q)?;
    let target = if n % 2 == 0 { 1 } else { field.minus_one() };
    let mut total = 0usize;
    for c in 1..field.q() {
        if field.pow(c, (n / d) as u64) == target {
            total += irreducible_monics(&field, d as usize, Some(c))?.len();
        }
    }
    Ok(BigInt::from(total))
}

/// S_{2n}(q): self-reciprocal irreducible monic polynomials of degree 2n.
pub fn s_count(two_n: u32, q: u64) -> Result<BigInt> {
    check_q(q)?;
    if two_n == 0 || two_n % 2 == 1 {
        return Err(Error::invalid(format!("degree {two_n} must be positive and even")));
    }
    let v = s_count_poly(two_n / 2, Parity::of(q)).eval_x(&rat_int(q))?;
    integral(v, &format!("S_{two_n}({q})"))
}

fn x_power_sum(terms: impl IntoIterator<Item = (i64, usize)>, den: u64) -> RationalFunction {
    let mut num = IntPoly::zero();
    for (c, k) in terms {
        num = &num + &IntPoly::monomial(c, k);
    }
    RationalFunction::from_x_ratio(num, IntPoly::constant(den)).expect("nonzero")
}

/// S_{2d}(x) for the given parity of q.
fn s_count_poly(d: u32, parity: Parity) -> RationalFunction {
    let d64 = d as u64;
    if parity == Parity::Odd && d.is_power_of_two() {
        return x_power_sum([(1, d as usize), (-1, 0)], 2 * d64);
    }
    let terms = divisors(d64).into_iter().filter(|k| k % 2 == 1).map(|k| (mobius(k), (d64 / k) as usize));
    x_power_sum(terms, 2 * d64)
}

/// Irreducible monic polynomials of degree e with nonzero constant term.
fn irreducible_poly(e: u32) -> RationalFunction {
    let e64 = e as u64;
    let mut rf = x_power_sum(divisors(e64).into_iter().map(|k| (mobius(k), (e64 / k) as usize)), e64);
    if e == 1 {
        rf = &rf - &RationalFunction::constant(0, &BigRational::one());
    }
    rf
}

/// Unordered pairs {Q, Q*} with Q ≠ Q* irreducible monic of degree e.
fn gl_pair_poly(e: u32, parity: Parity) -> RationalFunction {
    let self_reciprocal = match (e, parity) {
        (1, Parity::Odd) => RationalFunction::constant(0, &rat_int(2)),
        (1, Parity::Even) => RationalFunction::constant(0, &BigRational::one()),
        (e, _) if e % 2 == 1 => RationalFunction::from_poly(SymPoly::zero(0)),
        (e, p) => s_count_poly(e / 2, p),
    };
    let half = RationalFunction::constant(0, &BigRational::new(1.into(), 2.into()));
    &(&irreducible_poly(e) - &self_reciprocal) * &half
}

fn falling(s: &RationalFunction, k: u32) -> RationalFunction {
    let mut acc = RationalFunction::constant(0, &BigRational::one());
    for i in 0..k {
        acc = &acc * &(s - &RationalFunction::constant(0, &rat_int(i)));
    }
    acc
}

/// Per distinct degree: (degree, number of blocks with that degree); and
/// Π over distinct (degree, multiplicity) of (count)!.
fn block_statistics(blocks: &[(u32, u32)]) -> (Vec<(u32, u32)>, BigInt) {
    let mut by_degree: Vec<(u32, u32)> = Vec::new();
    let mut by_pair: Vec<((u32, u32), u64)> = Vec::new();
    for &blk in blocks {
        match by_degree.iter_mut().find(|(d, _)| *d == blk.0) {
            Some(e) => e.1 += 1,
            None => by_degree.push((blk.0, 1)),
        }
        match by_pair.iter_mut().find(|(p, _)| *p == blk) {
            Some(e) => e.1 += 1,
            None => by_pair.push((blk, 1)),
        }
    }
    let den = by_pair.iter().fold(BigInt::one(), |acc, (_, k)| acc * factorial(*k));
    (by_degree, den)
}

/// N_τ(x) as a polynomial in x = q with rational coefficients, valid for
/// every q of the given parity.
pub fn count_sp_poly(t: &SpType, parity: Parity) -> Result<RationalFunction> {
    if !t.allowed_for(parity) {
        return Err(Error::invalid(format!("type {t} needs odd q")));
    }
    let mut acc = RationalFunction::constant(0, &BigRational::one());
    let (u_deg, u_den) = block_statistics(&t.unitary);
    for (d, k) in u_deg {
        acc = &acc * &falling(&s_count_poly(d, parity), k);
    }
    let (g_deg, g_den) = block_statistics(&t.gl);
    for (e, k) in g_deg {
        acc = &acc * &falling(&gl_pair_poly(e, parity), k);
    }
    let mut scalar = BigRational::new(BigInt::one(), u_den * g_den);
    if parity == Parity::Odd && t.a_plus != t.a_minus {
        scalar *= rat_int(2);
    }
    Ok(&acc * &RationalFunction::constant(0, &scalar))
}

fn integral(v: BigRational, what: &str) -> Result<BigInt> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::certificate("class count", format!("{what} = {v} is not a nonnegative integer")));
    }
    Ok(v.to_integer())
}

/// N_τ(q) as an exact rational, checked to be a nonnegative integer.
pub fn count_sp(t: &SpType, q: u64) -> Result<BigRational> {
    check_q(q)?;
    let parity = Parity::of(q);
    if !t.allowed_for(parity) {
        return Err(Error::invalid(format!("type {t} needs odd q")));
    }
    let pool = |d: u32, gl: bool| -> Result<BigRational> {
        if !gl {
            return Ok(BigRational::from_integer(s_count(2 * d, q)?));
        }
        gl_pair_poly(d, parity).eval_x(&rat_int(q))
    };
    let mut acc = BigRational::one();
    for (blocks, gl) in [(&t.unitary, false), (&t.gl, true)] {
        let (by_degree, den) = block_statistics(blocks);
        for (d, k) in by_degree {
            acc *= falling_factorial(&pool(d, gl)?, k as u64);
        }
        acc /= BigRational::from_integer(den);
    }
    if parity == Parity::Odd && t.a_plus != t.a_minus {
        acc *= rat_int(2);
    }
    integral(acc.clone(), &format!("N_{t}({q})"))?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::motive::frobenius_det;

    fn sl(p: &[(u32, u32)]) -> SLType {
        SLType::new(p.to_vec()).unwrap()
    }

    fn sp(a: u32, b: u32, u: &[(u32, u32)], g: &[(u32, u32)]) -> SpType {
        SpType::new(a, b, u.to_vec(), g.to_vec()).unwrap()
    }

    fn det_str(m: &ArtinTateMotive) -> String {
        frobenius_det(m).fmt_named("t", &|_| "q".into())
    }

    #[test]
    fn sl_enumeration_counts() {
        let labels: Vec<String> = enumerate_sl_types(2).iter().map(|t| t.to_string()).collect();
        assert_eq!(labels, ["[(1,1),(1,1)]", "[(1,2)]", "[(2,1)]"]);
        // Coefficients of Π_k (1 − x^k)^{−τ(k)}, τ = number of divisors.
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_sl_types(n).len()).collect();
        assert_eq!(counts, [1, 3, 5, 11, 17, 34]);
    }

    #[test]
    fn sp_enumeration_matches_table_sizes() {
        assert_eq!(enumerate_sp_types(2, Parity::Odd).len(), 6);
        assert_eq!(enumerate_sp_types(2, Parity::Even).len(), 5);
        assert_eq!(enumerate_sp_types(3, Parity::Odd).len(), 12);
        assert_eq!(enumerate_sp_types(3, Parity::Even).len(), 10);
        assert!(enumerate_sp_types_all(2, Parity::Odd).iter().any(|t| t.has_gl_blocks()));
        assert!(enumerate_sp_types(3, Parity::Odd).iter().all(|t| !t.has_gl_blocks()));
    }

    #[test]
    fn canonical_sp_type() {
        assert_eq!(sp(0, 1, &[], &[]), sp(1, 0, &[], &[]));
        assert!(SpType::new(0, 0, vec![], vec![]).is_err());
        assert_eq!(sp(1, 0, &[(2, 1), (1, 1)], &[]).to_string(), "(1,0;(1,1),(2,1);)");
        assert_eq!(sp(1, 0, &[(1, 1)], &[(2, 1)]).label(), "a1:0 u1^1 g2^1");
    }

    #[test]
    fn centralizer_dets() {
        assert_eq!(det_str(&sl(&[(2, 1)]).centralizer_motive()), "1 + t");
        assert_eq!(det_str(&sp(0, 0, &[(2, 1)], &[]).centralizer_motive()), "1 + t^2");
        assert_eq!(det_str(&sp(2, 0, &[], &[]).centralizer_motive()), "1 - t*q - t*q^3 + t^2*q^4");
        assert_eq!(det_str(&sp(0, 0, &[(1, 1)], &[(1, 1)]).centralizer_motive()), "1 - t^2");
    }

    #[test]
    fn ratio_closed_form_matches_motive() {
        for n in 1..=6 {
            for t in enumerate_sl_types(n) {
                assert_eq!(ratio_at_one(&t), motive_ratio(&t.centralizer_motive()), "{t}");
            }
        }
        let two = RationalFunction::from_x_ratio(IntPoly::from_i64(&[2, -2]), IntPoly::from_i64(&[1, 0, -1])).unwrap();
        assert_eq!(ratio_at_one(&sl(&[(2, 1)])), two);
        assert!(ratio_at_one(&sl(&[(1, 1), (1, 1)])).is_zero());
    }

    #[test]
    fn count_sl_examples() {
        assert_eq!(count_sl(2, 2, 2).unwrap(), BigInt::from(1));
        assert_eq!(count_sl(3, 1, 7).unwrap(), BigInt::from(3));
        assert_eq!(count_sl(2, 2, 3).unwrap(), BigInt::from(1));
        assert!(count_sl(4, 3, 5).is_err());
        // n N_{n,n}(q) = (q^n − 1)/(q − 1) − #μ_n(F_q) for prime n.
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
            for l in [2u32, 3, 5] {
                let mu = gcd_u64(l as u64, q - 1);
                let expect = ((q.pow(l) - 1) / (q - 1) - mu) / l as u64;
                assert_eq!(count_sl(l, l, q).unwrap(), BigInt::from(expect), "l={l} q={q}");
            }
        }
    }

    /// Counts via norms: α ∈ F_{q^e} has norm N_e(α)^{d/e} down from
    /// F_{q^d}, and N_e is onto F_q^* with fibres of size (q^e − 1)/(q − 1).
    fn count_sl_by_norms(n: u64, d: u64, q: u64) -> u64 {
        let mut exact = 0i64;
        for e in divisors(d) {
            let fibre = (q.pow(e as u32) - 1) / (q - 1);
            let f = fibre * gcd_u64(n / e, q - 1);
            exact += mobius(d / e) * f as i64;
        }
        exact as u64 / d
    }

    #[test]
    fn class_counts_sum_to_one() {
        for n in 1..=6u32 {
            for q in [2u64, 3, 4, 5, 7, 8, 9] {
                let mut acc = BigRational::zero();
                for d in divisors(n as u64) {
                    let d = d as u32;
                    let count = count_sl(n, d, q).unwrap();
                    assert_eq!(count, BigInt::from(count_sl_by_norms(n as u64, d as u64, q)), "n={n} d={d} q={q}");
                    let t = sl(&[(d, n / d)]);
                    acc += BigRational::from_integer(count) * ratio_at_one(&t).eval_x(&rat_int(q)).unwrap();
                }
                assert_eq!(acc, BigRational::one(), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn s_count_examples() {
        assert_eq!(s_count(2, 3).unwrap(), BigInt::from(1));
        assert_eq!(s_count(4, 3).unwrap(), BigInt::from(2));
        assert_eq!(s_count(4, 2).unwrap(), BigInt::from(1));
        assert_eq!(s_count(4, 5).unwrap(), BigInt::from(6));
        assert!(s_count(3, 3).is_err());
    }

    #[test]
    fn count_sp_examples() {
        assert_eq!(count_sp(&sp(0, 0, &[(1, 1), (1, 1)], &[]), 3).unwrap(), rat(0, 1));
        assert_eq!(count_sp(&sp(0, 0, &[(1, 1), (1, 1), (1, 1)], &[]), 9).unwrap(), rat(4, 1));
        assert_eq!(count_sp(&sp(0, 0, &[(3, 1)], &[]), 3).unwrap(), rat(4, 1));
        assert_eq!(count_sp(&sp(2, 0, &[], &[]), 4).unwrap(), rat(1, 1));
        assert!(count_sp(&sp(1, 1, &[], &[]), 4).is_err());
    }

    #[test]
    fn symbolic_count_matches_numeric() {
        for n in 1..=4 {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 16, 25] {
                let parity = Parity::of(q);
                let mut total = BigRational::zero();
                for t in enumerate_sp_types_all(n, parity) {
                    let numeric = count_sp(&t, q).unwrap();
                    assert_eq!(count_sp_poly(&t, parity).unwrap().eval_x(&rat_int(q)).unwrap(), numeric, "{t} q={q}");
                    total += numeric;
                }
                // Monic palindromic polynomials of degree 2n with constant term 1.
                assert_eq!(total, rat_int(q.pow(n)), "n={n} q={q}");
            }
        }
    }
}
