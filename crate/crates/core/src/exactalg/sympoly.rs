use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::intpoly::{join_terms, IntPoly};
use crate::error::{Error, Result};

/// A variable of a [`SymPoly`]: the distinguished `x` or the i-th indeterminate α_{i+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    A(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => f.write_str("x"),
            Var::A(i) => write!(f, "a{}", i + 1),
        }
    }
}

/// Sparse polynomial in x, α_1..α_r over ℤ. Keys are α-exponent vectors of
/// length r; each value is the dense coefficient polynomial in x.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, IntPoly>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_x_poly(nvars, IntPoly::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::from_x_poly(nvars, IntPoly::constant(c))
    }

    pub fn from_x_poly(nvars: usize, p: IntPoly) -> Self {
        let mut s = Self::zero(nvars);
        if !p.is_zero() {
            s.terms.insert(vec![0; nvars], p);
        }
        s
    }

    pub fn var(nvars: usize, v: Var) -> Self {
        match v {
            Var::X => Self::from_x_poly(nvars, IntPoly::x()),
            Var::A(i) => {
                assert!(i < nvars, "variable index out of range");
                let mut key = vec![0; nvars];
                key[i] = 1;
                Self::from_term(nvars, key, IntPoly::one())
            }
        }
    }

    /// c · x^xe · Π α_i^{alpha[i]}
    pub fn monomial(nvars: usize, c: impl Into<BigInt>, xe: usize, alpha: &[u32]) -> Self {
        assert_eq!(alpha.len(), nvars);
        Self::from_term(nvars, alpha.to_vec(), IntPoly::monomial(c, xe))
    }

    fn from_term(nvars: usize, key: Vec<u32>, p: IntPoly) -> Self {
        let mut s = Self::zero(nvars);
        if !p.is_zero() {
            s.terms.insert(key, p);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_x_poly().is_some_and(|p| p.is_one())
    }

    /// Number of monomials counted over all variables.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(|p| p.coeffs().iter().filter(|c| !c.is_zero()).count()).sum()
    }

    /// (α-exponents, coefficient polynomial in x).
    pub fn blocks(&self) -> impl Iterator<Item = (&[u32], &IntPoly)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// (x-exponent, α-exponents, coefficient) for every nonzero monomial.
    pub fn monomials(&self) -> impl Iterator<Item = (usize, &[u32], &BigInt)> {
        self.terms.iter().flat_map(|(k, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (i, k.as_slice(), c))
        })
    }

    /// The polynomial as a pure x-polynomial, if no α occurs.
    pub fn as_x_poly(&self) -> Option<IntPoly> {
        match self.terms.len() {
            0 => Some(IntPoly::zero()),
            1 => {
                let (k, p) = self.terms.iter().next().unwrap();
                k.iter().all(|&e| e == 0).then(|| p.clone())
            }
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        self.as_x_poly().filter(|p| p.is_constant()).map(|p| p.coeff(0))
    }

    pub fn degree_in(&self, v: Var) -> Option<usize> {
        match v {
            Var::X => self.terms.values().map(|p| p.deg()).max(),
            Var::A(i) => self.terms.keys().map(|k| k[i] as usize).max(),
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.degree_in(v).is_some_and(|d| d > 0)
    }

    /// Same polynomial viewed with more α slots (new ones unused).
    pub fn with_arity(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(k, p)| {
                let mut k2 = k.clone();
                k2.resize(nvars, 0);
                (k2, p.clone())
            })
            .collect();
        SymPoly { nvars, terms }
    }

    /// Sends α_i to α_{map[i]} inside an arity-`nvars` ring.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (k, p) in &self.terms {
            let mut k2 = vec![0; nvars];
            for (i, &e) in k.iter().enumerate() {
                k2[map[i]] += e;
            }
            out.add_block(k2, p);
        }
        out
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut map: Vec<usize> = (0..self.nvars).collect();
        map.swap(i, j);
        self.embed(self.nvars, &map)
    }

    fn add_block(&mut self, key: Vec<u32>, p: &IntPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + p;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, p)| (k.clone(), p.scale(c))).collect(),
        }
    }

    pub fn mul_x_poly(&self, q: &IntPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, p) in &self.terms {
            out.add_block(k.clone(), &(p * q));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// gcd of all integer coefficients.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, p| g.gcd(&p.content()))
    }

    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, p) in &self.terms {
            terms.insert(k.clone(), p.div_scalar_exact(d)?);
        }
        Ok(SymPoly { nvars: self.nvars, terms })
    }

    pub fn all_coefficients_divisible_by(&self, m: &BigInt) -> bool {
        self.terms.values().all(|p| p.coeffs().iter().all(|c| c.is_multiple_of(m)))
    }

    /// Applies `f` to every x-coefficient block.
    pub fn map_x(&self, f: impl Fn(&IntPoly) -> IntPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, p) in &self.terms {
            out.add_block(k.clone(), &f(p));
        }
        out
    }

    /// Substitutes a numeric value for x.
    pub fn subst_x(&self, x: &BigInt) -> Self {
        self.map_x(|p| IntPoly::constant(p.eval(x)))
    }

    /// Substitutes a polynomial in x for x.
    pub fn compose_x(&self, g: &IntPoly) -> Self {
        self.map_x(|p| p.compose(g))
    }

    pub fn derivative(&self, v: Var) -> Self {
        match v {
            Var::X => self.map_x(|p| p.derivative()),
            Var::A(i) => {
                let mut out = Self::zero(self.nvars);
                for (k, p) in &self.terms {
                    if k[i] == 0 {
                        continue;
                    }
                    let mut k2 = k.clone();
                    k2[i] -= 1;
                    out.add_block(k2, &p.scale(&BigInt::from(k[i])));
                }
                out
            }
        }
    }

    /// Exact evaluation; every variable of the ring must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let x = assignment.get(&Var::X).ok_or_else(|| Error::MissingVariable("x".into()))?;
        let mut alphas = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let v = assignment
                .get(&Var::A(i))
                .ok_or_else(|| Error::MissingVariable(Var::A(i).to_string()))?;
            alphas.push(v.clone());
        }
        Ok(self.eval_at(x, &alphas))
    }

    pub fn eval_at(&self, x: &BigRational, alphas: &[BigRational]) -> BigRational {
        assert_eq!(alphas.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (k, p) in &self.terms {
            let mut m = p.eval_rational(x);
            for (a, &e) in alphas.iter().zip(k) {
                m *= num_traits::pow(a.clone(), e as usize);
            }
            acc += m;
        }
        acc
    }

    /// Coefficient of v^k, as a polynomial not containing v.
    pub fn coeff_of(&self, v: Var, k: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        match v {
            Var::X => {
                for (key, p) in &self.terms {
                    out.add_block(key.clone(), &IntPoly::constant(p.coeff(k)));
                }
            }
            Var::A(i) => {
                for (key, p) in &self.terms {
                    if key[i] as usize == k {
                        let mut k2 = key.clone();
                        k2[i] = 0;
                        out.add_block(k2, p);
                    }
                }
            }
        }
        out
    }

    fn times_var_pow(&self, v: Var, k: usize) -> Self {
        match v {
            Var::X => self.mul_x_poly(&IntPoly::monomial(1, k)),
            Var::A(i) => {
                let terms = self
                    .terms
                    .iter()
                    .map(|(key, p)| {
                        let mut k2 = key.clone();
                        k2[i] += k as u32;
                        (k2, p.clone())
                    })
                    .collect();
                SymPoly { nvars: self.nvars, terms }
            }
        }
    }

    fn check_arity(&self, other: &SymPoly) {
        assert_eq!(self.nvars, other.nvars, "arity mismatch");
    }

    /// Writes monomials as `c*x^i*a1^j...`, ordered by α-exponents then x.
    pub fn fmt_named(&self, x: &str, alpha: &dyn Fn(usize) -> String) -> String {
        let mut terms = Vec::new();
        for (k, p) in &self.terms {
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut parts = Vec::new();
                match i {
                    0 => {}
                    1 => parts.push(x.to_string()),
                    _ => parts.push(format!("{x}^{i}")),
                }
                for (j, &e) in k.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(alpha(j)),
                        _ => parts.push(format!("{}^{e}", alpha(j))),
                    }
                }
                terms.push((c.clone(), parts.join("*")));
            }
        }
        join_terms(&terms)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_named("x", &|j| format!("a{}", j + 1)))
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    x: usize,
    alpha: &'a [u32],
    #[serde(with = "super::bigint_serde")]
    coeff: BigInt,
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .monomials()
            .map(|(x, alpha, c)| TermJson { x, alpha, coeff: c.clone() })
            .collect();
        terms.serialize(s)
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (k, p) in &rhs.terms {
            out.add_block(k.clone(), p);
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, p)| (k.clone(), -p)).collect(),
        }
    }
}

// Monomials multiply by adding exponent vectors.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        self.check_arity(rhs);
        let mut out = SymPoly::zero(self.nvars);
        for (ka, pa) in &self.terms {
            for (kb, pb) in &rhs.terms {
                let key: Vec<u32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_block(key, &(pa * pb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SymPoly {
            type Output = SymPoly;
            fn $m(self, rhs: SymPoly) -> SymPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SymPoly> for SymPoly {
            type Output = SymPoly;
            fn $m(self, rhs: &SymPoly) -> SymPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        -&self
    }
}

/// Division with remainder with respect to `v`: a = q·b + r, deg_v r < deg_v b.
/// The leading coefficient of b in v must be an integer constant; division is
/// exact over ℤ when it is ±1, otherwise each step must divide exactly.
pub fn poly_divrem(a: &SymPoly, b: &SymPoly, v: Var) -> Result<(SymPoly, SymPoly)> {
    a.check_arity(b);
    if b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if v == Var::X {
        if let Some(bx) = b.as_x_poly() {
            let mut q = SymPoly::zero(a.nvars);
            let mut r = SymPoly::zero(a.nvars);
            for (k, p) in &a.terms {
                let (qk, rk) = p.divrem(&bx)?;
                q.add_block(k.clone(), &qk);
                r.add_block(k.clone(), &rk);
            }
            return Ok((q, r));
        }
    }
    let db = b.degree_in(v).unwrap_or(0);
    let lead = b.coeff_of(v, db).as_constant().ok_or_else(|| {
        Error::inexact(format!("leading coefficient of divisor in {v} is not an integer constant"))
    })?;
    let mut q = SymPoly::zero(a.nvars);
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if r.is_zero() || dr < db {
            break;
        }
        let top = r.coeff_of(v, dr);
        let qt = if lead.is_one() {
            top
        } else if (-&lead).is_one() {
            -&top
        } else {
            top.div_scalar_exact(&lead)?
        };
        let qt = qt.times_var_pow(v, dr - db);
        r = &r - &(&qt * b);
        q = &q + &qt;
    }
    Ok((q, r))
}
