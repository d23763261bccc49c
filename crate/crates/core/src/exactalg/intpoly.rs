use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense univariate polynomial over ℤ, coefficient index = exponent.
/// Trailing zeros are never stored, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    /// x^n - 1
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut v = vec![BigInt::zero(); n + 1];
        v[0] = BigInt::from(-1);
        v[n] += BigInt::one();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg 0 := 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
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

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// p(x^k)
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if k == 1 || self.is_constant() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    /// p(g(x))
    pub fn compose(&self, g: &IntPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// x^deg p(1/x)
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::inexact("division by zero scalar"));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::inexact(format!("coefficient {c} not divisible by {d}")));
            }
            out.push(q);
        }
        Ok(IntPoly { coeffs: out })
    }

    /// Long division over ℤ. Each step divides by lc(b) and must be exact,
    /// which always holds when lc(b) = ±1.
    pub fn divrem(&self, b: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let db = b.degree().ok_or(Error::ZeroPolynomial)?;
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        for k in (db..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (c, rem) = r[k].div_rem(&lb);
            if !rem.is_zero() {
                return Err(Error::inexact(format!(
                    "leading coefficient {lb} does not divide {}",
                    r[k]
                )));
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k - db + j] -= &c * bc;
            }
            q[k - db] = c;
        }
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn div_exact(&self, b: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::inexact(format!("({self}) / ({b}) leaves remainder {r}")))
        }
    }

    /// Remainder of lc(b)^k · a by b for some k ≥ 0; only its primitive part is meaningful.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.deg();
        let lb = b.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= db {
            let shift = r.deg() - db;
            let lr = r.lc();
            r = &r.scale(&lb) - &(b * &IntPoly::monomial(lr, shift));
        }
        r
    }

    /// Exact pseudo-remainder with exponent deg a - deg b + 1.
    fn prem(&self, b: &IntPoly) -> IntPoly {
        let db = b.deg();
        if self.deg() < db {
            return self.clone();
        }
        let delta = (self.deg() - db + 1) as u32;
        let lb = b.lc();
        let scaled = self.scale(&num_traits::pow(lb, delta as usize));
        scaled.divrem(b).expect("scaled pseudo-division is exact").1
    }

    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    pub fn max_abs_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// Writes the polynomial in ascending order with explicit `*` and `^`.
    pub fn fmt_var(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            terms.push((c.clone(), mono));
        }
        join_terms(&terms)
    }
}

/// Joins (coefficient, monomial) pairs as "c*m + ... - c*m".
pub(crate) fn join_terms(terms: &[(BigInt, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&super::bigint_serde::Wrapped(c.clone()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<super::bigint_serde::Wrapped> = Vec::deserialize(d)?;
        Ok(IntPoly::new(v.into_iter().map(|w| w.0).collect()))
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut v = long.to_vec();
    for (x, y) in v.iter_mut().zip(short) {
        *x += y;
    }
    v
}

fn mul_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let ba = a.iter().map(|c| c.bits()).max().unwrap_or(0);
    let bb = b.iter().map(|c| c.bits()).max().unwrap_or(0);
    let terms = a.len().min(b.len()) as u64;
    let bound = ba + bb + (64 - terms.leading_zeros() as u64) + 1;
    if bound < 126 {
        let a: Vec<i128> = a.iter().map(|c| c.to_i128().unwrap()).collect();
        let b: Vec<i128> = b.iter().map(|c| c.to_i128().unwrap()).collect();
        let mut acc = vec![0i128; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                acc[i + j] += x * y;
            }
        }
        return acc.into_iter().map(BigInt::from).collect();
    }
    let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            acc[i + j] += x * y;
        }
    }
    acc
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(mul_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Resultant by the subresultant PRS. Equals the Sylvester determinant with
/// the rows of `p` first, i.e. lc(p)^deg q · Π_{p(α)=0} q(α).
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (dp, dq) = (p.deg(), q.deg());
    if dq == 0 {
        return Ok(num_traits::pow(q.lc(), dp));
    }
    if dp == 0 {
        return Ok(num_traits::pow(p.lc(), dq));
    }
    let mut sign = BigInt::one();
    let (mut a, mut b) = (p.clone(), q.clone());
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            sign = -sign;
        }
    }
    let ca = a.content();
    let cb = b.content();
    let t = num_traits::pow(ca.clone(), b.deg()) * num_traits::pow(cb.clone(), a.deg());
    a = a.div_scalar_exact(&ca)?;
    b = b.div_scalar_exact(&cb)?;
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.prem(&b);
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r.div_scalar_exact(&divisor)?;
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h.clone(), delta - 1);
            num / den
        };
        if b.deg() == 0 {
            let da = a.deg();
            let num = num_traits::pow(b.lc(), da);
            let res = if da == 0 {
                num
            } else {
                num / num_traits::pow(h.clone(), da - 1)
            };
            return Ok(sign * t * res);
        }
    }
}

static CYCLOTOMIC_MEMO: OnceLock<RwLock<HashMap<u64, IntPoly>>> = OnceLock::new();

/// Φ_n by exact division of x^n - 1 by Φ_d for the proper divisors d.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let memo = CYCLOTOMIC_MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = memo.read().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return p.clone();
    }
    let mut p = IntPoly::x_pow_minus_one(n as usize);
    for d in super::divisors(n) {
        if d < n {
            p = p.div_exact(&cyclotomic(d)).expect("x^n - 1 is divisible by Φ_d");
        }
    }
    memo.write().unwrap_or_else(|e| e.into_inner()).entry(n).or_insert_with(|| p.clone());
    p
}

/// The monic polynomial with root multiset {α^m : w(α) = 0}, via power sums
/// and Newton's identities.
pub fn root_power_transform(w: &IntPoly, m: u32) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::invalid("root power exponent must be positive"));
    }
    if !w.is_monic() {
        return Err(Error::NotMonic(w.to_string()));
    }
    if m == 1 {
        return Ok(w.clone());
    }
    let n = w.deg();
    let m = m as usize;
    // e_k of w's roots: w = x^n - e1 x^{n-1} + e2 x^{n-2} - ...
    let e: Vec<BigInt> = (0..=n)
        .map(|k| {
            let c = w.coeff(n - k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let p = power_sums(&e, n * m);
    let pm: Vec<BigInt> = (0..=n).map(|k| p[k * m].clone()).collect();
    let e2 = elementary_from_power_sums(&pm, n)?;
    let coeffs = (0..=n)
        .map(|i| {
            let k = n - i;
            if k % 2 == 0 {
                e2[k].clone()
            } else {
                -e2[k].clone()
            }
        })
        .collect();
    Ok(IntPoly::new(coeffs))
}

/// p_0..p_upto from e_0..e_n (Newton's identities).
fn power_sums(e: &[BigInt], upto: usize) -> Vec<BigInt> {
    let n = e.len() - 1;
    let mut p = vec![BigInt::zero(); upto + 1];
    p[0] = BigInt::from(n);
    for k in 1..=upto {
        let mut acc = BigInt::zero();
        for i in 1..k.min(n + 1) {
            let term = &e[i] * &p[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if k <= n {
            let term = &e[k] * BigInt::from(k);
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[k] = acc;
    }
    p
}

fn elementary_from_power_sums(p: &[BigInt], n: usize) -> Result<Vec<BigInt>> {
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::inexact("Newton identity produced a non-integer"));
        }
        e[k] = q;
    }
    Ok(e)
}
