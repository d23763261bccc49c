use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{cyclotomic, fmt_rational, gcd_u64, lcm_u64, IntPoly};

pub const CONDUCTOR_CAP: u64 = 10_000;

/// An element of ℚ(ζ_N): (Σ c_j ζ_N^j) / den with j < φ(N), coefficients
/// reduced mod Φ_N, gcd(content, den) = 1 and den > 0. Within a fixed
/// conductor this form is unique; across conductors compare after lifting.
#[derive(Clone, Debug)]
pub struct CyclotomicRational {
    conductor: u64,
    num: IntPoly,
    den: BigInt,
}

impl CyclotomicRational {
    fn make(conductor: u64, num: IntPoly, den: BigInt) -> Self {
        assert!(conductor <= CONDUCTOR_CAP, "conductor {conductor} exceeds the cap {CONDUCTOR_CAP}");
        let phi = cyclotomic(conductor);
        let num = num.divrem(&phi).expect("Φ_N is monic").1;
        let mut g = num.content().gcd(&den);
        if g.is_zero() {
            g = den.clone();
        }
        if den.is_negative() {
            g = -g;
        }
        if num.is_zero() {
            return CyclotomicRational { conductor, num, den: BigInt::one() };
        }
        CyclotomicRational {
            conductor,
            num: num.div_scalar_exact(&g).expect("gcd divides"),
            den: den / g,
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        CyclotomicRational { conductor: 1, num: IntPoly::constant(r.numer().clone()), den: r.denom().clone() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ_n^k
    pub fn root_of_unity(n: u64, k: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("root of unity order must be positive"));
        }
        if n > CONDUCTOR_CAP {
            return Err(Error::invalid(format!("order {n} exceeds the conductor cap {CONDUCTOR_CAP}")));
        }
        Ok(Self::make(n, IntPoly::monomial(1, (k % n) as usize), BigInt::one()))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.num
            .is_constant()
            .then(|| BigRational::new(self.num.coeff(0), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Same element with conductor L (a multiple of the current one).
    pub fn lift(&self, l: u64) -> Self {
        assert_eq!(l % self.conductor, 0, "lift target must be a multiple of the conductor");
        if l == self.conductor {
            return self.clone();
        }
        let k = (l / self.conductor) as usize;
        Self::make(l, self.num.compose_power(k), self.den.clone())
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let l = lcm_u64(a.conductor, b.conductor);
        (a.lift(l), b.lift(l))
    }

    /// σ_k: ζ ↦ ζ^k for k coprime to the conductor.
    pub fn galois(&self, k: u64) -> Self {
        assert_eq!(gcd_u64(k, self.conductor), 1);
        if self.conductor == 1 {
            return self.clone();
        }
        let k = (k % self.conductor) as usize;
        Self::make(self.conductor, self.num.compose_power(k), self.den.clone())
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one().lift(self.conductor);
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

    /// Inverse via the product of the other Galois conjugates over the norm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular("inverse of zero".into()));
        }
        let n = self.conductor;
        let mut others = Self::one().lift(n);
        for k in 2..n.max(2) {
            if gcd_u64(k, n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others).to_rational().expect("norm is rational");
        let inv_norm = Self::from_rational(&norm.recip());
        Ok(&others * &inv_norm)
    }

    /// Total order on canonical forms of equal conductor.
    pub(crate) fn key_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.conductor, other.conductor);
        self.den
            .cmp(&other.den)
            .then_with(|| self.num.coeffs().len().cmp(&other.num.coeffs().len()))
            .then_with(|| self.num.coeffs().cmp(other.num.coeffs()))
    }
}

impl PartialEq for CyclotomicRational {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for CyclotomicRational {}

impl Add for &CyclotomicRational {
    type Output = CyclotomicRational;
    fn add(self, rhs: &CyclotomicRational) -> CyclotomicRational {
        let (a, b) = CyclotomicRational::common(self, rhs);
        let num = &a.num.scale(&b.den) + &b.num.scale(&a.den);
        CyclotomicRational::make(a.conductor, num, &a.den * &b.den)
    }
}

impl Sub for &CyclotomicRational {
    type Output = CyclotomicRational;
    fn sub(self, rhs: &CyclotomicRational) -> CyclotomicRational {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicRational {
    type Output = CyclotomicRational;
    fn neg(self) -> CyclotomicRational {
        CyclotomicRational { conductor: self.conductor, num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &CyclotomicRational {
    type Output = CyclotomicRational;
    fn mul(self, rhs: &CyclotomicRational) -> CyclotomicRational {
        let (a, b) = CyclotomicRational::common(self, rhs);
        CyclotomicRational::make(a.conductor, &a.num * &b.num, &a.den * &b.den)
    }
}

impl fmt::Display for CyclotomicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return f.write_str(&fmt_rational(&r));
        }
        let body = self.num.fmt_var(&format!("z{}", self.conductor));
        if self.den.is_one() {
            write!(f, "({body})")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

impl Serialize for CyclotomicRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
