use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::sympoly::{SymPoly, Var};
use crate::error::{Error, Result};

/// num / den with den ∈ ℤ[x]. Normalized so that den shares no factor with
/// every x-coefficient block of num (content included) and lc(den) > 0.
/// Every consumer has denominators in x alone, so the gcd is taken in x only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: SymPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: SymPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: SymPoly) -> Self {
        RationalFunction { num, den: IntPoly::one() }
    }

    /// A rational function in x alone.
    pub fn from_x_ratio(num: IntPoly, den: IntPoly) -> Result<Self> {
        Self::new(SymPoly::from_x_poly(0, num), den)
    }

    /// A polynomial in x with rational coefficients.
    pub fn from_rational_coeffs(coeffs: &[BigRational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |l, c| num_integer::lcm(l, c.denom().clone()));
        let num: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::normalized(SymPoly::from_x_poly(0, IntPoly::new(num)), IntPoly::constant(den))
    }

    pub fn constant(nvars: usize, c: &BigRational) -> Self {
        Self::normalized(
            SymPoly::constant(nvars, c.numer().clone()),
            IntPoly::constant(c.denom().clone()),
        )
    }

    fn normalized(num: SymPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: IntPoly::one() };
        }
        let mut g = den.clone();
        for (_, block) in num.blocks() {
            if g.is_one() {
                break;
            }
            g = g.gcd(block);
        }
        if den.lc().is_negative() {
            g = -g;
        }
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let num = if g.is_one() {
            num
        } else {
            let mut acc = SymPoly::zero(num.nvars());
            for (key, block) in num.blocks() {
                let q = block.div_exact(&g).expect("gcd divides every block");
                acc = &acc + &SymPoly::monomial(num.nvars(), 1, 0, key).mul_x_poly(&q);
            }
            acc
        };
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &SymPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(polynomial) when the denominator has cleared.
    pub fn to_polynomial(&self) -> Option<SymPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn with_arity(&self, nvars: usize) -> Self {
        RationalFunction { num: self.num.with_arity(nvars), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &SymPoly) -> Self {
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn div_x_poly(&self, d: &IntPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::invalid("division by zero polynomial"));
        }
        Ok(Self::normalized(self.num.clone(), &self.den * d))
    }

    /// Value at a rational x; only for functions of x alone.
    pub fn eval_x(&self, x: &BigRational) -> Result<BigRational> {
        let num = self.num.as_x_poly().ok_or_else(|| Error::invalid("function depends on α"))?;
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return Err(Error::invalid(format!("pole at x = {x}")));
        }
        Ok(num.eval_rational(x) / d)
    }

    /// d/dx by the quotient rule.
    pub fn derivative_x(&self) -> Self {
        let num = &self.num.derivative(Var::X).mul_x_poly(&self.den)
            - &self.num.mul_x_poly(&self.den.derivative());
        Self::normalized(num, &self.den * &self.den)
    }

    /// Substitutes an integer for x in every α-block.
    pub fn subst_x(&self, x: &BigInt) -> Result<(SymPoly, BigInt)> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::invalid(format!("pole at x = {x}")));
        }
        Ok((self.num.subst_x(x), d))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.div_exact(&g).expect("gcd divides");
        let b = self.den.div_exact(&g).expect("gcd divides");
        let num = &self.num.mul_x_poly(&a) + &rhs.num.mul_x_poly(&b);
        RationalFunction::normalized(num, &self.den * &a)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};

    fn xp(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_x_ratio(xp(n), xp(d)).unwrap()
    }

    #[test]
    fn normalization_is_canonical() {
        // (x^2 - 1)/(2x + 2) = (x - 1)/2
        assert_eq!(rf(&[-1, 0, 1], &[2, 2]), rf(&[-1, 1], &[2]));
        assert_eq!(rf(&[1], &[-1, 1]), rf(&[-1], &[1, -1]));
        assert_eq!(rf(&[0], &[5, 7]), rf(&[0], &[1]));
    }

    #[test]
    fn two_term_sum_clears() {
        // (x - 1)/(x^2 - 1) + (x^2 - x)/(x^2 - 1) = 1
        let s = &rf(&[-1, 1], &[-1, 0, 1]) + &rf(&[0, -1, 1], &[-1, 0, 1]);
        assert_eq!(s.to_polynomial(), Some(SymPoly::one(0)));
    }

    #[test]
    fn rational_coefficients_and_evaluation() {
        let f = RationalFunction::from_rational_coeffs(&[rat(3, 8), rat(-4, 8), rat(1, 8)]);
        // (q-1)(q-3)/8 at q = 5
        assert_eq!(f.eval_x(&rat_int(5)).unwrap(), rat_int(1));
        assert!(rf(&[1], &[1, 1]).eval_x(&rat_int(-1)).is_err());
    }

    #[test]
    fn derivative_by_quotient_rule() {
        // d/dx 1/(1+x) = -1/(1+x)^2
        let d = rf(&[1], &[1, 1]).derivative_x();
        assert_eq!(d, rf(&[-1], &[1, 2, 1]));
    }

    #[test]
    fn multivariate_numerator_keeps_alpha() {
        let a = SymPoly::var(1, Var::A(0));
        let num = SymPoly::from_x_poly(1, xp(&[1, 1])).mul_x_poly(&IntPoly::one()) * a.clone();
        let f = RationalFunction::new(num, xp(&[1, 1])).unwrap();
        assert_eq!(f.to_polynomial(), Some(a));
    }
}
