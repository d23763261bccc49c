//! Exact arithmetic: integer helpers, dense integer polynomials, sparse
//! multivariate polynomials with a dense distinguished variable, rational
//! functions, resultants and symmetric reduction over root multisets.

mod intpoly;
mod ratfunc;
mod symmetric;
mod sympoly;

pub use intpoly::{cyclotomic, resultant, root_power_transform, IntPoly};
pub use ratfunc::RationalFunction;
pub use symmetric::{reduce_modulo_roots, reduce_symmetric};
pub use sympoly::{poly_divrem, SymPoly, Var};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_integer::Integer;
use num_traits::{One, Zero};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// "a/b", with b omitted when 1.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization as (prime, exponent), primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// Some((p, k)) with q = p^k, k ≥ 1.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn big_pow(base: u64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

/// n (n-1) ... (n-k+1) over exact rationals.
pub fn falling_factorial(n: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut cur = n.clone();
    for _ in 0..k {
        acc *= &cur;
        cur -= BigRational::one();
    }
    acc
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Number-or-string JSON encoding for big integers.
pub(crate) mod bigint_serde {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match n.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&n.to_string()),
        }
    }

    struct BigVisitor;

    impl<'de> Visitor<'de> for BigVisitor {
        type Value = BigInt;
        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("an integer or a decimal string")
        }
        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }
        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            v.parse().map_err(|_| E::custom(format!("not an integer: {v:?}")))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(BigVisitor)
    }

    #[derive(serde::Serialize, serde::Deserialize)]
    #[serde(transparent)]
    pub struct Wrapped(#[serde(with = "self")] pub BigInt);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_and_mobius_tables() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn rational_text_round_trip() {
        let r = rat(-26, 160);
        assert_eq!(fmt_rational(&r), "-13/80");
        assert_eq!(parse_rational("-13/80"), Some(r));
        assert_eq!(fmt_rational(&rat_int(5)), "5");
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(&rat_int(5), 3), rat_int(60));
        assert_eq!(falling_factorial(&rat_int(1), 2), rat_int(0));
        assert_eq!(falling_factorial(&rat(1, 2), 0), rat_int(1));
    }
}
