use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactalg::prime_power;

use super::poly::{self, FPoly};

pub const FIELD_SIZE_CAP: u64 = 1 << 16;

/// F_q = F_p[θ]/(modulus). An element is the integer Σ c_i p^i encoding
/// c_0 + c_1 θ + … in the power basis, so 0 and 1 are the usual constants
/// and F_p sits inside as 0..p.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} (p = {}, modulus {:?})", self.q, self.p, self.modulus)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

fn cache() -> &'static Mutex<HashMap<u64, Arc<FiniteField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FiniteField>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        if q > FIELD_SIZE_CAP {
            return Err(Error::budget("field size", q as u128, FIELD_SIZE_CAP as u128));
        }
        let (p, k) = prime_power(q).ok_or_else(|| Error::invalid(format!("q = {q} is not a prime power")))?;
        let prime = Self::prime(p as u32);
        if k == 1 {
            return Ok(prime);
        }
        let modulus = first_irreducible(&prime, k)?;
        Self::with_modulus(p as u32, modulus)
    }

    /// Shared instance; fields are immutable so one per q suffices.
    pub fn cached(q: u64) -> Result<Arc<Self>> {
        if let Some(f) = cache().lock().expect("field cache").get(&q) {
            return Ok(f.clone());
        }
        let f = Arc::new(Self::new(q)?);
        cache().lock().expect("field cache").insert(q, f.clone());
        Ok(f)
    }

    fn prime(p: u32) -> Self {
        let raw_mul = |a: u32, b: u32| ((a as u64 * b as u64) % p as u64) as u32;
        Self::build(p, 1, vec![0, 1], raw_mul)
    }

    /// Build F_{p^k} from a given modulus over F_p; rejects reducible moduli.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if prime_power(p as u64).map(|(_, e)| e) != Some(1) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        let prime = Self::prime(p);
        let m = poly::trim(modulus);
        if m.len() < 2 || *m.last().expect("nonempty") != 1 || m.iter().any(|&c| c >= p) {
            return Err(Error::invalid("modulus must be monic of positive degree over F_p"));
        }
        let k = (m.len() - 1) as u32;
        if (p as u64).pow(k) > FIELD_SIZE_CAP {
            return Err(Error::budget("field size", (p as u128).pow(k), FIELD_SIZE_CAP as u128));
        }
        if !poly::is_irreducible(&prime, &m) {
            return Err(Error::invalid(format!("modulus {m:?} is reducible over F_{p}")));
        }
        if k == 1 {
            return Ok(prime);
        }
        let raw_mul = |a: u32, b: u32| {
            let pa = digits(a, p, k);
            let pb = digits(b, p, k);
            let prod = poly::rem(&prime, &poly::mul(&prime, &pa, &pb), &m);
            undigits(&prod, p)
        };
        Ok(Self::build(p, k, m.clone(), raw_mul))
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>, raw_mul: impl Fn(u32, u32) -> u32) -> Self {
        let q = p.pow(k);
        let order = q - 1;
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; q as usize];
        // Smallest generator of the multiplicative group.
        'search: for g in 1..q {
            let mut x = 1u32;
            for i in 0..order {
                if i > 0 && x == 1 {
                    continue 'search;
                }
                exp[i as usize] = x;
                x = raw_mul(x, g);
            }
            break;
        }
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let mut field = FiniteField { p, k, q, modulus, exp, log, add: None };
        if q <= 256 {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_digits(a, b);
                }
            }
            field.add = Some(table);
        }
        field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % order) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let order = self.q - 1;
        Some(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % order)) % order) as usize]
    }

    /// Image of an integer under Z → F_p ⊂ F_q.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn minus_one(&self) -> u32 {
        self.neg(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

fn digits(mut a: u32, p: u32, k: u32) -> FPoly {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(a % p);
        a /= p;
    }
    poly::trim(out)
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// First monic irreducible of degree k over F_p, ordering candidates by the
/// integer Σ c_i p^i of their lower coefficients.
fn first_irreducible(prime: &FiniteField, k: u32) -> Result<FPoly> {
    let p = prime.p;
    for idx in 0..p.pow(k) {
        let mut c = digits(idx, p, k);
        c.resize(k as usize, 0);
        c.push(1);
        if c[0] != 0 && poly::is_irreducible(prime, &c) {
            return Ok(c);
        }
    }
    Err(Error::certificate("field construction", format!("no irreducible of degree {k} over F_{p}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FiniteField) {
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.pow(a, (f.q() - 1) as u64), 1);
            }
            for b in f.elements().step_by(3) {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in f.elements().step_by(5) {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.q() as u64, q);
            check_axioms(&f);
        }
    }

    #[test]
    fn lexicographic_moduli() {
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FiniteField::new(6).is_err());
        assert!(matches!(FiniteField::new(1 << 17), Err(Error::BudgetExceeded { .. })));
        assert!(FiniteField::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FiniteField::with_modulus(4, vec![1, 1]).is_err());
        assert!(FiniteField::with_modulus(3, vec![1, 0, 1]).is_ok());
    }

    #[test]
    fn largest_field_builds() {
        let f = FiniteField::new(1 << 16).unwrap();
        let a = 12345;
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }
}
