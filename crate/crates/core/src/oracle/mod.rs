//! Brute-force ground truth over small finite fields. Nothing here uses a
//! counting formula: every number comes from enumerating polynomials or
//! matrices.

mod field;
mod matrix;
pub mod poly;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub use field::{FiniteField, FIELD_SIZE_CAP};
pub use matrix::{matrix_census_tiny, MatrixCensus, GROUP_ORDER_BUDGET};
pub use poly::FPoly;

use crate::classtypes::{SLType, SpType};
use crate::error::{Error, Result};

pub const IRREDUCIBLE_BUDGET: u128 = 10_000_000;
pub const SL_CENSUS_BUDGET: u128 = 10_000_000;
pub const SP_CENSUS_BUDGET: u128 = 1_000_000;

fn pow_checked(q: u32, e: usize, budget: u128, what: &str) -> Result<u64> {
    let size = (q as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
    if size > budget {
        return Err(Error::budget(format!("{what} (use the closed-form path instead)"), size, budget));
    }
    Ok(size as u64)
}

type IrrKey = (u32, Vec<u32>, usize, Option<u32>);

fn irreducible_cache() -> &'static Mutex<HashMap<IrrKey, Arc<Vec<FPoly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<IrrKey, Arc<Vec<FPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Monic irreducible polynomials of degree d, optionally with a prescribed
/// constant term, in increasing order of their coefficient index.
pub fn irreducible_monics(f: &FiniteField, d: usize, constant: Option<u32>) -> Result<Arc<Vec<FPoly>>> {
    if d == 0 {
        return Err(Error::invalid("degree must be positive"));
    }
    if let Some(c) = constant {
        if c >= f.q() {
            return Err(Error::invalid(format!("constant {c} is not an element of F_{}", f.q())));
        }
    }
    pow_checked(f.q(), d, IRREDUCIBLE_BUDGET, "irreducible enumeration")?;
    let key = (f.p(), f.modulus().to_vec(), d, constant);
    if let Some(hit) = irreducible_cache().lock().expect("cache").get(&key) {
        return Ok(hit.clone());
    }
    let q = f.q();
    let mut out = Vec::new();
    // With a prescribed constant only the middle coefficients vary.
    let (free, fixed) = match constant {
        Some(c) => (d - 1, Some(c)),
        None => (d, None),
    };
    let total = (q as u64).pow(free as u32);
    for idx in 0..total {
        let mut cand = match fixed {
            Some(c) => {
                let mut v = vec![c];
                v.extend(poly::monic_from_index(q, free, idx));
                v
            }
            None => poly::monic_from_index(q, d, idx),
        };
        cand.truncate(d + 1);
        if poly::is_irreducible(f, &cand) {
            out.push(cand);
        }
    }
    let out = Arc::new(out);
    irreducible_cache().lock().expect("cache").insert(key, out.clone());
    Ok(out)
}

/// Factorization into monic irreducibles with multiplicities, by trial
/// division against the cached irreducible lists; the input must be monic
/// with nonzero constant term.
pub fn factor(f: &FiniteField, a: &[u32]) -> Result<Vec<(FPoly, u32)>> {
    let mut rest = a.to_vec();
    if rest.last() != Some(&1) || rest[0] == 0 {
        return Err(Error::invalid("factor expects a monic polynomial with nonzero constant term"));
    }
    let mut out = Vec::new();
    let mut k = 1;
    while 2 * k < rest.len() {
        for p in irreducible_monics(f, k, None)?.iter() {
            if p[0] == 0 {
                continue;
            }
            let mut mult = 0;
            loop {
                let (quo, r) = poly::divrem(f, &rest, p);
                if !r.is_empty() {
                    break;
                }
                rest = quo;
                mult += 1;
            }
            if mult > 0 {
                out.push((p.clone(), mult));
            }
            if 2 * k > rest.len() - 1 {
                break;
            }
        }
        k += 1;
    }
    if rest.len() > 1 {
        match out.iter_mut().find(|(p, _)| *p == rest) {
            Some(e) => e.1 += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort();
    Ok(out)
}

/// Calls `visit` on every monic polynomial of degree n whose constant term
/// is one of `constants`.
fn for_each_candidate(f: &FiniteField, n: usize, constants: &[u32], mut visit: impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
    let q = f.q();
    for &c0 in constants {
        let free = n - 1;
        let total = (q as u64).pow(free as u32);
        for idx in 0..total {
            let mut v = vec![c0];
            v.extend(poly::monic_from_index(q, free, idx));
            visit(&v)?;
        }
    }
    Ok(())
}

/// Semisimple classes of SL_n(F_q) by type of characteristic polynomial.
pub fn sl_census(n: u32, f: &FiniteField) -> Result<BTreeMap<SLType, u64>> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    pow_checked(f.q(), n as usize - 1, SL_CENSUS_BUDGET, "SL census")?;
    let constant = if n % 2 == 0 { 1 } else { f.minus_one() };
    let mut tally = BTreeMap::new();
    for_each_candidate(f, n as usize, &[constant], |cand| {
        let fac = factor(f, cand)?;
        let pairs = fac.iter().map(|(p, m)| ((p.len() - 1) as u32, *m)).collect();
        *tally.entry(SLType::new(pairs)?).or_insert(0) += 1;
        Ok(())
    })?;
    Ok(tally)
}

/// Classifies a monic palindromic f with f(0) = 1 of degree 2n, or None when
/// x ∓ 1 occurs to an odd power.
fn sp_type_of(f: &FiniteField, cand: &[u32]) -> Result<Option<SpType>> {
    let fac = factor(f, cand)?;
    let (one, minus_one) = (vec![f.minus_one(), 1], vec![1, 1]);
    let (mut a_plus, mut a_minus) = (0, 0);
    let (mut unitary, mut gl) = (Vec::new(), Vec::new());
    for (p, m) in &fac {
        if *p == one || *p == minus_one {
            if m % 2 == 1 {
                return Ok(None);
            }
            if *p == one {
                a_plus = m / 2;
            } else {
                a_minus = m / 2;
            }
            continue;
        }
        let star = poly::reciprocal(f, p);
        let deg = (p.len() - 1) as u32;
        if star == *p {
            unitary.push((deg / 2, *m));
        } else if *p < star {
            gl.push((deg, *m));
        }
    }
    Ok(Some(SpType::new(a_plus, a_minus, unitary, gl)?))
}

/// Semisimple classes of Sp_2n(F_q) by type: palindromic characteristic
/// polynomials with even multiplicity at x ∓ 1. General-linear types are
/// included.
pub fn sp_census(n: u32, f: &FiniteField) -> Result<BTreeMap<SpType, u64>> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    pow_checked(f.q(), n as usize, SP_CENSUS_BUDGET, "Sp census")?;
    let q = f.q();
    let two_n = 2 * n as usize;
    let mut tally = BTreeMap::new();
    for idx in 0..(q as u64).pow(n) {
        // c_1..c_n free; c_{2n−i} = c_i; c_0 = c_{2n} = 1.
        let mid = poly::monic_from_index(q, n as usize, idx);
        let mut cand = vec![0u32; two_n + 1];
        cand[0] = 1;
        cand[two_n] = 1;
        for i in 1..=n as usize {
            cand[i] = mid[i - 1];
            cand[two_n - i] = mid[i - 1];
        }
        if let Some(t) = sp_type_of(f, &cand)? {
            *tally.entry(t).or_insert(0) += 1;
        }
    }
    Ok(tally)
}

/// Self-reciprocal irreducible monic polynomials of degree 2n, counted over
/// every palindromic (c_i = c_{2n−i}) and anti-palindromic candidate.
pub fn self_reciprocal_irreducible_census(f: &FiniteField, two_n: u32) -> Result<u64> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(Error::invalid("degree must be positive and even"));
    }
    let n = (two_n / 2) as usize;
    pow_checked(f.q(), n, SP_CENSUS_BUDGET, "self-reciprocal census")?;
    let q = f.q();
    let two_n = two_n as usize;
    let mut signs = vec![1u32];
    if f.is_odd() {
        signs.push(f.minus_one());
    }
    let mut count = 0;
    for &s in &signs {
        // P = P* with P(0) = s means c_{2n−i} = s·c_i.
        let free_mid = if s == 1 { n } else { n - 1 };
        for idx in 0..(q as u64).pow(free_mid as u32) {
            let mid = poly::monic_from_index(q, free_mid, idx);
            let mut cand = vec![0u32; two_n + 1];
            cand[two_n] = 1;
            cand[0] = s;
            for i in 1..n {
                cand[i] = mid[i - 1];
                cand[two_n - i] = f.mul(s, mid[i - 1]);
            }
            if s == 1 {
                cand[n] = mid[n - 1];
            }
            if poly::is_irreducible(f, &cand) && poly::reciprocal(f, &cand) == cand {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::divisors;

    fn field(q: u64) -> Arc<FiniteField> {
        FiniteField::cached(q).unwrap()
    }

    fn sl(p: &[(u32, u32)]) -> SLType {
        SLType::new(p.to_vec()).unwrap()
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(*irreducible_monics(&field(2), 2, Some(1)).unwrap(), vec![vec![1, 1, 1]]);
        assert_eq!(*irreducible_monics(&field(3), 1, Some(2)).unwrap(), vec![vec![2, 1]]);
        assert_eq!(*irreducible_monics(&field(2), 1, None).unwrap(), vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(irreducible_monics(&field(2), 30, None), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn gauss_identity() {
        for q in [2u64, 3, 4, 5, 7] {
            let f = field(q);
            for big_d in 1..=6usize {
                if (q as u128).pow(big_d as u32) > 200_000 {
                    continue;
                }
                let total: u64 = divisors(big_d as u64)
                    .into_iter()
                    .map(|d| d * irreducible_monics(&f, d as usize, None).unwrap().len() as u64)
                    .sum();
                assert_eq!(total, q.pow(big_d as u32), "q={q} D={big_d}");
            }
        }
    }

    #[test]
    fn factorization_reassembles() {
        let f = field(3);
        let a = vec![2, 0, 1];
        let b = vec![1, 0, 1];
        let prod = poly::mul(&f, &poly::mul(&f, &a, &a), &b);
        let fac = factor(&f, &prod).unwrap();
        let mut back = vec![1];
        for (p, m) in &fac {
            for _ in 0..*m {
                back = poly::mul(&f, &back, p);
            }
        }
        assert_eq!(back, prod);
        assert_eq!(fac.len(), 3);
    }

    #[test]
    fn sl_census_examples() {
        let c = sl_census(2, &field(3)).unwrap();
        assert_eq!(c.get(&sl(&[(1, 2)])), Some(&2));
        assert_eq!(c.get(&sl(&[(2, 1)])), Some(&1));
        assert_eq!(c.get(&sl(&[(1, 1), (1, 1)])), None);
        assert_eq!(sl_census(2, &field(2)).unwrap().values().sum::<u64>(), 2);
        for q in [2u64, 3, 4, 5] {
            for n in 1..=4u32 {
                let total: u64 = sl_census(n, &field(q)).unwrap().values().sum();
                assert_eq!(total, q.pow(n - 1));
            }
        }
    }

    #[test]
    fn sp_census_examples() {
        let c = sp_census(2, &field(3)).unwrap();
        let get = |a, b, u: &[(u32, u32)]| *c.get(&SpType::new(a, b, u.to_vec(), vec![]).unwrap()).unwrap_or(&0);
        assert_eq!(
            [get(2, 0, &[]), get(1, 1, &[]), get(1, 0, &[(1, 1)]), get(0, 0, &[(1, 2)]), get(0, 0, &[(1, 1), (1, 1)]), get(0, 0, &[(2, 1)])],
            [2, 1, 2, 1, 0, 2]
        );
        let c2 = sp_census(2, &field(2)).unwrap();
        assert_eq!(c2.values().sum::<u64>(), 4);
        // Sp_2 = SL_2: the same number of classes.
        for q in [2u64, 3, 4, 5, 7] {
            let a: u64 = sp_census(1, &field(q)).unwrap().values().sum();
            let b: u64 = sl_census(2, &field(q)).unwrap().values().sum();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn self_reciprocal_examples() {
        assert_eq!(self_reciprocal_irreducible_census(&field(3), 2).unwrap(), 1);
        assert_eq!(self_reciprocal_irreducible_census(&field(2), 4).unwrap(), 1);
        assert_eq!(self_reciprocal_irreducible_census(&field(5), 4).unwrap(), 6);
        assert!(self_reciprocal_irreducible_census(&field(5), 3).is_err());
    }
}
