//! Dense polynomials over a `FiniteField`, coefficients low to high with no
//! trailing zeros (the zero polynomial is empty).

use super::field::FiniteField;

pub type FPoly = Vec<u32>;

pub fn trim(mut a: FPoly) -> FPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(f: &FiniteField, a: &[u32], b: &[u32]) -> FPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn sub(f: &FiniteField, a: &[u32], b: &[u32]) -> FPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn mul(f: &FiniteField, a: &[u32], b: &[u32]) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// (quotient, remainder); panics on a zero divisor.
pub fn divrem(f: &FiniteField, a: &[u32], b: &[u32]) -> (FPoly, FPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let inv_lc = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quo = vec![0u32; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = f.mul(r[i], inv_lc);
        if c == 0 {
            continue;
        }
        quo[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let k = i - db + j;
            r[k] = f.sub(r[k], f.mul(c, bj));
        }
    }
    r.truncate(db);
    (trim(quo), trim(r))
}

pub fn rem(f: &FiniteField, a: &[u32], b: &[u32]) -> FPoly {
    divrem(f, a, b).1
}

pub fn monic(f: &FiniteField, a: &[u32]) -> FPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = f.inv(lc).expect("nonzero");
            a.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

pub fn gcd(f: &FiniteField, a: &[u32], b: &[u32]) -> FPoly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub fn mulmod(f: &FiniteField, a: &[u32], b: &[u32], m: &[u32]) -> FPoly {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &FiniteField, base: &[u32], mut e: u64, m: &[u32]) -> FPoly {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(f, &b, &b, m);
        }
    }
    acc
}

/// Distinct-degree test: a of degree n is irreducible iff
/// gcd(a, x^{q^i} − x) = 1 for every i ≤ n/2.
pub fn is_irreducible(f: &FiniteField, a: &[u32]) -> bool {
    let n = match degree(a) {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    if a[0] == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut h = rem(f, &x, a);
    for _ in 1..=n / 2 {
        h = powmod(f, &h, f.q() as u64, a);
        if gcd(f, a, &sub(f, &h, &x)).len() > 1 {
            return false;
        }
    }
    true
}

pub fn eval(f: &FiniteField, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// P* = P(0)⁻¹ x^{deg P} P(1/x); needs P(0) ≠ 0.
pub fn reciprocal(f: &FiniteField, a: &[u32]) -> FPoly {
    let c0 = f.inv(a[0]).expect("reciprocal needs a nonzero constant term");
    a.iter().rev().map(|&c| f.mul(c, c0)).collect()
}

/// Monic polynomial of degree d whose lower coefficients are the base-q
/// digits of `idx`.
pub fn monic_from_index(q: u32, d: usize, mut idx: u64) -> FPoly {
    let mut out = Vec::with_capacity(d + 1);
    for _ in 0..d {
        out.push((idx % q as u64) as u32);
        idx /= q as u64;
    }
    out.push(1);
    out
}

pub fn fmt_fpoly(a: &[u32]) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, &c) in a.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    parts.join(" + ")
}
