use std::collections::{BTreeMap, HashMap};

use super::field::FiniteField;
use super::poly::FPoly;
use crate::error::{Error, Result};
use crate::motive::GroupSpec;

pub const GROUP_ORDER_BUDGET: u64 = 100_000;

/// Row-major 2×2 matrix.
type M2 = [u32; 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCensus {
    pub group_order: u64,
    pub semisimple_elements: u64,
    pub classes: usize,
    /// Characteristic polynomial (ascending coefficients) → classes with it.
    pub by_charpoly: BTreeMap<FPoly, usize>,
}

fn mul(f: &FiniteField, a: &M2, b: &M2) -> M2 {
    let dot = |x: u32, y: u32, z: u32, w: u32| f.add(f.mul(x, y), f.mul(z, w));
    [
        dot(a[0], b[0], a[1], b[2]),
        dot(a[0], b[1], a[1], b[3]),
        dot(a[2], b[0], a[3], b[2]),
        dot(a[2], b[1], a[3], b[3]),
    ]
}

fn det(f: &FiniteField, a: &M2) -> u32 {
    f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]))
}

fn transpose(a: &M2) -> M2 {
    [a[0], a[2], a[1], a[3]]
}

const IDENTITY: M2 = [1, 0, 0, 1];

fn in_group(f: &FiniteField, group: &GroupSpec, a: &M2) -> bool {
    match group {
        GroupSpec::SL(_) => det(f, a) == 1,
        _ => {
            // Aᵀ J A = J for the standard alternating form J.
            let j = [0, 1, f.minus_one(), 0];
            mul(f, &mul(f, &transpose(a), &j), a) == j
        }
    }
}

fn inverse(f: &FiniteField, a: &M2) -> M2 {
    let inv_det = f.inv(det(f, a)).expect("invertible");
    [
        f.mul(a[3], inv_det),
        f.mul(f.neg(a[1]), inv_det),
        f.mul(f.neg(a[2]), inv_det),
        f.mul(a[0], inv_det),
    ]
}

fn order(f: &FiniteField, a: &M2, cap: u64) -> u64 {
    let mut x = *a;
    let mut k = 1;
    while x != IDENTITY {
        x = mul(f, &x, a);
        k += 1;
        assert!(k <= cap, "element order exceeds the group order");
    }
    k
}

/// Semisimple conjugacy classes of SL_2(F_q) or Sp_2(F_q) by orbit
/// computation, with a check that characteristic polynomials index them
/// bijectively: one class for each x² + b·x + 1.
pub fn matrix_census_tiny(group: &GroupSpec, f: &FiniteField) -> Result<MatrixCensus> {
    if !matches!(group, GroupSpec::SL(2) | GroupSpec::Sp(2)) {
        return Err(Error::invalid("matrix census supports SL(2) and Sp(2) only"));
    }
    let q = f.q() as u64;
    let expected_order = q * (q * q - 1);
    if expected_order > GROUP_ORDER_BUDGET {
        return Err(Error::budget("matrix group enumeration", expected_order as u128, GROUP_ORDER_BUDGET as u128));
    }
    let mut elements = Vec::new();
    for idx in 0..q.pow(4) {
        let a = [(idx % q) as u32, (idx / q % q) as u32, (idx / (q * q) % q) as u32, (idx / (q * q * q)) as u32];
        if in_group(f, group, &a) {
            elements.push(a);
        }
    }
    let group_order = elements.len() as u64;
    if group_order != expected_order {
        return Err(Error::certificate("group order", format!("found {group_order}, expected {expected_order}")));
    }
    let p = f.p() as u64;
    let semisimple: Vec<M2> = elements.iter().copied().filter(|a| order(f, a, group_order) % p != 0).collect();
    let inverses: Vec<M2> = elements.iter().map(|g| inverse(f, g)).collect();
    let mut class_of: HashMap<M2, usize> = HashMap::new();
    let mut representatives = Vec::new();
    for x in &semisimple {
        if class_of.contains_key(x) {
            continue;
        }
        let id = representatives.len();
        representatives.push(*x);
        for (g, gi) in elements.iter().zip(&inverses) {
            class_of.insert(mul(f, &mul(f, g, x), gi), id);
        }
    }
    let mut by_charpoly: BTreeMap<FPoly, usize> = BTreeMap::new();
    for r in &representatives {
        let charpoly = vec![det(f, r), f.neg(f.add(r[0], r[3])), 1];
        *by_charpoly.entry(charpoly).or_insert(0) += 1;
    }
    let census = MatrixCensus {
        group_order,
        semisimple_elements: semisimple.len() as u64,
        classes: representatives.len(),
        by_charpoly,
    };
    let bijective = census.by_charpoly.len() == q as usize
        && census.by_charpoly.iter().all(|(c, &k)| k == 1 && c[0] == 1 && c[2] == 1);
    if !bijective {
        return Err(Error::certificate(
            "class/charpoly bijection",
            format!("{} classes over {} characteristic polynomials", census.classes, census.by_charpoly.len()),
        ));
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sl_census;

    #[test]
    fn sl2_small_fields() {
        let f3 = FiniteField::new(3).unwrap();
        let c = matrix_census_tiny(&GroupSpec::SL(2), &f3).unwrap();
        assert_eq!(c.group_order, 24);
        assert_eq!(c.classes, 3);
        let f2 = FiniteField::new(2).unwrap();
        assert_eq!(matrix_census_tiny(&GroupSpec::SL(2), &f2).unwrap().classes, 2);
    }

    #[test]
    fn sp2_equals_sl2_and_polynomial_census() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            let sl = matrix_census_tiny(&GroupSpec::SL(2), &f).unwrap();
            let sp = matrix_census_tiny(&GroupSpec::Sp(2), &f).unwrap();
            assert_eq!(sl, sp);
            let poly_total: u64 = sl_census(2, &f).unwrap().values().sum();
            assert_eq!(sl.classes as u64, poly_total);
        }
    }

    #[test]
    fn rejects_out_of_scope() {
        let f = FiniteField::new(3).unwrap();
        assert!(matrix_census_tiny(&GroupSpec::SL(3), &f).is_err());
        let big = FiniteField::new(49).unwrap();
        assert!(matches!(matrix_census_tiny(&GroupSpec::SL(2), &big), Err(Error::BudgetExceeded { .. })));
    }
}
