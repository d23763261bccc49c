//! Evaluation of a polynomial symmetric in a block of α-variables at the
//! root multiset of a monic integer polynomial, without computing roots.
//! Reduction runs against the Cauchy modules of the polynomial, which form a
//! triangular basis of the ideal of relations between the roots.

use super::intpoly::IntPoly;
use super::sympoly::{poly_divrem, SymPoly, Var};
use crate::error::{Error, Result};

/// Replaces the variables `block` by the roots of the monic `w`
/// (deg w = block.len()). The result no longer contains those variables;
/// if it would, `p` was not symmetric in them.
pub fn reduce_symmetric(p: &SymPoly, block: &[usize], w: &IntPoly) -> Result<SymPoly> {
    let r = reduce_modulo_roots(p, block, w)?;
    if let Some(&v) = block.iter().find(|&&v| r.contains_var(Var::A(v))) {
        return Err(Error::NotSymmetric(Var::A(v).to_string()));
    }
    Ok(r)
}

/// Normal form of `p` modulo the relations between the roots of the monic
/// `w` in the variables `block`. Reduction commutes with products, so partial
/// products may be reduced as they are built.
pub fn reduce_modulo_roots(p: &SymPoly, block: &[usize], w: &IntPoly) -> Result<SymPoly> {
    if !w.is_monic() {
        return Err(Error::NotMonic(w.to_string()));
    }
    if w.deg() != block.len() {
        return Err(Error::invalid(format!(
            "block of {} variables cannot carry the {} roots of {w}",
            block.len(),
            w.deg()
        )));
    }
    if block.is_empty() {
        return Ok(p.clone());
    }
    let modules = cauchy_modules(p.nvars(), block, w)?;
    let mut r = p.clone();
    for (j, c) in modules.iter().enumerate().rev() {
        r = poly_divrem(&r, c, Var::A(block[j]))?.1;
    }
    Ok(r)
}

/// C_1(v_1) = w(v_1), C_{j+1} = (C_j(.., v_{j+1}) - C_j(.., v_j)) / (v_{j+1} - v_j).
fn cauchy_modules(n: usize, block: &[usize], w: &IntPoly) -> Result<Vec<SymPoly>> {
    let v0 = SymPoly::var(n, Var::A(block[0]));
    let mut c = SymPoly::zero(n);
    for coef in w.coeffs().iter().rev() {
        c = &(&c * &v0) + &SymPoly::constant(n, coef.clone());
    }
    let mut out = vec![c];
    for j in 1..block.len() {
        let prev = out.last().unwrap();
        let (vj, vn) = (block[j - 1], block[j]);
        let shifted = prev.swap_vars(vj, vn);
        let diff = &shifted - prev;
        let lin = &SymPoly::var(n, Var::A(vn)) - &SymPoly::var(n, Var::A(vj));
        let (q, r) = poly_divrem(&diff, &lin, Var::A(vn))?;
        debug_assert!(r.is_zero());
        out.push(q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn xp(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn elementary_symmetric_values() {
        // roots of x^2 - 3x + 2 are 1, 2
        let w = xp(&[2, -3, 1]);
        let a = SymPoly::var(2, Var::A(0));
        let b = SymPoly::var(2, Var::A(1));
        let sum = reduce_symmetric(&(&a + &b), &[0, 1], &w).unwrap();
        assert_eq!(sum, SymPoly::constant(2, 3));
        let sq = &(&a * &a) + &(&b * &b);
        assert_eq!(reduce_symmetric(&sq, &[0, 1], &w).unwrap(), SymPoly::constant(2, 5));
        assert!(matches!(reduce_symmetric(&a, &[0, 1], &w), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn product_over_roots_matches_resultant() {
        // Π_{w(α)=0} (1 - α x) for w = x^3 - x + 5 equals rev(w)
        let w = xp(&[5, -1, 0, 1]);
        let mut prod = SymPoly::one(3);
        for i in 0..3 {
            let f = &SymPoly::one(3) - &(&SymPoly::var(3, Var::A(i)) * &SymPoly::var(3, Var::X));
            prod = &prod * &f;
        }
        let r = reduce_symmetric(&prod, &[0, 1, 2], &w).unwrap();
        assert_eq!(r.as_x_poly().unwrap(), w.reverse());
        for x0 in -2..=2 {
            let g = xp(&[1, -x0]);
            let res = crate::exactalg::resultant(&w, &g).unwrap();
            assert_eq!(r.as_x_poly().unwrap().eval(&BigInt::from(x0)), res);
        }
    }

    #[test]
    fn blocks_reduce_independently() {
        // block {a1} at roots of x - 2, block {a2, a3} at roots of x^2 + 1
        let w1 = xp(&[-2, 1]);
        let w2 = xp(&[1, 0, 1]);
        let a = |i| SymPoly::var(3, Var::A(i));
        let p = &(&a(0) * &(&a(1) + &a(2))) + &(&(&a(1) * &a(2)) * &SymPoly::var(3, Var::X));
        let r = reduce_symmetric(&p, &[0], &w1).unwrap();
        let r = reduce_symmetric(&r, &[1, 2], &w2).unwrap();
        assert_eq!(r, SymPoly::var(3, Var::X));
    }
}
