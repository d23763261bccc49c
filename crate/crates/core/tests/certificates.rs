//! Certificates against direct class sums on random curve data.

use artin_tate::classsum::{class_sum, sl_prime_certificate, sp_certificate, SymbolicCertificate};
use artin_tate::classtypes::Parity;
use artin_tate::geometry::CurveDatum;
use artin_tate::motive::GroupSpec;
use proptest::prelude::*;

/// Elliptic datum with a trace inside the Hasse bound.
fn elliptic() -> impl Strategy<Value = CurveDatum> {
    prop::sample::select(vec![2u64, 3, 4, 5]).prop_flat_map(|q| {
        let bound = (2.0 * (q as f64).sqrt()).floor() as i64;
        (-bound..=bound).prop_map(move |a| CurveDatum::elliptic(q, a, &[1, 1], &[]).unwrap())
    })
}

fn arity(c: &CurveDatum) -> usize {
    c.j_poly().unwrap().degree().unwrap_or(0)
}

fn agrees(cert: &SymbolicCertificate, g: &GroupSpec, c: &CurveDatum, m: u32) -> bool {
    let direct = class_sum(g, &c.base_change(m).unwrap()).unwrap();
    cert.evaluate(c, m).unwrap() == direct
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sl_prime_certificate_evaluates_to_the_class_sum(c in elliptic(), l in 2u32..=3, m in 1u32..=2) {
        let cert = sl_prime_certificate(l, arity(&c)).unwrap();
        prop_assert!(agrees(&cert, &GroupSpec::SL(l), &c, m));
    }

    #[test]
    fn sp4_certificate_evaluates_to_the_class_sum(c in elliptic(), m in 1u32..=2) {
        let qm = c.q.pow(m);
        let cert = sp_certificate(2, Parity::of(qm), arity(&c)).unwrap();
        prop_assert!(agrees(&cert, &GroupSpec::Sp(4), &c, m));
    }
}
