//! The acceptance battery behind `verify`: ten exact checks, each with a
//! runtime bound. A criterion fails on the first mismatch and reports it.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::classsum::{class_sum, sl_prime_certificate, sl_script_p, sp_certificate, verify_sum_identity};
use crate::classtypes::tables::table;
use crate::classtypes::{count_sl, s_count, Parity};
use crate::error::Result;
use crate::exactalg::{divisors, fmt_rational, gcd_u64, rat_int};
use crate::geometry::{split_places, CurveDatum};
use crate::lefschetz::{CyclotomicRational, LefschetzFunction};
use crate::lfun::{l_value, lefschetz_fit, multiplicity_sum, ZPolynomial};
use crate::motive::{motive_of, GroupSpec};
use crate::oracle::{irreducible_monics, self_reciprocal_irreducible_census, sp_census, FiniteField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    /// Criteria resting on the transcribed class tables and counting formulas.
    Tables,
    /// Criteria that are exact identities of L-values and class sums.
    Identities,
}

impl Suite {
    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::All => (1..=10).collect(),
            Suite::Tables => vec![3, 4, 7],
            Suite::Identities => vec![1, 2, 5, 6, 8, 9, 10],
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    /// The computation agreed everywhere.
    pub correct: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub bound: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.correct && self.elapsed < self.bound
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let time = format!("{:.2}s / {}s", self.elapsed.as_secs_f64(), self.bound.as_secs());
        let slow = if self.correct && !self.passed() { " (over time bound)" } else { "" };
        format!("[{verdict}] {:>2} {:<28} {time}{slow}  {}", self.id, self.name, self.detail)
    }
}

/// A failed comparison, carried as the criterion's detail.
struct Mismatch(String);

impl From<crate::Error> for Mismatch {
    fn from(e: crate::Error) -> Self {
        Mismatch(e.to_string())
    }
}

type Outcome = std::result::Result<String, Mismatch>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), Mismatch> {
    if ok {
        Ok(())
    } else {
        Err(Mismatch(msg()))
    }
}

/// Id, name, runtime bound in seconds, check.
type Criterion = (u8, &'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 10] = [
    (1, "trivial L-value", 1, trivial_l_value),
    (2, "sum identity", 10, sum_identity),
    (3, "table census", 60, table_census),
    (4, "counting formulas", 30, counting_formulas),
    (5, "SL_l certificates", 30, sl_prime),
    (6, "SL_n integrality", 120, sl_integrality),
    (7, "Sp certificates", 120, sp_certificates),
    (8, "base-change law", 10, base_change_law),
    (9, "Lefschetz algebra", 10, lefschetz_algebra),
    (10, "multiplicity counts", 10, multiplicity_counts),
];

pub fn run_criterion(id: u8) -> Option<CriterionReport> {
    let &(id, name, secs, f) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (correct, detail) = match outcome {
        Ok(d) => (true, d),
        Err(Mismatch(d)) => (false, d),
    };
    Some(CriterionReport { id, name, correct, detail, elapsed, bound: Duration::from_secs(secs) })
}

pub fn run_suite(suite: Suite) -> Vec<CriterionReport> {
    suite.criteria().into_iter().filter_map(run_criterion).collect()
}

fn trivial_l_value() -> Outcome {
    let specs = [
        GroupSpec::SL(2),
        GroupSpec::SL(3),
        GroupSpec::SL(4),
        GroupSpec::SL(5),
        GroupSpec::Sp(4),
        GroupSpec::Sp(6),
        GroupSpec::GL(3),
        GroupSpec::Res(2, Box::new(GroupSpec::U(2))),
    ];
    let mut n = 0;
    for q in [2u64, 3, 4, 5, 7] {
        let c = CurveDatum::projective_line(q, &[1], &[1])?;
        for g in &specs {
            let v = l_value(&motive_of(g), &c)?;
            ensure(v.is_one(), || format!("{} at q = {q}: {}", g.to_json(), fmt_rational(&v)))?;
            n += 1;
        }
    }
    Ok(format!("{n} values equal 1"))
}

const QS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn sum_identity() -> Outcome {
    let mut groups: Vec<GroupSpec> = (1..=6).map(GroupSpec::SL).collect();
    groups.extend([GroupSpec::Sp(4), GroupSpec::Sp(6)]);
    for g in &groups {
        for q in QS {
            ensure(verify_sum_identity(g, q), || format!("{} at q = {q}", g.to_json()))?;
        }
    }
    Ok(format!("{} sums equal 1", groups.len() * QS.len()))
}

fn table_census() -> Outcome {
    let mut rows = 0;
    for (n, qs) in [(2u32, &[2u64, 3, 4, 5, 7][..]), (3, &[2, 3, 4][..])] {
        for &q in qs {
            let census = sp_census(n, &FiniteField::new(q)?)?;
            for row in table(n, Parity::of(q)) {
                let expected = row.count.eval_x(&rat_int(q))?;
                let found = census.get(&row.ty).copied().unwrap_or(0);
                ensure(expected == rat_int(found), || {
                    format!("Sp_{} {} at q = {q}: table {} census {found}", 2 * n, row.label, fmt_rational(&expected))
                })?;
                rows += 1;
            }
        }
    }
    Ok(format!("{rows} rows reproduced"))
}

fn counting_formulas() -> Outcome {
    let mut checked = 0;
    for two_n in [2u32, 4, 6, 8] {
        for q in [2u64, 3, 4, 5] {
            let census = self_reciprocal_irreducible_census(&FiniteField::new(q)?, two_n)?;
            let formula = s_count(two_n, q)?;
            ensure(formula == BigInt::from(census), || format!("S_{two_n}({q}): formula {formula}, census {census}"))?;
            checked += 1;
        }
    }
    for q in [2u64, 3, 4, 5, 7, 8] {
        let f = FiniteField::new(q)?;
        for n in (1..=5u32).filter(|&n| gcd_u64(n as u64, q - 1) == 1) {
            let target = if n % 2 == 0 { 1 } else { f.minus_one() };
            for d in divisors(n as u64) {
                let d = d as u32;
                let mut census = 0usize;
                for c in (1..f.q()).filter(|&c| f.pow(c, (n / d) as u64) == target) {
                    census += irreducible_monics(&f, d as usize, Some(c))?.len();
                }
                let formula = count_sl(n, d, q)?;
                ensure(formula == BigInt::from(census), || {
                    format!("N_{{{n},{d}}}({q}): formula {formula}, census {census}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} counts agree"))
}

fn sl_prime() -> Outcome {
    // Curves with J arity 0, 1, 2, 3.
    let curves: Vec<Vec<CurveDatum>> = vec![
        vec![CurveDatum::projective_line(2, &[1, 1], &[])?],
        vec![CurveDatum::projective_line(2, &[1, 2], &[])?],
        [-1i64, 0, 1].iter().map(|&a| CurveDatum::elliptic(2, a, &[1, 1], &[])).collect::<Result<_>>()?,
        [-1i64, 0, 1].iter().map(|&a| CurveDatum::elliptic(2, a, &[1, 2], &[])).collect::<Result<_>>()?,
    ];
    let mut evaluations = 0;
    for l in [2u32, 3, 5] {
        for r in 0..=3 {
            let cert = sl_prime_certificate(l, r)?;
            ensure(cert.check("H_1 - H_l divisible by Phi_l").is_some_and(|c| c.passed), || {
                format!("SL_{l} r = {r}: divisibility not recorded")
            })?;
            for c in &curves[r] {
                for m in 1..=3 {
                    let closed = cert.evaluate(c, m)?;
                    let direct = class_sum(&GroupSpec::SL(l), &c.base_change(m)?)?;
                    ensure(closed == direct, || {
                        format!("SL_{l} m = {m} a = {}: closed {} direct {}", c.weil_numerator, fmt_rational(&closed), fmt_rational(&direct))
                    })?;
                    evaluations += 1;
                }
            }
        }
    }
    Ok(format!("12 certificates, {evaluations} evaluations"))
}

fn sl_integrality() -> Outcome {
    let mut certificates = 0;
    let mut evaluations = 0;
    for n in 1..=8u32 {
        for (np, dp) in [(1u32, 1u32), (3, 1), (5, 5)] {
            if gcd_u64(dp as u64, n as u64) != 1 {
                continue;
            }
            for r in 0..=2 {
                let cert = sl_script_p(n, r, np, dp)?;
                ensure(cert.all_passed(), || format!("n = {n} (n′, d′) = ({np}, {dp}) r = {r}"))?;
                certificates += 1;
                if (np, dp) != (1, 1) || r == 0 {
                    continue;
                }
                for q in [2u64, 4, 8].into_iter().filter(|&q| gcd_u64(n as u64, q - 1) == 1) {
                    let c = match r {
                        1 => CurveDatum::projective_line(q, &[1, 2], &[])?,
                        _ => CurveDatum::elliptic(q, 1, &[1, 1], &[])?,
                    };
                    let closed = cert.evaluate(&c, 1)?;
                    let direct = class_sum(&GroupSpec::SL(n), &c)?;
                    ensure(closed == direct, || {
                        format!("SL_{n} q = {q} r = {r}: 𝒫 {} class sum {}", fmt_rational(&closed), fmt_rational(&direct))
                    })?;
                    evaluations += 1;
                }
            }
        }
    }
    Ok(format!("{certificates} certificates, {evaluations} evaluations"))
}

fn sp_certificates() -> Outcome {
    let mut checks = 0;
    let mut evaluations = 0;
    for n in [2u32, 3] {
        for parity in [Parity::Odd, Parity::Even] {
            let qs: &[u64] = match parity {
                Parity::Odd => &[3, 5, 7, 9],
                Parity::Even => &[2, 4, 8],
            };
            for r in 0..=3 {
                let cert = sp_certificate(n, parity, r)?;
                ensure(cert.all_passed(), || format!("Sp_{} {parity} r = {r}", 2 * n))?;
                checks += cert.checks.len();
                for &q in qs {
                    let c = match r {
                        0 => CurveDatum::projective_line(q, &[1, 1], &[])?,
                        1 => CurveDatum::projective_line(q, &[1, 2], &[])?,
                        2 => CurveDatum::elliptic(q, 1, &[1, 1], &[])?,
                        _ => CurveDatum::elliptic(q, 1, &[1, 2], &[])?,
                    };
                    let closed = cert.evaluate(&c, 1)?;
                    let direct = class_sum(&GroupSpec::Sp(2 * n), &c)?;
                    ensure(closed == direct, || {
                        format!("Sp_{} q = {q} r = {r}: 𝒫 {} class sum {}", 2 * n, fmt_rational(&closed), fmt_rational(&direct))
                    })?;
                    evaluations += 1;
                }
            }
        }
    }
    Ok(format!("16 certificates, {checks} checks, {evaluations} evaluations"))
}

fn base_change_law() -> Outcome {
    let curves = [
        CurveDatum::projective_line(3, &[1], &[1])?,
        CurveDatum::projective_line(2, &[1, 2], &[1])?,
        CurveDatum::elliptic(2, 1, &[1], &[1])?,
    ];
    let specs = [GroupSpec::SL(2), GroupSpec::SL(3), GroupSpec::Sp(4), GroupSpec::Res(2, Box::new(GroupSpec::U(2)))];
    let mut n = 0;
    for c in &curves {
        for g in &specs {
            let m = motive_of(g);
            let z = ZPolynomial::new(&m, c)?;
            // Z is built in ℤ[x, J]; it must reduce to an integer polynomial in x.
            z.reduce(1)?;
            for k in 1..=4 {
                let direct = l_value(&m.base_change(k)?, &c.base_change(k)?)?;
                let via_z = rat_int(z.evaluate(k)?);
                ensure(direct == via_z, || format!("{} m = {k}: Z {} L {}", g.to_json(), fmt_rational(&via_z), fmt_rational(&direct)))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} base changes agree"))
}

fn lefschetz_algebra() -> Outcome {
    let fs = [
        LefschetzFunction::chi(2)?,
        LefschetzFunction::chi(3)?,
        LefschetzFunction::constant(int(2)),
        LefschetzFunction::single_base(int(1), int(3)),
    ];
    let mut n = 0;
    for f in &fs {
        for big_n in [1u64, 2, 3, 4, 6, 12] {
            let g = f.f_n_transform(big_n)?;
            for m in 1..=5 * big_n {
                let l = big_n / gcd_u64(big_n, m) * m;
                let expected = f.evaluate(l).pow(gcd_u64(big_n, m));
                ensure(g.evaluate(m) == expected, || format!("f = {f}, N = {big_n}, m = {m}"))?;
                n += 1;
            }
        }
    }
    let f = &LefschetzFunction::chi(2)? + &LefschetzFunction::single_base(int(1), int(3));
    for degrees in [&[1u32, 1][..], &[2], &[2, 3]] {
        let product = f.place_product(degrees)?;
        for m in 1..=12u32 {
            let expected = split_places(degrees, m)
                .iter()
                .fold(CyclotomicRational::one(), |acc, &d| &acc * &f.evaluate((m * d) as u64));
            ensure(product.evaluate(m as u64) == expected, || format!("degrees {degrees:?}, m = {m}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} pointwise values agree"))
}

fn multiplicity_counts() -> Outcome {
    // SL_4 would need 36 base changes, past q^m < 2^64 for q = 4, 5.
    let groups = [GroupSpec::SL(2), GroupSpec::SL(3), GroupSpec::Sp(4), GroupSpec::Sp(6)];
    let center = |g: &GroupSpec, f: u64| match g {
        GroupSpec::SL(n) => gcd_u64(*n as u64, f - 1),
        _ => gcd_u64(2, f - 1),
    };
    let mut fits = 0;
    for g in &groups {
        let order = match g {
            GroupSpec::SL(n) => *n as u64,
            _ => 2,
        };
        for q in [2u64, 3, 4, 5] {
            let c = CurveDatum::projective_line(q, &[1], &[1])?;
            let fixed = multiplicity_sum(g, &c, true)?;
            ensure(fixed.is_one(), || format!("{} q = {q}: fixed χ gives {}", g.to_json(), fmt_rational(&fixed)))?;
            let all = multiplicity_sum(g, &c, false)?;
            let expected = rat_int(center(g, q) * (q - 1));
            ensure(all == expected, || format!("{} q = {q}: all χ gives {}", g.to_json(), fmt_rational(&all)))?;

            let mut bases = Vec::new();
            for o in 1..=order {
                for k in (0..o).filter(|&k| gcd_u64(k, o) == 1) {
                    for p in [1, q, q * q] {
                        bases.push(&CyclotomicRational::root_of_unity(o, k)? * &int(p));
                    }
                }
            }
            let len = (2 * bases.len()).max(8) as u32;
            let mut values: Vec<BigRational> = Vec::with_capacity(len as usize);
            for m in 1..=len {
                values.push(multiplicity_sum(g, &c.base_change(m)?, false)?);
            }
            let f = lefschetz_fit(&values, &bases)?;
            ensure(f.has_integer_coefficients(), || format!("{} q = {q}: fit {f} is not integral", g.to_json()))?;
            fits += 1;
        }
    }
    Ok(format!("{fits} sequences fitted"))
}

fn int(n: u64) -> CyclotomicRational {
    CyclotomicRational::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_partition_the_criteria() {
        let mut ids = Suite::Tables.criteria();
        ids.extend(Suite::Identities.criteria());
        ids.sort_unstable();
        assert_eq!(ids, Suite::All.criteria());
        assert!(run_criterion(11).is_none());
    }

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 9] {
            let r = run_criterion(id).unwrap();
            assert!(r.correct, "{}", r.line());
        }
    }

    #[test]
    fn report_line_marks_timeouts() {
        let r = CriterionReport {
            id: 4,
            name: "x",
            correct: true,
            detail: String::new(),
            elapsed: Duration::from_secs(5),
            bound: Duration::from_secs(1),
        };
        assert!(!r.passed());
        assert!(r.line().contains("over time bound"));
    }
}
