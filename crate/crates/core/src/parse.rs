//! Small textual grammars used on the command line. JSON inputs go through
//! `CurveDatum::from_json` and `GroupSpec::from_json` instead.
//!
//! Group shorthand: `SL:n`, `GL:n`, `U:n`, `Sp:2n`, `SO:2n+1`.
//! Lefschetz expressions: `+`/`-` separated terms, each `chiN`, `c*b^m`,
//! `b^m` or an integer `c`; b may be a parenthesized negative integer.
//! Parameter lists: `key=value` pairs separated by commas.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::lcm_u64;
use crate::lefschetz::{CyclotomicRational, LefschetzFunction, CONDUCTOR_CAP};
use crate::motive::GroupSpec;

/// Longest accepted textual input; keeps every parser linear and bounded.
pub const MAX_INPUT: usize = 4096;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn check_len(s: &str) -> Result<()> {
    if s.len() > MAX_INPUT {
        return Err(parse_err(format!("input longer than {MAX_INPUT} bytes")));
    }
    Ok(())
}

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| parse_err(format!("{what}: expected an integer, got {s:?}")))
}

pub fn group_arg(s: &str) -> Result<GroupSpec> {
    check_len(s)?;
    let (kind, n) = s.split_once(':').ok_or_else(|| parse_err(format!("group {s:?}: expected KIND:n")))?;
    let n: u32 = number(n, "group size")?;
    let g = match kind.trim() {
        "SL" => GroupSpec::SL(n),
        "GL" => GroupSpec::GL(n),
        "U" => GroupSpec::U(n),
        "Sp" => GroupSpec::Sp(n),
        "SO" => GroupSpec::SO(n),
        other => return Err(parse_err(format!("unknown group kind {other:?}"))),
    };
    g.validate()?;
    Ok(g)
}

/// Degrees of places, e.g. "1,2,2".
pub fn degree_list(s: &str) -> Result<Vec<u32>> {
    check_len(s)?;
    let out: Vec<u32> = s.split(',').map(|d| number(d, "degree")).collect::<Result<_>>()?;
    if out.contains(&0) {
        return Err(parse_err("place degrees must be positive"));
    }
    Ok(out)
}

pub fn params(s: &str) -> Result<BTreeMap<String, String>> {
    check_len(s)?;
    let mut out = BTreeMap::new();
    for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| parse_err(format!("parameter {pair:?}: expected key=value")))?;
        let k = k.trim();
        if k.is_empty() || out.insert(k.to_string(), v.trim().to_string()).is_some() {
            return Err(parse_err(format!("parameter {k:?} is empty or repeated")));
        }
    }
    Ok(out)
}

/// Value of `key` in a parameter list, parsed.
pub fn param<T: std::str::FromStr>(p: &BTreeMap<String, String>, key: &str) -> Result<T> {
    let v = p.get(key).ok_or_else(|| parse_err(format!("missing parameter {key}")))?;
    number(v, key)
}

/// Conductor bound for χ_N in parsed expressions.
const MAX_CHI: u64 = 120;

pub fn lefschetz_expr(s: &str) -> Result<LefschetzFunction> {
    check_len(s)?;
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_err("empty Lefschetz expression"));
    }
    let mut acc = LefschetzFunction::zero();
    for (negative, term) in split_terms(&compact)? {
        let mut f = term_value(term)?;
        // Sums live in the compositum; refuse before lifting past the cap.
        if lcm_u64(acc.conductor(), f.conductor()) > CONDUCTOR_CAP {
            return Err(parse_err(format!("combined conductor exceeds {CONDUCTOR_CAP}")));
        }
        if negative {
            f = -&f;
        }
        acc = &acc + &f;
    }
    Ok(acc)
}

/// Splits at top-level + and −, keeping the sign of each term.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err("unbalanced parentheses"));
                }
            }
            b'+' | b'-' if depth == 0 && i > 0 && !matches!(bytes[i - 1], b'*' | b'^') => {
                out.push((negative, &s[start..i]));
                negative = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err("unbalanced parentheses"));
    }
    out.push((negative, &s[start..]));
    // A leading sign stays inside the first term.
    out[0] = leading_sign(out[0].1);
    if out.iter().any(|(_, t)| t.is_empty()) {
        return Err(parse_err("empty term"));
    }
    Ok(out)
}

fn leading_sign(t: &str) -> (bool, &str) {
    match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    }
}

fn integer(s: &str) -> Result<i64> {
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    number(inner, "coefficient or base")
}

fn term_value(t: &str) -> Result<LefschetzFunction> {
    if t.is_empty() {
        return Err(parse_err("empty term"));
    }
    let (coef, rest) = match t.split_once('*') {
        Some((c, r)) => (integer(c)?, r),
        None => (1, t),
    };
    let c = CyclotomicRational::from_int(coef);
    if let Some(n) = rest.strip_prefix("chi") {
        let n: u64 = number(n, "chi order")?;
        if n == 0 || n > MAX_CHI {
            return Err(parse_err(format!("chi order must lie in 1..={MAX_CHI}")));
        }
        return Ok(LefschetzFunction::chi(n)?.scale(&c));
    }
    if let Some(base) = rest.strip_suffix("^m") {
        let b = integer(base)?;
        if b == 0 {
            return Err(parse_err("base 0 is not allowed"));
        }
        return Ok(LefschetzFunction::single_base(c, CyclotomicRational::from_int(b)));
    }
    if t.contains('*') {
        return Err(parse_err(format!("term {t:?}: expected c*b^m or c*chiN")));
    }
    Ok(LefschetzFunction::constant(CyclotomicRational::from_int(integer(rest)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(f: &LefschetzFunction, n: u64) -> Vec<String> {
        (1..=n).map(|m| f.evaluate(m).to_string()).collect()
    }

    #[test]
    fn groups() {
        assert_eq!(group_arg("SL:4").unwrap(), GroupSpec::SL(4));
        assert_eq!(group_arg("Sp:6").unwrap(), GroupSpec::Sp(6));
        assert!(group_arg("Sp:5").is_err());
        assert!(group_arg("SL4").is_err());
        assert!(group_arg("PGL:2").is_err());
        assert!(group_arg("SL:x").is_err());
    }

    #[test]
    fn lefschetz_terms() {
        let f = lefschetz_expr("chi2 + 3^m").unwrap();
        assert_eq!(values(&f, 4), ["3", "11", "27", "83"]);
        let g = lefschetz_expr("2*(-2)^m - 1").unwrap();
        assert_eq!(values(&g, 3), ["-5", "7", "-17"]);
        let h = lefschetz_expr("-2").unwrap();
        assert_eq!(values(&h, 2), ["-2", "-2"]);
        assert!(lefschetz_expr("-3*chi3").unwrap().equals(&LefschetzFunction::chi(3).unwrap().scale(&CyclotomicRational::from_int(-3))));
    }

    #[test]
    fn lefschetz_errors() {
        for bad in ["", "chi0", "0^m", "2*", "(3^m", "3^m)", "a", "2*3", "1++2", "chi99999", "chi97+chi101+chi103"] {
            assert!(lefschetz_expr(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn parameter_lists() {
        let p = params("l=3, r=2").unwrap();
        assert_eq!(param::<u32>(&p, "l").unwrap(), 3);
        assert!(param::<u32>(&p, "n").is_err());
        assert!(params("l=3,l=4").is_err());
        assert!(params("l").is_err());
        assert_eq!(degree_list("1,2,2").unwrap(), [1, 2, 2]);
        assert!(degree_list("1,0").is_err());
    }
}
