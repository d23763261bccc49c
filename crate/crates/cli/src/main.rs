//! Batch front end: every command reads JSON or short textual arguments and
//! prints exact results. Exit codes: 1 failed check, 2 malformed input,
//! 3 budget exceeded.

use std::fmt::Write as _;
use std::process::ExitCode;

use artin_tate::classsum::{
    check_arity, class_sum, sl_prime_certificate, sl_script_p, sp_certificate, sp_experimental, MAX_ARITY,
};
use artin_tate::classtypes::tables::table;
use artin_tate::classtypes::{enumerate_sl_types, enumerate_sp_types, enumerate_sp_types_all, Parity};
use artin_tate::exactalg::fmt_rational;
use artin_tate::geometry::CurveDatum;
use artin_tate::lefschetz::LefschetzFunction;
use artin_tate::lfun::l_value;
use artin_tate::motive::{motive_of, GroupSpec};
use artin_tate::oracle::{sl_census, sp_census, FiniteField};
use artin_tate::parse;
use artin_tate::verify::{run_suite, Suite};
use artin_tate::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "artin-tate", version, about = "Exact Artin-Tate motives, L-values and class-sum certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print det(1 - t·Fr | M_G) for a group spec given as JSON or a JSON file.
    Motive { group: String },
    /// L_{S,T}(M_G) at s = 0 for a curve datum and a group spec.
    Lfun { curve: String, group: String },
    /// Class sum over semisimple classes, T empty.
    ClassSum {
        curve: String,
        /// SL:n or Sp:2n
        #[arg(long)]
        group: String,
        /// Replace the curve's q (the Weil numerator must stay valid).
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        base_change: Option<u32>,
    },
    /// Emit a symbolic certificate as JSON.
    Certificate {
        #[arg(long, value_enum)]
        family: Family,
        /// sl-prime: l,r; sl-general: n,r[,n_prime,d_prime]; sp and sp-evidence: n,parity,r
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = MAX_ARITY)]
        max_arity: usize,
    },
    /// Oracle class counts by type, as CSV.
    Census {
        #[arg(long)]
        group: String,
        #[arg(long)]
        q: u64,
        /// Include Sp types with general-linear blocks.
        #[arg(long)]
        all_types: bool,
    },
    /// Operations on Lefschetz-type functions; prints the function and its first values.
    Lefschetz {
        #[arg(long, value_enum)]
        op: LefschetzOp,
        /// Expression such as "chi2 + 3*2^m - 1".
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        n: Option<u64>,
        /// Place degrees for place-product, e.g. "1,2".
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long, default_value_t = 12)]
        terms: u64,
    },
    /// Run the acceptance battery.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    SlPrime,
    SlGeneral,
    Sp,
    /// General Sp_2n assembly; evidence only, no divisibility proof.
    SpEvidence,
}

#[derive(Clone, Copy, ValueEnum)]
enum LefschetzOp {
    Chi,
    #[value(name = "fN")]
    FN,
    PlaceProduct,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Tables,
    Identities,
}

/// Values of m printed by `lefschetz`; evaluation cost grows with m.
const MAX_TERMS: u64 = 200;

enum Failure {
    /// A check or verification did not hold.
    Check(String),
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Json(_) | Error::Parse(_) | Error::InvalidArgument(_) => Failure::Input(e.to_string()),
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

/// Inline JSON when the argument starts with '{' or '"', else a file path.
fn json_arg(arg: &str) -> Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('"') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))
}

fn curve_arg(arg: &str) -> Result<CurveDatum, Failure> {
    Ok(CurveDatum::from_json(&json_arg(arg)?)?)
}

fn group_json(arg: &str) -> Result<GroupSpec, Failure> {
    Ok(GroupSpec::from_json(&json_arg(arg)?)?)
}

fn parity_param(p: &std::collections::BTreeMap<String, String>) -> Result<Parity, Failure> {
    match p.get("parity").map(String::as_str) {
        Some("odd") => Ok(Parity::Odd),
        Some("even") => Ok(Parity::Even),
        other => Err(Failure::Input(format!("parity must be odd or even, got {other:?}"))),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Motive { group } => {
            let g = group_json(&group)?;
            writeln!(out, "{}", motive_of(&g)).unwrap();
        }
        Command::Lfun { curve, group } => {
            let v = l_value(&motive_of(&group_json(&group)?), &curve_arg(&curve)?)?;
            writeln!(out, "{}", fmt_rational(&v)).unwrap();
        }
        Command::ClassSum { curve, group, q, base_change } => {
            let mut c = curve_arg(&curve)?;
            if let Some(q) = q {
                c = CurveDatum::new(q, c.weil_numerator, c.s_degrees, c.t_degrees)?;
            }
            if let Some(m) = base_change {
                c = c.base_change(m)?;
            }
            let v = class_sum(&parse::group_arg(&group)?, &c)?;
            writeln!(out, "{}", fmt_rational(&v)).unwrap();
        }
        Command::Certificate { family, params, max_arity } => {
            let p = parse::params(&params)?;
            let r: usize = parse::param(&p, "r")?;
            check_arity(r, max_arity)?;
            let json = match family {
                Family::SlPrime => sl_prime_certificate(parse::param(&p, "l")?, r)?.to_json(),
                Family::SlGeneral => {
                    let np = if p.contains_key("n_prime") { parse::param(&p, "n_prime")? } else { 1 };
                    let dp = if p.contains_key("d_prime") { parse::param(&p, "d_prime")? } else { 1 };
                    sl_script_p(parse::param(&p, "n")?, r, np, dp)?.to_json()
                }
                Family::Sp => sp_certificate(parse::param(&p, "n")?, parity_param(&p)?, r)?.to_json(),
                Family::SpEvidence => {
                    let ev = sp_experimental(parse::param(&p, "n")?, parity_param(&p)?, r)?;
                    serde_json::to_string_pretty(&ev).expect("evidence serializes")
                }
            };
            writeln!(out, "{json}").unwrap();
        }
        Command::Census { group, q, all_types } => {
            let f = FiniteField::new(q)?;
            match parse::group_arg(&group)? {
                GroupSpec::SL(n) => {
                    let census = sl_census(n, &f)?;
                    writeln!(out, "type,count").unwrap();
                    for t in enumerate_sl_types(n) {
                        writeln!(out, "{},{}", t.label(), census.get(&t).copied().unwrap_or(0)).unwrap();
                    }
                }
                GroupSpec::Sp(m) => {
                    let n = m / 2;
                    let parity = Parity::of(q);
                    let census = sp_census(n, &f)?;
                    let rows = table(n, parity);
                    let mut types = if all_types { enumerate_sp_types_all(n, parity) } else { enumerate_sp_types(n, parity) };
                    // Table order first, then types the tables do not list.
                    let position = |t: &_| rows.iter().position(|r| &r.ty == t).unwrap_or(usize::MAX);
                    types.sort_by_key(|t| position(t));
                    writeln!(out, "label,type,count").unwrap();
                    for t in types {
                        let label = rows.iter().find(|r| r.ty == t).map_or("-", |r| r.label);
                        writeln!(out, "{label},{},{}", t.label(), census.get(&t).copied().unwrap_or(0)).unwrap();
                    }
                }
                g => return Err(Failure::Input(format!("census supports SL:n and Sp:2n, got {}", g.to_json()))),
            }
        }
        Command::Lefschetz { op, f, n, degrees, terms } => {
            if terms > MAX_TERMS {
                return Err(Failure::Budget(format!("--terms {terms} exceeds {MAX_TERMS}")));
            }
            let need = |o: Option<String>, name: &str| o.ok_or_else(|| Failure::Input(format!("--{name} is required")));
            let n_arg = |n: Option<u64>| n.ok_or_else(|| Failure::Input("--n is required".into()));
            let g = match op {
                LefschetzOp::Chi => LefschetzFunction::chi(n_arg(n)?)?,
                LefschetzOp::FN => parse::lefschetz_expr(&need(f, "f")?)?.f_n_transform(n_arg(n)?)?,
                LefschetzOp::PlaceProduct => {
                    let degs = parse::degree_list(&need(degrees, "degrees")?)?;
                    parse::lefschetz_expr(&need(f, "f")?)?.place_product(&degs)?
                }
            };
            writeln!(out, "f(m) = {g}").unwrap();
            writeln!(out, "m,value").unwrap();
            for m in 1..=terms {
                writeln!(out, "{m},{}", g.evaluate(m)).unwrap();
            }
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Tables => Suite::Tables,
                SuiteArg::Identities => Suite::Identities,
            };
            let reports = run_suite(suite);
            for r in &reports {
                writeln!(out, "{}", r.line()).unwrap();
            }
            let failed: Vec<u8> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
            if !failed.is_empty() {
                print!("{out}");
                return Err(Failure::Check(format!("criteria {failed:?} failed")));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Check(m) => (1, m),
                Failure::Input(m) => (2, m),
                Failure::Budget(m) => (3, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
