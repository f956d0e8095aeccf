//! `weakexc` command-line front end.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use weakexc::circulant::{nonvanishing_scan, Circulant, DetMethod};
use weakexc::classify::{classification_table_with, TableOptions};
use weakexc::cyclotomic::{vanishing_sum_search, w_membership};
use weakexc::exactmath::{cyclotomic_poly, factorize, is_prime_u64, resultant, IntPoly};
use weakexc::monomial::DiagonalGroup;
use weakexc::semiinv::{verdict_for, Verdict, VerdictReport};
use weakexc::Error;

const EXIT_NOT_WEAKLY_EXCEPTIONAL: u8 = 10;
const EXIT_INVALID_GROUP: u8 = 2;

#[derive(Parser)]
#[command(name = "weakexc", version, about = "Monomial groups, circulant norms and weak exceptionality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Elimination,
    Eigenproduct,
    NormFactored,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Candidate cycle orders n per degree d for prime dimension q.
    Table {
        #[arg(long)]
        q: u64,
        /// Stop after this degree.
        #[arg(long)]
        max_d: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Compute on a single worker.
        #[arg(long)]
        sequential: bool,
    },
    /// Decide weak exceptionality of D ⋊ C_q from a group file.
    ///
    /// Only the shape D ⋊ C_q with the standard cyclic shift is covered;
    /// larger permutation parts are outside the criterion.
    Verdict {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Determinant of the circulant with the given first row.
    Circdet {
        #[arg(long)]
        q: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        coeffs: Vec<BigInt>,
        #[arg(long, value_enum, default_value = "elimination")]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// |Res(Phi_q, f)| for f = a1 + a2 x + ...
    Norm {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        coeffs: Vec<BigInt>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Whether n roots of unity of order dividing m can sum to zero.
    Wm {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Also search for an explicit vanishing sum.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustive nonsingularity check of small circulants.
    Scan {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Table {
            q,
            max_d,
            format,
            sequential,
        } => {
            let opts = TableOptions {
                max_d,
                parallel: !sequential,
                ..TableOptions::default()
            };
            let table = classification_table_with(q, opts)?;
            match format {
                Format::Text => print!("{table}"),
                Format::Json => println!("{}", serde_json::to_string(&table)?),
            }
        }
        Command::Verdict { group, format } => return verdict(&group, format),
        Command::Circdet {
            q,
            coeffs,
            method,
            format,
        } => circdet(q, coeffs, method, format)?,
        Command::Norm { q, coeffs, format } => norm(q, coeffs, format)?,
        Command::Wm {
            m,
            n,
            witness,
            format,
        } => wm(m, n, witness, format)?,
        Command::Scan { q, format } => {
            let report = nonvanishing_scan(q)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                Format::Text => {
                    println!("n={}", report.n);
                    println!("rows_checked={}", report.rows_checked);
                    println!("zero_rows={}", report.zero_rows.len());
                    println!("min_abs_det={}", report.min_abs_det);
                    println!("max_abs_det={}", report.max_abs_det);
                    println!("bound_violations={}", report.bound_violations.len());
                    println!("{}", if report.passed() { "PASS" } else { "FAIL" });
                }
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict(path: &PathBuf, format: Format) -> anyhow::Result<ExitCode> {
    let invalid = |msg: String| {
        eprintln!("invalid group: {msg}");
        Ok(ExitCode::from(EXIT_INVALID_GROUP))
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let group: DiagonalGroup = match serde_json::from_str(&text) {
        Ok(g) => g,
        Err(e) => return invalid(e.to_string()),
    };
    let report = match verdict_for(group) {
        Ok(r) => r,
        Err(Error::Group(e)) => return invalid(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&report)?),
        Format::Text => print_verdict(&report),
    }
    Ok(if report.verdict.is_weakly_exceptional() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NOT_WEAKLY_EXCEPTIONAL)
    })
}

fn print_verdict(report: &VerdictReport) {
    match &report.verdict {
        Verdict::WeaklyExceptional => println!("weakly exceptional"),
        Verdict::NotWeaklyExceptional { witness } => {
            println!("not weakly exceptional");
            println!(
                "semi-invariant orbit of exponents {} in degree {}",
                witness.composition, witness.degree
            );
            let chars: Vec<String> = witness.character.iter().map(u64::to_string).collect();
            println!("character {}", chars.join(","));
        }
    }
    println!("|D|={}", report.diagonal_order);
    println!("|G|={}", report.group_order);
    println!("(q-1)!|G|={}", report.supergroup_bound);
}

fn circdet(n: usize, coeffs: Vec<BigInt>, method: MethodArg, format: Format) -> anyhow::Result<()> {
    if coeffs.len() != n {
        bail!("expected {n} coefficients, got {}", coeffs.len());
    }
    let c = Circulant::new(coeffs);
    let methods: Vec<DetMethod> = match method {
        MethodArg::Elimination => vec![DetMethod::Elimination],
        MethodArg::Eigenproduct => vec![DetMethod::Eigenproduct],
        MethodArg::NormFactored => vec![DetMethod::NormFactored],
        MethodArg::All => DetMethod::ALL.to_vec(),
    };
    let mut results = Vec::new();
    for m in methods {
        match c.det(m) {
            Ok(d) => results.push((m, Some(d))),
            Err(Error::NotPrime(_)) if matches!(method, MethodArg::All) => results.push((m, None)),
            Err(e) => return Err(e.into()),
        }
    }
    match format {
        Format::Text => {
            for (m, d) in &results {
                match d {
                    Some(d) if results.len() == 1 => println!("{d}"),
                    Some(d) => println!("{m}\t{d}"),
                    None => println!("{m}\tn/a (n not prime)"),
                }
            }
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = results
                .iter()
                .map(|(m, d)| {
                    let v = d.as_ref().map_or(serde_json::Value::Null, |d| json!(d.to_string()));
                    (m.name().to_string(), v)
                })
                .collect();
            println!("{}", serde_json::to_string(&json!({ "n": n, "det": map }))?);
        }
    }
    Ok(())
}

fn norm(q: u64, coeffs: Vec<BigInt>, format: Format) -> anyhow::Result<()> {
    if !is_prime_u64(q) {
        bail!(Error::NotPrime(q));
    }
    let f = IntPoly::new(coeffs);
    let value = resultant(&cyclotomic_poly(q), &f)?.magnitude().clone();
    let factors = if value == 0u32.into() {
        None
    } else {
        Some(factorize(&value)?)
    };
    match format {
        Format::Text => match &factors {
            Some(fac) => println!("{value} = {fac}"),
            None => println!("0"),
        },
        Format::Json => {
            // primes as bare numbers when they fit, as in the table output
            let pairs: Vec<(serde_json::Value, u32)> = factors
                .iter()
                .flat_map(|f| f.pairs.iter())
                .map(|(p, e)| {
                    let p = u64::try_from(p).map_or_else(|_| json!(p.to_string()), |p| json!(p));
                    (p, *e)
                })
                .collect();
            let out = json!({ "q": q, "n": value.to_string(), "factors": pairs });
            println!("{}", serde_json::to_string(&out)?);
        }
    }
    Ok(())
}

fn wm(m: u64, n: u64, want_witness: bool, format: Format) -> anyhow::Result<()> {
    let member = w_membership(n, m)?;
    let witness = if want_witness && member {
        vanishing_sum_search(n, m)?
    } else {
        None
    };
    match format {
        Format::Text => {
            println!("{member}");
            if let Some(w) = &witness {
                let exps: Vec<String> = w.exponents.iter().map(u64::to_string).collect();
                println!("witness {}", exps.join(","));
            }
        }
        Format::Json => {
            let mut out = json!({ "m": m, "n": n, "member": member });
            if want_witness {
                out["witness"] = json!(witness.map(|w| w.exponents));
            }
            println!("{}", serde_json::to_string(&out)?);
        }
    }
    Ok(())
}
