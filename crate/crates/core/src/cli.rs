//! Command-line front end. Exit codes: 0 success, 1 a check failed,
//! 2 bad usage or input.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::Value;

use crate::braid::{re_residual_at, BraidOperator, MatrixJson};
use crate::classification::{classify_matrix, enumerate_families, FamilyParams, SolutionFamily, Type1Eigen};
use crate::error::{usage, Error, Result};
use crate::rational::{check_generic_q, parse_rational, Rational};
use crate::re_system::first_violated;
use crate::spectral::{expected_char_poly, expected_spectrum};
use crate::{fixtures, oracle};

#[derive(Parser, Debug)]
#[command(
    name = "rechar",
    version,
    about = "Characters of the U_q(gl(n)) reflection equation algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the braid matrix S.
    Braid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print every solution family for n.
    Families {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check that a numeric matrix solves the reflection equation.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
        /// Deformation parameter, as "p" or "p/q".
        #[arg(long, value_parser = parse_q)]
        q: Rational,
    },
    /// Identify the family and parameters of a numeric solution.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
        /// Deformation parameter, as "p" or "p/q".
        #[arg(long, value_parser = parse_q)]
        q: Rational,
    },
    /// Print the eigenvalues of a family, optionally at given parameters.
    Spectrum {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        params: Option<PathBuf>,
    },
    /// Solve n = 2 or 3 from scratch and compare with the catalog.
    Oracle {
        #[arg(long)]
        n: usize,
        /// Deformation parameter, as "p" or "p/q".
        #[arg(long, value_parser = parse_q)]
        q: Rational,
    },
    /// Print the known matrices from the literature and whether they verify.
    Examples,
}

fn parse_q(s: &str) -> std::result::Result<Rational, String> {
    let q = parse_rational(s).map_err(|e| e.to_string())?;
    check_generic_q(&q).map_err(|e| e.to_string())?;
    Ok(q)
}

/// Parameters file: `{"lambda": "p/q", "mu": "p/q", "y": {"1": "p/q"}}`.
/// A Type 1 family may give `"e1"` and `"e2"` instead of `lambda`, `mu`.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct ParamsJson {
    lambda: Option<String>,
    mu: Option<String>,
    e1: Option<String>,
    e2: Option<String>,
    #[serde(default)]
    y: BTreeMap<usize, String>,
}

fn params_for(f: &SolutionFamily, p: &ParamsJson) -> Result<FamilyParams> {
    let r = |s: &Option<String>| s.as_deref().map(parse_rational).transpose();
    let y =
        p.y.iter()
            .map(|(&i, v)| Ok((i, parse_rational(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
    let (lambda, mu, e1, e2) = (r(&p.lambda)?, r(&p.mu)?, r(&p.e1)?, r(&p.e2)?);
    match f {
        SolutionFamily::Type1 { .. } => {
            let eigen = match (lambda, mu, e1, e2) {
                (Some(lambda), Some(mu), None, None) => Type1Eigen::Roots { lambda, mu },
                (None, None, Some(e1), Some(e2)) => Type1Eigen::Symmetric { e1, e2 },
                _ => return Err(usage!("Type 1 parameters need either lambda and mu, or e1 and e2")),
            };
            Ok(FamilyParams::Type1 { eigen, y })
        }
        SolutionFamily::Type2 { .. } => match (lambda, mu, e1, e2) {
            (Some(lambda), None, None, None) => Ok(FamilyParams::Type2 { lambda, y }),
            _ => Err(usage!("Type 2 parameters need lambda only")),
        },
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| usage!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path, n: usize, q: &Rational) -> Result<crate::matrix::RatMatrix> {
    let m: MatrixJson = read_json(path)?;
    if m.n != n {
        return Err(usage!("--n {n} but {} has n = {}", path.display(), m.n));
    }
    m.to_numeric(Some(q))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unsupported(_) | Error::NoMatchingFamily(_) => 1,
        _ => 2,
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(|e| usage!("write failed: {e}"));
    match cmd {
        Command::Braid { n, json } => {
            let s = BraidOperator::build(n)?;
            if json {
                let rows = MatrixJson::from_scalars(s.matrix()).rows;
                w(
                    out,
                    serde_json::to_string_pretty(&MatrixJson { n, rows }).expect("matrices serialize"),
                )?;
            } else {
                w(out, s.matrix().to_string().trim_end().to_string())?;
            }
            Ok(0)
        }
        Command::Families { n, json } => {
            if n == 0 {
                return Err(usage!("n must be at least 1"));
            }
            let fams = enumerate_families(n);
            if json {
                w(out, serde_json::to_string_pretty(&fams).expect("families serialize"))?;
            } else {
                for f in &fams {
                    w(out, f.to_string())?;
                }
            }
            Ok(0)
        }
        Command::Verify { n, input, q } => {
            let a = read_matrix(&input, n, &q)?;
            if re_residual_at(&a, &q)?.is_zero() {
                w(out, "residual: zero".into())?;
                Ok(0)
            } else {
                let tag = first_violated(&a, &q)?
                    .map(|t| t.to_string())
                    .unwrap_or_else(|| "none".into());
                w(out, format!("residual: nonzero (first violated equation: {tag})"))?;
                Ok(1)
            }
        }
        Command::Classify { n, input, q } => {
            let a = read_matrix(&input, n, &q)?;
            w(out, pretty(&classify_matrix(&a, &q)?.to_json()))?;
            Ok(0)
        }
        Command::Spectrum { family, params } => {
            let f: SolutionFamily = read_json(&family)?;
            let spectrum = expected_spectrum(&f);
            let Some(path) = params else {
                w(out, pretty(&spectrum.to_json()))?;
                return Ok(0);
            };
            let p = params_for(&f, &read_json(&path)?)?;
            crate::classification::instantiate(&f, &p)?;
            match spectrum.instantiate(&p) {
                Ok(s) => w(out, pretty(&s.to_json()))?,
                Err(Error::Parameter(_)) => {
                    // eigenvalues only known through e1, e2
                    w(
                        out,
                        format!("characteristic polynomial: {}", expected_char_poly(&f, &p)?),
                    )?
                }
                Err(e) => return Err(e),
            }
            Ok(0)
        }
        Command::Oracle { n, q } => {
            let report = oracle::compare_with_catalog(n, &q, &enumerate_families(n))?;
            w(out, pretty(&report.to_json()))?;
            Ok(if report.is_complete() { 0 } else { 1 })
        }
        Command::Examples => {
            let mut all_ok = true;
            for f in fixtures::all(6) {
                let reproduced = fixtures::reproduces(&f)?;
                let verified = fixtures::verifies(&f)?;
                all_ok &= reproduced && verified;
                w(
                    out,
                    format!(
                        "{}  family: {}  reproduced: {reproduced}  residual zero: {verified}",
                        f.name, f.family
                    ),
                )?;
                w(out, f.matrix.entries().to_string().trim_end().to_string())?;
            }
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
