//! The `okcas` command line.
//!
//! [`run`] never touches the process streams; it returns the text that
//! should be written and the exit code, so the binary and the tests share it.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::casimir::{casimir_eig_matrix, casimir_eig_sum, restricted_casimir, GLWeight};
use crate::error::{Error, Result};
use crate::expansion::expand;
use crate::okounkov::{okounkov_poly, OkounkovParams, SpecializationParams};
use crate::partitions::{y_lambda, Partition};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::verify::{run_suite, Bounds, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "okcas",
    version,
    about = "Exact BC interpolation polynomials and Casimir eigenvalues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// P_lambda(x; tau; alpha) in r variables, or its value at a point.
    Okounkov {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Comma-separated point x_1,...,x_r.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Eigenvalue of C_k on the module with the given highest weight.
    Casimir {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Matrix)]
        method: Method,
    },
    /// Restricted Casimir polynomial C_k(x_1..x_r).
    Restricted {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients b_mu of P_lambda(mu+rho; 1; s-(n-1)/2) = sum b_mu C_{2mu}.
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        json: bool,
    },
    /// Run built-in consistency checks.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = Bounds::default().max_weight)]
        max_weight: u32,
        #[arg(long, default_value_t = Bounds::default().max_rank)]
        max_rank: usize,
    },
    /// The hook constant y_lambda = (-4)^|lambda| / prod hooks.
    Ylambda {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Matrix,
    Scheunert,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Topdegree,
    Theorem,
    Vanishing,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `3,1`; the empty string and `0` both mean the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = t
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid partition '{s}'")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Partition::new(parts)
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Sizes the global thread pool from `OKCAS_THREADS` when set.
pub fn init_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("OKCAS_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ExpansionFailed(_) | Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut out = CliOutput::default();
    match dispatch(cli.command, &mut out) {
        Ok(code) => out.code = code,
        Err(f) => {
            out.code = f.code;
            let _ = writeln!(out.stderr, "error: {}", f.message);
        }
    }
    out
}

fn dispatch(cmd: Command, out: &mut CliOutput) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::Okounkov {
            lambda,
            r,
            tau,
            alpha,
            eval,
            json,
        } => {
            let lambda = parse_partition(&lambda)?;
            let params = OkounkovParams::new(r, parse_rational(&tau)?, parse_rational(&alpha)?);
            if lambda.len() > r {
                let _ = writeln!(
                    out.stderr,
                    "warning: {lambda} has more than r={r} parts; the polynomial is zero"
                );
            }
            let poly = okounkov_poly(&lambda, &params)?;
            match eval {
                Some(point) => {
                    let point = parse_rational_list(&point)?;
                    let v = poly.eval(&point)?;
                    if json {
                        let _ = writeln!(out.stdout, "{}", json!({ "value": format_rational(&v) }));
                    } else {
                        let _ = writeln!(out.stdout, "{}", format_rational(&v));
                    }
                }
                None if json => {
                    let _ = writeln!(out.stdout, "{}", poly.to_json());
                }
                None => {
                    let _ = writeln!(out.stdout, "{poly}");
                }
            }
            Ok(0)
        }
        Command::Casimir { weight, k, method } => {
            let weight = GLWeight::new(parse_rational_list(&weight)?);
            match method {
                Method::Matrix => {
                    let _ = writeln!(
                        out.stdout,
                        "{}",
                        format_rational(&casimir_eig_matrix(&weight, k))
                    );
                }
                Method::Scheunert => {
                    let _ = writeln!(
                        out.stdout,
                        "{}",
                        format_rational(&casimir_eig_sum(&weight, k)?)
                    );
                }
                Method::Both => {
                    let m = casimir_eig_matrix(&weight, k);
                    let s = casimir_eig_sum(&weight, k)?;
                    let _ = writeln!(out.stdout, "{}", format_rational(&m));
                    let _ = writeln!(out.stdout, "{}", format_rational(&s));
                    if m != s {
                        return Err(Failure {
                            code: 1,
                            message: "matrix and Scheunert eigenvalues differ".into(),
                        });
                    }
                }
            }
            Ok(0)
        }
        Command::Restricted { k, n, r, json } => {
            let poly = restricted_casimir(k, n, r)?;
            if json {
                let _ = writeln!(out.stdout, "{}", poly.to_json());
            } else {
                let _ = writeln!(out.stdout, "{poly}");
            }
            Ok(0)
        }
        Command::Expand {
            lambda,
            n,
            r,
            s,
            json,
        } => {
            let lambda = parse_partition(&lambda)?;
            let sp = SpecializationParams::new(n, r, parse_rational(&s)?)?;
            let res = expand(&lambda, &sp)?;
            if json {
                let _ = writeln!(out.stdout, "{}", res.to_json());
            } else {
                let mut keys: Vec<_> = res.coeffs.iter().collect();
                keys.sort_by(|a, b| b.0.weight().cmp(&a.0.weight()).then_with(|| b.0.cmp(a.0)));
                for (mu, b) in keys {
                    let _ = writeln!(out.stdout, "b{mu} = {}", format_rational(b));
                }
                let _ = writeln!(out.stdout, "residual_zero = {}", res.residual_zero);
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            max_weight,
            max_rank,
        } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Oracle => vec![Suite::Oracle],
                SuiteArg::Topdegree => vec![Suite::TopDegree],
                SuiteArg::Theorem => vec![Suite::Theorem],
                SuiteArg::Vanishing => vec![Suite::Vanishing],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let bounds = Bounds {
                max_weight,
                max_rank,
            };
            let mut failed = 0;
            let mut total = 0;
            for s in suites {
                for check in run_suite(s, bounds) {
                    total += 1;
                    if !check.passed {
                        failed += 1;
                    }
                    let _ = writeln!(out.stdout, "[{}] {check}", s.name());
                }
            }
            let _ = writeln!(out.stdout, "{} of {total} checks passed", total - failed);
            Ok(if failed == 0 { 0 } else { 1 })
        }
        Command::Ylambda { lambda } => {
            let lambda = parse_partition(&lambda)?;
            let _ = writeln!(out.stdout, "{}", format_rational(&y_lambda(&lambda)));
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_syntax() {
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition("0").unwrap(), Partition::empty());
        assert_eq!(parse_partition("3, 1").unwrap().parts(), &[3, 1]);
        assert!(parse_partition("1,3").is_err());
        assert!(parse_partition("a").is_err());
        assert!(parse_partition("-1").is_err());
    }
}
