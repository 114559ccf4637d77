//! `fabint` command-line front end.
//!
//! Exit codes: 0 success, 1 failed audit or NO_CONVERGENCE, 2 usage error,
//! 3 domain error, 4 I/O error.

mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fabint::family::{DEFAULT_A, DEFAULT_B, SQRT_3};
use fabint::verify::{self, Rep, Status, GR_TOL_CONFIRM, GR_TOL_REFUTE};
use fabint::{Params, ToleranceSpec};

const EXIT_FAILED: u8 = 1;
const EXIT_DOMAIN: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "fabint",
    version,
    about = "Evaluate and audit the integral family f(a, b)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one representation, or every applicable one.
    Eval(EvalArgs),
    /// Evaluate all representations and compare every pair.
    Verify(VerifyArgs),
    /// Audit a Cartesian grid of (a, b) points.
    Grid(GridArgs),
    /// Check the closed form and the table value for f(3/2, sqrt 3).
    GrCheck(GrCheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct Point {
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    /// Decimal value or the token `sqrt3`.
    #[arg(long, value_parser = parse_b, allow_negative_numbers = true)]
    b: f64,
}

#[derive(Args)]
struct Tolerance {
    /// Comparison tolerance for verdicts.
    #[arg(long, env = "GLASSER_TOL", value_parser = parse_tol, default_value_t = verify::DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    point: Point,
    /// Representation tag, or `all` for every applicable non-conjectural one.
    #[arg(long, default_value = "all", value_parser = parse_rep_choice)]
    rep: RepChoice,
    /// Absolute quadrature tolerance.
    #[arg(long, value_parser = parse_tol, default_value_t = ToleranceSpec::default().abs_tol)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1.5, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, default_value = "sqrt3", value_parser = parse_b, allow_negative_numbers = true)]
    b: f64,
    #[command(flatten)]
    tol: Tolerance,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct GridArgs {
    /// Comma-separated a values; defaults to the standard grid.
    #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true)]
    a_list: Vec<f64>,
    /// Comma-separated b values (decimals or `sqrt3`); defaults to the standard grid.
    #[arg(long, value_delimiter = ',', num_args = 1.., value_parser = parse_b, allow_negative_numbers = true)]
    b_list: Vec<f64>,
    #[command(flatten)]
    tol: Tolerance,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct GrCheckArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy)]
enum RepChoice {
    All,
    One(Rep),
}

fn parse_b(s: &str) -> Result<f64, String> {
    if s.eq_ignore_ascii_case("sqrt3") {
        return Ok(SQRT_3);
    }
    s.trim()
        .parse::<f64>()
        .map_err(|e| format!("expected a decimal or `sqrt3`: {e}"))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        Ok(t) => Err(format!("tolerance must be positive and finite, got {t}")),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_rep_choice(s: &str) -> Result<RepChoice, String> {
    if s == "all" {
        return Ok(RepChoice::All);
    }
    s.parse::<Rep>().map(RepChoice::One).map_err(|_| {
        let tags: Vec<_> = Rep::ALL.iter().map(|r| r.tag()).collect();
        format!(
            "unknown representation '{s}'; expected `all` or one of: {}",
            tags.join(", ")
        )
    })
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(e: impl ToString) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: e.to_string(),
        }
    }
}

/// Rendered output plus the exit code it should produce.
struct Outcome {
    text: String,
    code: u8,
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Grid(args) => cmd_grid(args),
        Command::GrCheck(args) => cmd_gr_check(args),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let written = match &outcome.out {
        Some(path) => {
            fs::write(path, &outcome.text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => io::stdout()
            .lock()
            .write_all(outcome.text.as_bytes())
            .map_err(|e| format!("cannot write standard output: {e}")),
    };
    if let Err(message) = written {
        eprintln!("error: {message}");
        return ExitCode::from(EXIT_IO);
    }
    ExitCode::from(outcome.code)
}

fn cmd_eval(args: EvalArgs) -> Result<Outcome, Failure> {
    let p = Params::new(args.point.a, args.point.b).map_err(Failure::domain)?;
    let quad = ToleranceSpec::new(args.tol, ToleranceSpec::default().max_level).map_err(Failure::domain)?;
    let reps: Vec<Rep> = match args.rep {
        RepChoice::All => Rep::ALL
            .into_iter()
            .filter(|r| r.applies(p) && !r.is_conjectural())
            .collect(),
        RepChoice::One(rep) => vec![rep],
    };
    let mut values = Vec::with_capacity(reps.len());
    for rep in reps {
        match verify::evaluate_rep(rep, p, quad) {
            Some(v) => values.push(v),
            None => {
                return Err(Failure::domain(format!(
                    "representation '{rep}' applies only for {}, got a = {}, b = {}",
                    rep.applicability(),
                    p.a,
                    p.b
                )))
            }
        }
    }
    let code = if values.iter().any(|v| v.status == Status::NoConvergence) {
        EXIT_FAILED
    } else {
        0
    };
    Ok(Outcome {
        text: output::render_values(p, &values, args.format),
        code,
        out: None,
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome, Failure> {
    let p = Params::new(args.a, args.b).map_err(Failure::domain)?;
    let report = verify::evaluate_all(p, args.tol.tol);
    let code = if report.passed() { 0 } else { EXIT_FAILED };
    Ok(Outcome {
        text: output::render_report(&report, args.format),
        code,
        out: None,
    })
}

fn cmd_grid(args: GridArgs) -> Result<Outcome, Failure> {
    let a_list = if args.a_list.is_empty() {
        DEFAULT_A.to_vec()
    } else {
        args.a_list
    };
    let b_list = if args.b_list.is_empty() {
        DEFAULT_B.to_vec()
    } else {
        args.b_list
    };
    let reports = verify::audit_grid(&a_list, &b_list, args.tol.tol).map_err(Failure::domain)?;
    let code = if reports.iter().all(|r| r.passed()) {
        0
    } else {
        EXIT_FAILED
    };
    Ok(Outcome {
        text: output::render_grid(&reports, args.format),
        code,
        out: args.out,
    })
}

fn cmd_gr_check(args: GrCheckArgs) -> Result<Outcome, Failure> {
    let check = verify::gr_check(GR_TOL_CONFIRM, GR_TOL_REFUTE).map_err(|e| Failure {
        code: EXIT_FAILED,
        message: e.to_string(),
    })?;
    let code = if check.passed() { 0 } else { EXIT_FAILED };
    Ok(Outcome {
        text: output::render_gr_check(&check, args.format),
        code,
        out: None,
    })
}
