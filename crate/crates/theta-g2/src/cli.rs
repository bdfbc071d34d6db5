//! The `theta-g2` command line.
//!
//! Exit codes: 0 on success (and on a passing `verify`), 1 when a `verify`
//! run fails, 2 on usage or validation errors (malformed complex literals,
//! invalid characteristic strings, invalid moduli).

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::characteristic::Characteristic;
use crate::error::{Error, Result};
use crate::eval::{theta, EvalOptions, ThetaArgs, DEFAULT_TAIL_TOLERANCE};
use crate::harness::{run_suite, Family, SuiteConfig};
use crate::hyperelliptic::hyperelliptic_f;
use crate::identity::odd_half_periods;
use crate::period::PeriodMatrix;
use crate::tables::catalog_listing;
use crate::textio::{format_complex, parse_complex};

fn complex_arg(s: &str) -> Result<Complex64> {
    parse_complex(s)
}

fn characteristic_arg(s: &str) -> Result<Characteristic> {
    s.parse()
}

#[derive(Debug, Args)]
struct ModuliArgs {
    /// First diagonal modulus, as RE±IMi.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    tau1: Complex64,
    /// Second diagonal modulus, as RE±IMi.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    tau2: Complex64,
    /// Off-diagonal modulus, as RE±IMi.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    tau12: Complex64,
}

impl ModuliArgs {
    fn period_matrix(&self) -> Result<PeriodMatrix> {
        PeriodMatrix::new(self.tau1, self.tau2, self.tau12)
    }
}

#[derive(Debug, Args)]
struct PointArgs {
    /// Characteristic as the four digits acbd, each 0 or 1.
    #[arg(long = "char", value_parser = characteristic_arg)]
    characteristic: Characteristic,
    /// First argument, as RE±IMi.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    u: Complex64,
    /// Second argument, as RE±IMi.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    v: Complex64,
    #[command(flatten)]
    moduli: ModuliArgs,
    /// Absolute tail bound for the truncated sum.
    #[arg(long = "tail-tol", default_value_t = DEFAULT_TAIL_TOLERANCE)]
    tail_tolerance: f64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Family to verify (repeatable): riemann, master, kossak,
    /// theta-addition, f-addition, appendix, or all.
    #[arg(long = "family", default_value = "all")]
    families: Vec<String>,
    /// Seeded instances per identity.
    #[arg(long, default_value_t = 100)]
    trials: u32,
    /// Stream seed.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Relative residual threshold.
    #[arg(long, default_value_t = 1e-7)]
    tol: f64,
    /// Absolute tail bound for every theta evaluation.
    #[arg(long = "tail-tol", default_value_t = DEFAULT_TAIL_TOLERANCE)]
    tail_tolerance: f64,
    /// Write the JSON report here.
    #[arg(long = "json")]
    json_path: Option<std::path::PathBuf>,
}

#[derive(Debug, Parser)]
#[command(
    name = "theta-g2",
    version,
    about = "Genus-2 theta functions and their addition-formula verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate theta[acbd](u, v) and print it as RE±IMi.
    Eval(PointArgs),
    /// Evaluate the hyperelliptic ratio F[acbd](u, v) = theta[acbd]/theta[0011].
    FEval(PointArgs),
    /// Print the six odd half-period (alpha, beta) pairs of the moduli.
    Zeros(ModuliArgs),
    /// Run seeded residual verification over identity families.
    Verify(VerifyArgs),
    /// Print the identity catalog (terms, signs, characteristics, arguments).
    Catalog,
}

fn eval_options(tail_tolerance: f64) -> Result<EvalOptions> {
    if !(tail_tolerance > 0.0 && tail_tolerance < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "tail tolerance must lie in (0, 1), got {tail_tolerance}"
        )));
    }
    Ok(EvalOptions::with_tail_tolerance(tail_tolerance))
}

fn families_from(names: &[String]) -> Result<Vec<Family>> {
    let mut families = Vec::new();
    for name in names {
        if name == "all" {
            families.extend(Family::ALL);
        } else {
            families.push(name.parse()?);
        }
    }
    Ok(families)
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Eval(args) => {
            let omega = args.moduli.period_matrix()?;
            let opts = eval_options(args.tail_tolerance)?;
            let value = theta(
                args.characteristic,
                ThetaArgs::new(args.u, args.v),
                &omega,
                &opts,
            )?;
            println!("{}", format_complex(value));
            Ok(0)
        }
        Command::FEval(args) => {
            let omega = args.moduli.period_matrix()?;
            let opts = eval_options(args.tail_tolerance)?;
            let value = hyperelliptic_f(args.characteristic, args.u, args.v, &omega, &opts)?;
            println!("{}", format_complex(value));
            Ok(0)
        }
        Command::Zeros(args) => {
            let omega = args.period_matrix()?;
            for (alpha, beta) in odd_half_periods(&omega) {
                println!("{} {}", format_complex(alpha), format_complex(beta));
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let mut config = SuiteConfig::new(
                families_from(&args.families)?,
                args.trials,
                args.seed,
                args.tol,
            );
            config.tail_tolerance = args.tail_tolerance;
            let report = run_suite(&config)?;
            print!("{}", report.summary_table());
            if let Some(path) = &args.json_path {
                std::fs::write(path, report.to_json()).map_err(|e| {
                    Error::InvalidConfig(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Catalog => {
            print!("{}", catalog_listing());
            Ok(0)
        }
    }
}

/// Parse argv and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}
