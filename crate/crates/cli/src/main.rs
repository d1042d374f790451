//! `zerosum` command-line front end.

mod config;
mod report;
mod run;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zerosum::Family;

use config::{Failure, RunConfig};

#[derive(Parser, Debug)]
#[command(
    name = "zerosum",
    version,
    about = "Power sums of zeros of special functions in extended precision"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print s_1..s_N (and σ_1..σ_N with --sigmas).
    Sums(Opts),
    /// Cross-check recurrence, determinant, closed forms and optionally the zero oracle.
    Verify(Opts),
    /// Print the moment table b_n, β_n of a Ξ kernel.
    Moments(Opts),
    /// Locate zeros and compare truncated power sums with the Newton values.
    Oracle(Opts),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recurrence,
    Determinant,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// sinc, bessel, airy, qbessel, qairy, zeta or dirichlet
    #[arg(long, short = 'f')]
    function: Family,
    /// Bessel order ν > -1 (decimal or fraction)
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// q-parameter, 0 < q < 1
    #[arg(long)]
    q: Option<String>,
    /// Fundamental discriminant of the real character
    #[arg(long, allow_hyphen_values = true)]
    discriminant: Option<i64>,
    /// Highest index N
    #[arg(long, short = 'n', default_value_t = 5)]
    order: usize,
    /// Working precision in decimal digits
    #[arg(long, short = 'p', env = "ZEROSUM_PRECISION", default_value_t = 50)]
    precision: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include zero-oracle cross-checks (verify)
    #[arg(long)]
    oracle: bool,
    /// Also print σ_1..σ_N
    #[arg(long)]
    sigmas: bool,
    /// Determinant scale c (decimal, fraction, or ±pi, ±pi^2)
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    scale: String,
    /// Number of zeros for the oracle (family default when omitted)
    #[arg(long)]
    zeros: Option<usize>,
}

type Runner = fn(&RunConfig) -> Result<report::Report, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (opts, cmd): (&Opts, Runner) = match &cli.command {
        Command::Sums(o) => (o, run::cmd_sums),
        Command::Verify(o) => (o, run::cmd_verify),
        Command::Moments(o) => (o, run::cmd_moments),
        Command::Oracle(o) => (o, run::cmd_oracle),
    };
    let outcome = RunConfig::from_opts(opts).and_then(|cfg| {
        let rep = cmd(&cfg)?;
        print!("{}", rep.render(cfg.format));
        Ok(rep.all_passed())
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
