//! Command-line frontend: evaluation, transforms, product decomposition,
//! tables and elements of finite order.
//!
//! Exit codes: 0 on success, 2 for usage or validation errors, 1 when an
//! internal check fails.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "g2orbit",
    version,
    about = "Orbit functions of the Weyl group of G2"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for commands that draw random points or fields.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Gauss–Legendre order for continuous scalar products.
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    pub quad_order: u32,

    /// Tolerance for numerical checks.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive_float)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

fn positive_float(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("tolerance must be positive".into())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an orbit function at a point, or sample it on a grid.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Forward or inverse discrete transform on F_M.
    Transform(TransformArgs),
    /// Decompose a product of two orbit functions.
    #[command(allow_negative_numbers = true)]
    Decompose(DecomposeArgs),
    /// Rational-class table, grids, spectra and character expansions.
    Tables(TablesArgs),
    /// Elements of finite order and their rationality.
    Efo(EfoArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Family: C, S, SL or SS.
    pub family: String,
    pub a: i64,
    pub b: i64,
    /// Point coordinates in the ω̌-basis; integers and fractions such as
    /// `1/7` are evaluated exactly.
    #[arg(required_unless_present_any = ["grid", "inner"])]
    pub x1: Option<String>,
    #[arg(required_unless_present_any = ["grid", "inner"])]
    pub x2: Option<String>,
    /// Sample on the grid F_M instead.
    #[arg(long, value_name = "M", conflicts_with_all = ["x1", "x2", "inner"])]
    pub grid: Option<u32>,
    /// Continuous scalar product over F with another orbit function, by
    /// Gauss–Legendre quadrature of order --quad-order.
    #[arg(long, num_args = 3, value_names = ["FAMILY", "A", "B"], conflicts_with_all = ["x1", "x2"])]
    pub inner: Option<Vec<String>>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["forward", "inverse", "roundtrip"])))]
pub struct TransformArgs {
    pub family: String,
    #[arg(value_name = "M")]
    pub level: u32,
    /// Field file (JSON, or CSV by extension) to analyse.
    #[arg(long, value_name = "FILE", conflicts_with = "inverse")]
    pub forward: Option<PathBuf>,
    /// Coefficient file (JSON, or CSV by extension) to synthesise.
    #[arg(long, value_name = "FILE")]
    pub inverse: Option<PathBuf>,
    /// Report the reconstruction error; uses a random field when no file
    /// is given.
    #[arg(long)]
    pub roundtrip: bool,
    /// Write the result here instead of stdout.
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub family_a: String,
    pub a1: i64,
    pub b1: i64,
    pub family_b: String,
    pub a2: i64,
    pub b2: i64,
    /// Verify the identity numerically at this many random points.
    #[arg(long, value_name = "N")]
    pub check: Option<usize>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("table").required(true).args(["rational", "grid", "spectrum", "char", "inverse_char"])))]
pub struct TablesArgs {
    /// Function values at the rational classes.
    #[arg(long)]
    pub rational: bool,
    /// Points of F_M with their weights.
    #[arg(long, value_name = "M")]
    pub grid: Option<u32>,
    /// Spectrum of a family at level M.
    #[arg(long, num_args = 2, value_names = ["FAMILY", "M"])]
    pub spectrum: Option<Vec<String>>,
    /// Expansion of a character ratio (full, L or S) in C-functions.
    #[arg(long, num_args = 3, value_names = ["VARIANT", "A", "B"])]
    pub char: Option<Vec<String>>,
    /// C_(a,b) as a combination of characters.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub inverse_char: Option<Vec<String>>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["level", "rational_up_to"])))]
pub struct EfoArgs {
    /// List the classes of this order.
    #[arg(value_name = "M")]
    pub level: Option<u32>,
    /// List the rational classes of every order up to N.
    #[arg(long, value_name = "N")]
    pub rational_up_to: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
