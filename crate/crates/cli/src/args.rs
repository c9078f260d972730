use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qdilog", version, about = "High-precision q-dilogarithm toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Decimal digits of precision
    #[arg(long, default_value_t = 50, global = true)]
    pub prec: u32,
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function and print a JSON document
    Eval(EvalArgs),
    /// Run a verification suite and print its JSON report
    Verify(VerifyArgs),
    /// Export expansion coefficients as CSV
    Expand(ExpandArgs),
    /// Evaluate a Mellin-Barnes integral
    Integral(IntegralArgs),
    /// Compare direct summation with the truncated q -> 1 expansion
    Crossover(CrossoverArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// li2q, qlog, qpolylog, hurwitz, periodic_zeta, polylog, polygamma, bernoulli, apostol, euler_series
    pub function: String,
    #[arg(long)]
    pub z: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub theta: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// kirillov, lerch, special_values, barnes_q1, barnes_q0, coefficients, limits
    pub suite: String,
    /// `default` or a file with one JSON case per line
    #[arg(long, default_value = "default")]
    pub grid: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    Q1,
    Q0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartArg {
    Ci,
    Si,
    Combined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProvenanceArg {
    Closed,
    Oracle,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(value_enum)]
    pub regime: RegimeArg,
    #[arg(long, default_value = "2")]
    pub zparam: String,
    #[arg(long, default_value = "0.3")]
    pub theta: String,
    #[arg(long, default_value_t = 4)]
    pub order: u32,
    /// Which part of the q -> 0 expansion; ignored for q1
    #[arg(long, value_enum, default_value_t = PartArg::Ci)]
    pub part: PartArg,
    #[arg(long, value_enum, default_value_t = ProvenanceArg::Closed)]
    pub provenance: ProvenanceArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    Li2,
    Ci2,
    Si2,
}

#[derive(Debug, Args)]
pub struct IntegralArgs {
    #[arg(long, value_enum)]
    pub which: WhichArg,
    #[arg(long)]
    pub x: String,
    #[arg(long, default_value = "2")]
    pub zparam: String,
    #[arg(long, default_value = "0.3")]
    pub theta: String,
    /// Abscissa of the vertical contour
    #[arg(long, default_value_t = 1.5)]
    pub c: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CrossoverArgs {
    #[arg(long, default_value = "2")]
    pub zparam: String,
    #[arg(long, default_value = "0.3")]
    pub theta: String,
    /// Values of x; repeat the flag or separate with commas
    #[arg(long = "x", value_delimiter = ',', num_args = 0..)]
    pub xs: Vec<f64>,
    #[command(flatten)]
    pub common: Common,
}
