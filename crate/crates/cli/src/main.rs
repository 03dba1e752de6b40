mod commands;
mod input;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

/// Exact Cauchy indices, Tarski queries and real-root counts over ℚ.
///
/// Polynomials are written like `x^5 + x + 1` or `-3/2*x^2 + 7`; pass `-` to
/// read one from stdin. Endpoints are rationals (`-10`, `3/2`) or the pair
/// `-inf` / `+inf` for the whole real line.
#[derive(Parser, Debug)]
#[command(name = "cindex", version)]
pub struct Cli {
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cauchy index of NUM/DEN on [FROM, TO] or on the whole line
    Index(IndexArgs),
    /// Subresultant chain table for (P, Q)
    Chain(ChainArgs),
    /// Number of distinct real roots of a polynomial
    Roots(RootsArgs),
    /// Tarski query TaQ(Q, P): roots of P where Q > 0 minus roots where Q < 0
    Tarski(TarskiArgs),
    /// Differential check of every engine on seeded random instances
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sturm,
    Subres,
    Variation,
    /// Modified sign variations over the full subresultant list
    #[value(alias = "W")]
    W,
    All,
}

#[derive(Args, Debug)]
pub struct IndexArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub num: String,
    #[arg(long, allow_hyphen_values = true)]
    pub den: String,
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct ChainArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
    /// Recompute every sResP_j from its determinant and compare
    #[arg(long)]
    pub check_det: bool,
}

/// Counts are of distinct roots: multiplicities are ignored.
#[derive(Args, Debug)]
pub struct RootsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long, allow_hyphen_values = true, requires = "to")]
    pub from: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "from")]
    pub to: Option<String>,
    /// Replace P by P / gcd(P, P') before counting
    #[arg(long)]
    pub squarefree: bool,
}

#[derive(Args, Debug)]
pub struct TarskiArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    #[arg(long, allow_hyphen_values = true, requires = "to")]
    pub from: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "from")]
    pub to: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, env = "CINDEX_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = 8)]
    pub max_deg: usize,
    #[arg(long, default_value_t = 3)]
    pub max_mult: u32,
    #[arg(long, default_value_t = 5)]
    pub coeff_bound: i64,
    /// generic, root-of-p, root-of-q or common-root; cycles through all by default
    #[arg(long)]
    pub endpoint_mode: Option<String>,
    /// Rerun one recorded instance: a JSON report line, a file holding one, or `-`
    #[arg(long, allow_hyphen_values = true)]
    pub replay: Option<String>,
    /// Run on the current thread only
    #[arg(long)]
    pub sequential: bool,
    /// Print only reports whose verdict is a disagreement
    #[arg(long)]
    pub failures_only: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.code())
        }
    }
}
