use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "domb",
    version,
    about = "Generalized Domb and Apéry numbers, their supercongruences and eta-quotient identities"
)]
pub struct Cli {
    /// Output format; defaults to the config file's `format`, then `plain`.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Largest sequence index any command may compute.
    #[arg(long, env = "DOMB_MAX_INDEX", default_value_t = 2000, global = true)]
    pub max_index: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms 0..=n of a sequence.
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Check congruences on single instances or a whole grid.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Compare an eta-quotient form with its expansion in the hauptmodul.
    #[command(subcommand)]
    Qcheck(QcheckCommand),
}

#[derive(Debug, Subcommand)]
pub enum SeqCommand {
    Apery(IndexArg),
    Domb(IndexArg),
    Gendomb {
        #[command(flatten)]
        index: IndexArg,
        #[command(flatten)]
        spec: SpecArgs,
    },
}

#[derive(Debug, Args)]
pub struct IndexArg {
    #[arg(long)]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SpecArgs {
    #[arg(long = "A")]
    pub a: u32,
    #[arg(long = "B")]
    pub b: u32,
    #[arg(long = "C")]
    pub c: u32,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct LevelArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct LiftArgs {
    #[command(flatten)]
    pub level: LevelArgs,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub s: u32,
    #[command(flatten)]
    pub spec: SpecArgs,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// D(m p^r) = D(m p^(r-1)) mod p^(3r), A >= 2.
    Theorem {
        #[command(flatten)]
        level: LevelArgs,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// D(m p^r,1,1,1) = D(m p^(r-1),1,1,1) mod p^(2r).
    Weak(LevelArgs),
    /// A(n p) = A(n) mod p^3.
    Gessel {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
    /// C(2m p^r, m p^r) = C(2m p^(r-1), m p^(r-1)) mod p^(3r).
    Central(LevelArgs),
    /// g*(m p^r, n p^s) = 1 mod p^(r+2s) for the exponents A+2C and C.
    Key(LiftArgs),
    /// Binomial powers factor through g* across one lift.
    Steps(LiftArgs),
    /// Summand ratios at (N, K) and (N/p, K/p) agree mod p^(3r), A >= 2.
    Ratio(LiftArgs),
    /// Rewritten summands with p not dividing k vanish mod p^(3r).
    Vanishing {
        #[command(flatten)]
        level: LevelArgs,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// p-integrality of the witnesses alpha, beta, gamma.
    Witnesses(LiftArgs),
    /// Lower bounds on the seven term valuations, 3r + C(r-s).
    Seventerms(LiftArgs),
    /// Harmonic-sum bounds on S_j(m p^r).
    Prop21 {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long)]
        j: u32,
    },
    /// Run a grid of tasks; the default grid when no config is given.
    Campaign {
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum QcheckCommand {
    Apery(QcheckArgs),
    Domb(QcheckArgs),
}

#[derive(Debug, Args)]
pub struct QcheckArgs {
    #[arg(long, default_value_t = 40)]
    pub order: u64,
    /// Include both coefficient lists in the output.
    #[arg(long)]
    pub emit_coefficients: bool,
}
