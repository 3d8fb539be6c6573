use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "disc-census", version, about = "Exact discriminant censuses and checks")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Seed recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (defaults to the number of CPUs). Does not affect output.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Maximum number of polynomials an exhaustive run may visit.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupBy {
    /// Signed square-free part of the discriminant.
    Squarefree,
    /// Absolute value of the square-free part.
    AbsSquarefree,
    /// The discriminant itself.
    Disc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusMode {
    Table,
    MaxClass,
    SmallDisc,
    Distinct,
    Density,
    Irreducible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrinomialMode {
    Count,
    Fields,
    FieldsByDisc,
    Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharsumMode {
    Total,
    Mixed,
    Sweep,
    Jacobi,
    Box,
    Transform,
    Exceptional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SieveMode {
    Bound,
    Identity,
    Window,
    OptimalZ,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Enumerate monic polynomials with |a_i| < H and group irreducible ones.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        height: u64,
        #[arg(long, value_enum, default_value_t = GroupBy::Squarefree)]
        group_by: GroupBy,
        #[arg(long, value_enum, default_value_t = CensusMode::Table)]
        mode: CensusMode,
        /// Discriminant bound D for `--mode small-disc`.
        #[arg(long)]
        #[serde(serialize_with = "opt_big")]
        bound: Option<BigInt>,
    },
    /// Square classes of trinomial discriminants over (a, b) in [C, C+A] x [D, D+B].
    Trinomial {
        #[arg(long)]
        n: usize,
        #[arg(long = "a-len", default_value_t = 0)]
        a_len: u64,
        #[arg(long = "b-len", default_value_t = 0)]
        b_len: u64,
        #[arg(long = "a-start", default_value_t = 1, allow_hyphen_values = true)]
        a_start: i64,
        #[arg(long = "b-start", default_value_t = 1, allow_hyphen_values = true)]
        b_start: i64,
        /// Square-free class s for `--mode count`.
        #[arg(long, allow_hyphen_values = true)]
        #[serde(serialize_with = "opt_big")]
        s: Option<BigInt>,
        /// Discriminant bound for `--mode fields-by-disc`.
        #[arg(long = "disc-bound")]
        #[serde(serialize_with = "opt_big")]
        disc_bound: Option<BigInt>,
        /// Height for `--mode family`.
        #[arg(long)]
        height: Option<u64>,
        #[arg(long, value_enum, default_value_t = TrinomialMode::Count)]
        mode: TrinomialMode,
    },
    /// Character sums over monic polynomials modulo primes.
    Charsum {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        /// Second prime for `jacobi` and `box`.
        #[arg(long)]
        q: Option<u64>,
        /// Comma-separated frequencies (`mixed`: λ_1..λ_n; `jacobi`: λ_0..λ_{n-1}).
        #[arg(long)]
        lambda: Option<String>,
        /// Height for `--mode box`.
        #[arg(long)]
        height: Option<u64>,
        /// Constant in the bound checks (16 for `sweep`/`mixed`, 8 for `exceptional`).
        #[arg(long)]
        constant: Option<f64>,
        #[arg(long, value_enum, default_value_t = CharsumMode::Total)]
        mode: CharsumMode,
    },
    /// Square sieve bound, identity check and window helpers.
    Sieve {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        height: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        #[serde(serialize_with = "opt_big")]
        u: Option<BigInt>,
        #[arg(long)]
        z: Option<f64>,
        /// Polynomial for `--mode identity`.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_enum, default_value_t = SieveMode::Bound)]
        mode: SieveMode,
    },
    /// Discriminant, Dedekind verdicts and field discriminant of a polynomial.
    Fielddisc {
        /// Coefficients, highest degree first, e.g. `1,0,0,0,-2`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Solutions of s r^2 - M c^2 = RHS with |r|, |c| <= bound.
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        #[serde(serialize_with = "big")]
        s: BigInt,
        #[arg(long = "m", allow_hyphen_values = true)]
        #[serde(serialize_with = "big")]
        m: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        #[serde(serialize_with = "big")]
        rhs: BigInt,
        #[arg(long)]
        bound: u64,
    },
    /// Re-check the worked numerical examples.
    Verify {
        /// Include the degree-24 discriminant.
        #[arg(long)]
        slow: bool,
    },
    /// Look up a number field record by LMFDB label.
    Lmfdb {
        #[arg(long)]
        label: String,
        /// Use the cache directory and bundled fixtures only.
        #[arg(long)]
        offline: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Census { .. } => "census",
            Command::Trinomial { .. } => "trinomial",
            Command::Charsum { .. } => "charsum",
            Command::Sieve { .. } => "sieve",
            Command::Fielddisc { .. } => "fielddisc",
            Command::Pell { .. } => "pell",
            Command::Verify { .. } => "verify",
            Command::Lmfdb { .. } => "lmfdb",
        }
    }
}

fn big<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn opt_big<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}
