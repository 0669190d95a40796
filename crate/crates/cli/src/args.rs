use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(name = "census", about = "Exact censuses of real-rooted integer polynomials", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,
    /// Worker threads for partitioned loops.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: u16,
    /// Seed for randomized property suites.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Exit with status 2 when any row violates its bound.
    #[arg(long, global = true)]
    pub check: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Censuses of polynomials with real positive roots.
    #[command(subcommand)]
    Census(CensusCmd),
    /// Count tuples obeying the Maclaurin-type chain.
    Attainable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trace: u64,
        /// Comma-separated positive rationals B_1,...,B_{n-1}.
        #[arg(long)]
        bseq: Option<String>,
    },
    /// Discriminant censuses of cubics.
    #[command(subcommand)]
    Disc(DiscCmd),
    /// Square-free values of quadratics.
    #[command(subcommand)]
    Sieve(SieveCmd),
    /// Certified constants.
    Constants {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        truncation: u64,
    },
    /// Run the acceptance checks.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
pub enum CensusCmd {
    /// Monic cubics with trace A and all roots real and positive.
    Cubic {
        #[arg(long)]
        trace: i64,
        /// Rational weights applied to A, A2, A3.
        #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"])]
        scaled: Option<Vec<String>>,
        /// Nonnegative roots and coefficients instead of positive.
        #[arg(long)]
        nonneg: bool,
    },
    /// Degree-n monic polynomials with trace A and all roots real and positive.
    Robinson {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trace: i64,
    },
    /// Attainable leading triples (A, A2, A3) of degree-n nonnegative-rooted polynomials.
    Prefix3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trace: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum DiscCmd {
    /// Real-rooted cubics with fixed A, B and discriminant at most D.
    Bounded {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long)]
        d: i64,
    },
    /// Positive-rooted cubics of trace A with square-free discriminant.
    Squarefree {
        #[arg(long)]
        trace: i64,
    },
    /// Cubics whose discriminant has at most K prime factors.
    Almostprime {
        #[arg(long)]
        h: i64,
        #[arg(long, allow_hyphen_values = true, requires = "b")]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<i64>,
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Pairs (A, B) in [-H, H]^2 with A^2 - 3B a square.
    Squares {
        #[arg(long)]
        h: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SieveCmd {
    /// Square-free values of A X^2 + B X + C for X in [x, y].
    Quad {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, allow_hyphen_values = true)]
        y: i64,
        #[arg(long)]
        z: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cubic,
    Maclaurin,
    Disc,
    All,
}
