use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "burau", version, about = "Generalized Burau matrices of string links")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Exactly one of `--braid` (with `-n`) or `--file`.
#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Braid word such as "s1 s2^-1 s1".
    #[arg(long)]
    pub braid: Option<String>,
    /// Strand count for --braid.
    #[arg(short = 'n', long = "strands")]
    pub n: Option<usize>,
    /// Tangle file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Other {
    /// Braid word of the diagram stacked on top.
    #[arg(long)]
    pub with_braid: Option<String>,
    /// Tangle file of the diagram stacked on top.
    #[arg(long)]
    pub with_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct TArg {
    /// Value of t, as a fraction or decimal in (0, 1].
    #[arg(long = "t", default_value = "1/2")]
    pub t: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact Burau matrix.
    Burau {
        #[command(flatten)]
        input: Input,
        /// Evaluate at this value of t instead of printing rational functions.
        #[arg(long)]
        eval: Option<String>,
    },
    /// Matrix expanded in h = 1 - t from bounded-jump path sums.
    Series {
        #[command(flatten)]
        input: Input,
        /// Maximum number of jumps; the series is exact modulo h^(k+1).
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
    /// Stack a second diagram on top of the input.
    Compose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
    },
    /// Stack the input on itself.
    Power {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        times: usize,
    },
    /// Apply a Reidemeister move, or list the applicable ones.
    Move {
        #[command(flatten)]
        input: Input,
        /// Move spec, e.g. `r1:1:0:+:ou`, `r1del:2`, `r2:1:0:2:0:+`, `r2del:1:2`, `r3:1:2:3`.
        #[arg(long = "move")]
        spec: Option<String>,
        /// List deletions and R3 moves available on the input.
        #[arg(long)]
        list: bool,
    },
    /// Reflect top to bottom.
    Mirror {
        #[command(flatten)]
        input: Input,
    },
    /// Alternating sum over resolutions of the double points.
    Vassiliev {
        #[command(flatten)]
        input: Input,
        /// Crossings to mark as double points (1-based), for braid or plain file input.
        #[arg(long, value_delimiter = ',')]
        double: Vec<usize>,
        /// Series mode with this many jumps instead of exact rational functions.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Coefficient of h^k in the value of a (singular) string link.
    Bk {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        double: Vec<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Stochastic matrix of a positive diagram, with stationary data when regular.
    Markov {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        t: TArg,
    },
    /// Monte Carlo walks.
    Simulate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        t: TArg,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Stationary distribution by power iteration.
    Stationary {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        t: TArg,
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
    },
    /// Entropy rate in bits per step.
    Entropy {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        t: TArg,
    },
    /// Partial sums and limits of P^n.
    Persistence {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        t: TArg,
        #[arg(long, default_value_t = 200)]
        nmax: usize,
    },
    /// Check a tangle file.
    Validate {
        #[arg(long)]
        file: PathBuf,
        /// Accept `double` flags on crossing lines.
        #[arg(long)]
        singular: bool,
    },
}
