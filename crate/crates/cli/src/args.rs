//! Command-line surface. Exit codes: 0 = containment holds / all claims
//! verified, 1 = containment fails / some claim refuted, 2 = usage or
//! operational error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "sympow",
    version,
    about = "Exact containment checks between symbolic and ordinary powers of plane point ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run the dual Hesse verification pipeline (expects the containment
    /// failure; exits 0 when every claim reproduces).
    #[command(name = "verify-hesse")]
    VerifyHesse {
        /// Skip the graded comparison claims.
        #[arg(long)]
        skip_graded: bool,
        /// Degrees sampled by the graded comparison (each >= 10).
        #[arg(long, value_delimiter = ',', default_values_t = [10u64, 11, 12])]
        t: Vec<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Fan-out width for batch membership checks.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Decide whether the m-th symbolic power of the configuration ideal is
    /// contained in its r-th ordinary power.
    Check {
        /// Point file (one `c0 : c1 : c2` per line; `w` selects Q(w)).
        #[arg(long)]
        points: PathBuf,
        /// Symbolic power exponent.
        #[arg(long)]
        m: u32,
        /// Ordinary power exponent.
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print the reduced Groebner basis of an ideal file over Q[x,y,z] or
    /// Q(w)[x,y,z].
    Gb {
        /// Ideal file (one generator per line in the expression grammar).
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Print graded dimensions of a power of the configuration ideal.
    Hilbert {
        #[arg(long)]
        points: PathBuf,
        /// Use the symbolic power instead of the ordinary one.
        #[arg(long)]
        symbolic: bool,
        /// Power exponent.
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Degrees to report.
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<u64>,
    },
    /// Write a built-in point configuration to a file.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Subcommand)]
pub enum GenFamily {
    /// Pairwise intersections of s general lines.
    Star {
        /// Number of lines (>= 2).
        #[arg(long)]
        lines: usize,
        #[arg(long)]
        out: PathBuf,
        /// Overwrite an existing file.
        #[arg(long)]
        force: bool,
    },
    /// Seeded random rational points.
    Random {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// The 12 points of the dual Hesse configuration.
    Hesse {
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grevlex,
}
