//! `burau`: Burau matrices, unit-circle scans, sharpness at roots of unity,
//! the cyclic-cover oracle and Nielsen–Thurston predictions from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a computation fails or a reduction
//! file is inconsistent, 2 on usage errors (bad flags, unparsable words).

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "burau", version, about = "Burau estimates for braids")]
pub struct Cli {
    /// Number of strings.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Braid word, e.g. "1 -2" or "b[1,3,3] b[4,3,3]^-1".
    #[arg(long, global = true, allow_hyphen_values = true, conflicts_with = "word_file")]
    pub word: Option<String>,
    /// File holding the braid word.
    #[arg(long, global = true)]
    pub word_file: Option<PathBuf>,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file (atomically) instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Dense,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact reduced Burau matrix.
    Burau,
    /// Sample r(theta) on a uniform grid of [0, 1).
    Scan {
        #[arg(long, default_value_t = 2048)]
        resolution: usize,
        /// Also emit the eigenvalue loci.
        #[arg(long)]
        loci: bool,
    },
    /// Eigenvalues of B at every k-th root of unity.
    Unity {
        #[arg(long)]
        k: u64,
    },
    /// Roots of unity where the spectral radius reaches lambda.
    Sharp {
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 32)]
        kmax: u64,
        #[arg(long, default_value_t = burau::spectral::DEFAULT_SHARP_TOL)]
        tol: f64,
        /// Reduction file whose predicted set is reported alongside.
        #[arg(long)]
        reduction: Option<PathBuf>,
    },
    /// Compare the k-fold cover action with the direct sum of B at k-th roots.
    CoverCheck {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Predicted sharp set from a reduction file.
    Predict {
        #[arg(long)]
        reduction: PathBuf,
    },
    /// Exact characteristic polynomial det(x I - B(t)).
    Charpoly,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
