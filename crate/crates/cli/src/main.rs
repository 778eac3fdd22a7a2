mod commands;
mod golden;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "dyckd", version, about = "Dyck tilings of type D: matrices, generating functions, tilings and trees")]
pub struct Cli {
    /// Worker threads for batch loops.
    #[arg(long, global = true, env = "DYCKD_WORKERS")]
    pub workers: Option<usize>,

    /// Refuse words longer than this.
    #[arg(long, global = true, default_value_t = 10)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print an incidence matrix or its inverse.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        epsilon: u8,
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generating function of one region, or summed over all partners.
    Genfun {
        /// Lower path; alone, sums over every path above it.
        #[arg(long)]
        lambda: Option<String>,
        /// Upper path; alone, sums over every path below it.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long = "type", value_enum, default_value_t = TypeArg::D)]
        path_type: TypeArg,
        #[arg(long, value_enum, default_value_t = ClassArg::Inclusive)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = WeightArg::Art)]
        weight: WeightArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List tilings, optionally rendering each to SVG.
    Tilings {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long = "type", value_enum, default_value_t = TypeArg::D)]
        path_type: TypeArg,
        #[arg(long, value_enum, default_value_t = ClassArg::Inclusive)]
        class: ClassArg,
        #[arg(long)]
        filter_art: Option<usize>,
        /// Directory for one SVG per tiling plus manifest.json.
        #[arg(long)]
        render: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the plane tree of a word and evaluate ω on it.
    Tree {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the identity suite up to a word length.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_length: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    #[value(name = "M")]
    M,
    #[value(name = "N")]
    N,
    #[value(name = "Minv")]
    Minv,
    #[value(name = "Ninv")]
    Ninv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassArg {
    Inclusive,
    Exclusive,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightArg {
    Art,
    Tiles,
    Area,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(dyckd::Error),
    /// No reduction rule applied or a division was not exact.
    #[error("{0}")]
    Gap(dyckd::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0} identity check(s) failed")]
    Identity(usize),
}

impl From<dyckd::Error> for CliError {
    fn from(e: dyckd::Error) -> Self {
        use dyckd::Error as E;
        match e {
            E::InvalidWord(_) | E::LengthMismatch { .. } | E::EmptyWord | E::ParsePoly(_) => {
                CliError::Usage(e.to_string())
            }
            E::StuckTree(_) | E::InexactDivision { .. } | E::DivisionByZero => CliError::Gap(e),
            _ => CliError::Domain(e),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Identity(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io { .. } => 3,
            CliError::Gap(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .expect("global pool is configured once");
    }
    let mut out = std::io::stdout().lock();
    match commands::run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
