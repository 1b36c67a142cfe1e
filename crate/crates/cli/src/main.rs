mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "sliceworks", version, about = "Slice functions of quaternionic variables")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every sampled check [default: 0].
    #[arg(long, global = true, env = "SLICEWORKS_SEED")]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Skip the witness checks of domain hypotheses and report them as asserted.
    #[arg(long, global = true)]
    pub assume_domain: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Zeros of a one-variable polynomial.
    Roots {
        #[arg(long)]
        input: PathBuf,
        /// Domain spec; the whole space when omitted.
        #[arg(long)]
        domain: Option<PathBuf>,
        #[arg(long)]
        tol_root: Option<f64>,
        #[arg(long)]
        tol_sph: Option<f64>,
        /// With `--format csv`, trace spheres at this many units for plotting.
        #[arg(long)]
        plot_units: Option<usize>,
    },
    /// The symmetrization `f^c * f`.
    Symmetrize {
        #[arg(long)]
        input: PathBuf,
        /// Domain used for the hypothesis checks; the function's own when omitted.
        #[arg(long)]
        domain: Option<PathBuf>,
    },
    /// The slice conjugate `f^c`.
    Conjugate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        domain: Option<PathBuf>,
    },
    /// The `*`-product of two functions.
    Star {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Values of a function at quaternionic points, e.g. `--at '[[0,1,0,0]]'`.
    Extend {
        #[arg(long)]
        input: PathBuf,
        /// One point as a JSON list of quaternions `[w,x,y,z]`; repeatable.
        #[arg(long, required = true)]
        at: Vec<String>,
    },
    /// Hypothesis checks and radii of a domain.
    DomainInfo {
        #[arg(long)]
        domain: PathBuf,
        /// Path endpoint as a JSON list of `[re, im]` pairs.
        #[arg(long)]
        endpoint: Option<String>,
    },
    /// The randomized property suite and acceptance criteria.
    Check {
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        fd_step: Option<f64>,
        /// Full oracle configuration as JSON; flags override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

pub const EXIT_PARSE: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_NO_CONVERGENCE: u8 = 3;
pub const EXIT_CHECK_FAILED: u8 = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
