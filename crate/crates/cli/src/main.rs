mod commands;
mod error;
mod format;
mod problem;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lne_core::suite::DEFAULT_SEED;
use lne_core::Family;

use crate::commands::{parse_grid, Grid, SolveArgs};
use crate::error::CliError;
use crate::problem::ProblemFile;

/// Logarithmic norm entropy: evaluation, figure data and constrained solvers.
#[derive(Debug, Parser)]
#[command(name = "lne", version)]
struct Cli {
    /// Where to write results; `-` is standard output.
    #[arg(long, global = true, default_value = "-")]
    output: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an entropy of the weights in a problem file.
    #[command(allow_negative_numbers = true)]
    Entropy {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "lne")]
        family: Family,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
    },
    /// CSV of LNE over two-state distributions (p, 1 - p).
    #[command(allow_negative_numbers = true)]
    Curve {
        #[arg(long)]
        alpha: f64,
        /// Comma list or start:stop:count.
        #[arg(long, value_parser = parse_grid)]
        beta: Grid,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
    },
    /// CSV of LNE of Binomial(n, p) over an (alpha, beta) grid.
    #[command(allow_negative_numbers = true)]
    Surface {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, value_parser = parse_grid, default_value = "0.1,0.25,0.5,1,2,5,10")]
        alpha: Grid,
        #[arg(long, value_parser = parse_grid, default_value = "0.1,0.25,0.5,1,2,5,10")]
        beta: Grid,
    },
    /// Maximize LNE under normalized q-expectation constraints.
    #[command(allow_negative_numbers = true)]
    Maxent {
        #[command(flatten)]
        solve: Solve,
        /// Number of states; defaults to the constraint length.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Minimize the cross-entropy to the prior under the constraints.
    #[command(allow_negative_numbers = true)]
    Minxent {
        #[command(flatten)]
        solve: Solve,
    },
    /// Run the invariant suite; stops at the first failure.
    #[command(allow_negative_numbers = true)]
    Check {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct Solve {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Residual tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for the restart generator.
    #[arg(long)]
    seed: Option<u64>,
}

impl Solve {
    fn args(&self, n: Option<usize>) -> SolveArgs {
        SolveArgs {
            n,
            alpha: self.alpha,
            beta: self.beta,
            tol: self.tol,
            seed: self.seed,
        }
    }
}

fn init_logging() {
    let level = match std::env::var("LNE_LOG").as_deref() {
        Ok("debug") => log::LevelFilter::Debug,
        Ok("info") => log::LevelFilter::Info,
        Ok("quiet") => log::LevelFilter::Off,
        _ => log::LevelFilter::Warn,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .init();
}

fn run(command: &Command, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Entropy {
            input,
            family,
            alpha,
            beta,
        } => commands::entropy(out, &ProblemFile::read(input)?, *family, *alpha, *beta),
        Command::Curve { alpha, beta, step } => commands::curve(out, *alpha, &beta.0, *step),
        Command::Surface { n, p, alpha, beta } => commands::surface(out, *n, *p, &alpha.0, &beta.0),
        Command::Maxent { solve, n } => {
            commands::maxent(out, &ProblemFile::read(&solve.input)?, &solve.args(*n))
        }
        Command::Minxent { solve } => {
            commands::minxent(out, &ProblemFile::read(&solve.input)?, &solve.args(None))
        }
        Command::Check { seed } => commands::check(out, *seed),
    }
}

fn emit(destination: &str, text: &str) -> std::io::Result<()> {
    if destination == "-" {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        stdout.flush()
    } else {
        std::fs::write(destination, text)
    }
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli.command, &mut out);
    if result.is_ok() || !out.is_empty() {
        if let Err(e) = emit(&cli.output, &out) {
            eprintln!("error: {}", CliError::Write(e));
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
