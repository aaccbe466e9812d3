use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

#[derive(Parser, Debug)]
#[command(name = "skewlagrange", version, about = "Exact interpolation for polynomials over the rational quaternions")]
struct Cli {
    /// Seed for random instances (overrides SKEWLAGRANGE_SEED).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output format; `interp` and `oracle` default to json, the rest to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Left,
    Right,
    Two,
    Generalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for skewlagrange::Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Left => skewlagrange::Side::Left,
            SideArg::Right => skewlagrange::Side::Right,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the interpolation problem in FILE.
    Interp {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "two")]
        side: Mode,
        /// Drop conditions implied by the others (reporting any contradiction)
        /// before solving.
        #[arg(long)]
        reduce: bool,
        /// Describe all solutions of degree below N.
        #[arg(long, value_name = "N")]
        degree_bound: Option<usize>,
    },
    /// Minimal polynomial of a node set and its P-basis.
    Minpoly {
        #[arg(required = true)]
        nodes: Vec<String>,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// P-independence test.
    Independent {
        #[arg(required = true)]
        nodes: Vec<String>,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Solve a·x − x·b = g.
    Sylvester { a: String, b: String, g: String },
    /// Value at TARGET forced by one-sided data on a P-basis of its class.
    Extend {
        file: PathBuf,
        target: String,
        /// Side of the value to compute; defaults to the side of the data.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Check a polynomial against every condition in FILE.
    Verify { poly: String, file: PathBuf },
    /// Brute-force solution set of FILE, or random cross-checks when no file
    /// is given.
    Oracle {
        file: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        degree_bound: Option<usize>,
        /// Number of random instances.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

/// Exit statuses: 0 solved, 1 usage or input error, 2 no solution.
pub enum Outcome {
    Solved,
    Inconsistent,
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
    let seed = cli
        .seed
        .unwrap_or_else(|| skewlagrange::random::seed_from_env(skewlagrange::random::DEFAULT_SEED));
    let result = match cli.command {
        Command::Interp {
            file,
            side,
            reduce,
            degree_bound,
        } => commands::interp(&file, side, reduce, degree_bound, cli.format.unwrap_or(Format::Json)),
        Command::Minpoly { nodes, side } => {
            commands::minpoly(&nodes, side.into(), cli.format.unwrap_or(Format::Text))
        }
        Command::Independent { nodes, side } => {
            commands::independent(&nodes, side.into(), cli.format.unwrap_or(Format::Text))
        }
        Command::Sylvester { a, b, g } => {
            commands::sylvester(&a, &b, &g, cli.format.unwrap_or(Format::Text))
        }
        Command::Extend { file, target, side } => commands::extend(
            &file,
            &target,
            side.map(Into::into),
            cli.format.unwrap_or(Format::Text),
        ),
        Command::Verify { poly, file } => {
            commands::verify(&poly, &file, cli.format.unwrap_or(Format::Text))
        }
        Command::Oracle {
            file,
            degree_bound,
            count,
        } => commands::oracle(
            file.as_deref(),
            degree_bound,
            count,
            seed,
            cli.format.unwrap_or(Format::Json),
        ),
    };
    match result {
        Ok(Outcome::Solved) => ExitCode::SUCCESS,
        Ok(Outcome::Inconsistent) => ExitCode::from(2),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
