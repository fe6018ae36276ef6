//! Thin command-line wrapper over the library's report drivers.

use clap::{Parser, Subcommand, ValueEnum};
use gamesym::cli::{
    self, basis, classify, potential, render, strategy_symmetries, ClassifyOptions, CliError,
    Format, PotentialOptions,
};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gamesym",
    about = "Exact symmetry classification and potential-function synthesis for finite games",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a game: ordinary/weighted/renaming/name-irrelevant symmetry.
    Classify {
        /// Path to a game file.
        file: String,
        /// Fail (exit 3) instead of skipping checks that exceed the bound.
        #[arg(long)]
        strict: bool,
        /// Enumeration bound on |Θ| and the renaming search.
        #[arg(long)]
        bound: Option<u128>,
    },
    /// Solve the (weighted or renaming) potential equation for a game.
    Potential {
        /// Path to a game file.
        file: String,
        /// Positive weights `w_1,...,w_n`, e.g. `1/3,1/2`.
        #[arg(long)]
        weights: Option<String>,
        /// Per-player renaming cycles, e.g. `(),(1,2)`.
        #[arg(long)]
        renaming: Option<String>,
    },
    /// Basis of the ordinary symmetric subspace of n-player κ-strategy games.
    Basis {
        /// Number of players.
        players: usize,
        /// Common strategy count κ.
        strategies: usize,
        /// Dimension bound on n·κ^n.
        #[arg(long)]
        bound: Option<u128>,
    },
    /// Enumerate the strategy symmetry group Θ(G) and its player shadows.
    StrategySymmetries {
        /// Path to a game file.
        file: String,
        /// Enumeration bound on |Θ|.
        #[arg(long)]
        bound: Option<u128>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format: Format = cli.format.into();
    match cli.command {
        Command::Classify {
            file,
            strict,
            bound,
        } => {
            let game_file = cli::load_game_file(&file)?;
            let opts = ClassifyOptions {
                bound: bound.unwrap_or(ClassifyOptions::default().bound),
                strict,
            };
            Ok(render(&classify(&game_file, &opts)?, format))
        }
        Command::Potential {
            file,
            weights,
            renaming,
        } => {
            let game_file = cli::load_game_file(&file)?;
            let opts = PotentialOptions { weights, renaming };
            Ok(render(&potential(&game_file, &opts)?, format))
        }
        Command::Basis {
            players,
            strategies,
            bound,
        } => Ok(render(&basis(players, strategies, bound)?, format)),
        Command::StrategySymmetries { file, bound } => {
            let game_file = cli::load_game_file(&file)?;
            Ok(render(&strategy_symmetries(&game_file, bound)?, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
