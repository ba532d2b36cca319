mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sepdeform_core::algebra::DEFAULT_SEED;
use sepdeform_core::CoreError;

use commands::{Family, Recipe};

/// Separable deformations of group algebras: constructions and checks.
#[derive(Parser)]
#[command(name = "sepdeform", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Block decomposition of QB_n or QD_n.
    Decompose {
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Separability idempotents.
    #[command(subcommand)]
    Idempotent(IdempotentCommand),
    /// Hecke algebra arithmetic.
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Orbits and isotropy of S_{n+1} on strings in e, f.
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Deformed permutation matrices.
    #[command(subcommand)]
    Matrices(MatricesCommand),
    /// The two-parameter deformation of F2[C2 wr C2].
    Section3 {
        #[arg(long, value_enum, default_value_t = Recipe::Quadratic)]
        recipe: Recipe,
    },
    /// Acceptance suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum IdempotentCommand {
    /// Z[x,t]/(x^r - t x - 1) or a split/symmetric form.
    Cyclic(CyclicArgs),
    /// An algebra read from a JSON spec.
    Algebra {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Args)]
struct CyclicArgs {
    #[arg(long)]
    r: usize,
    /// Split form with roots η^i (1 + t).
    #[arg(long, conflicts_with = "symmetric")]
    split: bool,
    /// Form symmetric under x -> 1/x.
    #[arg(long)]
    symmetric: bool,
}

#[derive(Subcommand)]
enum HeckeCommand {
    /// Product of two elements given as generator words or cycles.
    Mul {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
}

#[derive(Subcommand)]
enum MatricesCommand {
    Section11,
}

#[derive(Subcommand)]
enum VerifyCommand {
    All {
        /// Largest group rank in the block and orbit criteria.
        #[arg(long)]
        max_n: Option<usize>,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn run(cli: &Cli) -> Result<report::Report, CoreError> {
    match &cli.command {
        Command::Decompose { family, n } => commands::decompose(*family, *n),
        Command::Idempotent(IdempotentCommand::Cyclic(a)) if a.split => commands::idempotent_split(a.r),
        Command::Idempotent(IdempotentCommand::Cyclic(a)) if a.symmetric => commands::idempotent_symmetric(a.r),
        Command::Idempotent(IdempotentCommand::Cyclic(a)) => commands::idempotent_cyclic(a.r),
        Command::Idempotent(IdempotentCommand::Algebra { spec }) => commands::idempotent_algebra(spec),
        Command::Hecke(HeckeCommand::Mul { n, left, right }) => commands::hecke_mul(*n, left, right),
        Command::Orbits { n } => commands::orbits(*n),
        Command::Matrices(MatricesCommand::Section11) => commands::matrices_section11(),
        Command::Section3 { recipe } => commands::section3(*recipe),
        Command::Verify(VerifyCommand::All { max_n }) => commands::verify_all(*max_n, cli.seed),
    }
}

fn exit_code(e: &CoreError) -> u8 {
    match e {
        CoreError::BudgetExceeded { .. } => EXIT_BUDGET,
        CoreError::RelationFailure(_) | CoreError::DescriptorMismatch(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut rep) => {
            rep.elapsed_ms = start.elapsed().as_millis();
            match cli.format {
                Format::Text => print!("{}", report::render_text(&rep)),
                Format::Json => println!("{}", report::render_json(&rep)),
            }
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(e) => {
            if cli.format == Format::Json {
                println!("{}", serde_json::json!({"status": "error", "error": e.to_string()}));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
