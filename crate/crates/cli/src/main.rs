mod balance;
mod bench;
mod divide;
mod error;
mod files;
mod generate;
mod solve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use balcover_core::separator::{ExhaustiveSeparator, PlanarSeparator, SeparatorOracle};
use error::CliError;

#[derive(Parser)]
#[command(name = "balcover", version, about = "Planar divisions, balanced partitions and local search for maximum coverage")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph or coverage instance.
    Generate(generate::GenerateArgs),
    /// Build a division of a graph.
    Divide(divide::DivideArgs),
    /// Partition a vector file into balanced chunks.
    Balance(balance::BalanceArgs),
    /// Recheck a division, solution or partition file.
    Verify(VerifyArgs),
    /// b-swap local search.
    Solve(solve::SolveArgs),
    /// Optimal solution by enumeration.
    Exact(solve::ExactArgs),
    /// Replay the counting analysis for a pair of solutions.
    Replay(solve::ReplayArgs),
    /// Compare greedy and local search against exact optima.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    division: Option<PathBuf>,
    /// Size rule for divisions.
    #[arg(long, value_enum, default_value_t = divide::RuleArg::Closed)]
    rule: divide::RuleArg,
    #[arg(long)]
    instance: Option<PathBuf>,
    #[arg(long)]
    solution: Option<PathBuf>,
    #[arg(long)]
    vectors: Option<PathBuf>,
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Swap size for local optimality, chunk parameter for partitions,
    /// or `q'` for two-color divisions.
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    LiptonTarjan,
    Exhaustive,
}

impl OracleArg {
    pub fn oracle(self) -> Box<dyn SeparatorOracle> {
        match self {
            OracleArg::LiptonTarjan => Box::new(PlanarSeparator),
            OracleArg::Exhaustive => Box::new(ExhaustiveSeparator),
        }
    }
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let violations = if let (Some(g), Some(d)) = (&args.graph, &args.division) {
        divide::verify_division_file(g, d, args.rule, args.q, args.format)?
    } else if let (Some(i), Some(s)) = (&args.instance, &args.solution) {
        solve::verify_solution_file(i, s, args.b, args.format)?
    } else if let (Some(v), Some(p)) = (&args.vectors, &args.partition) {
        balance::verify_partition_file(v, p, args.q, args.format)?
    } else {
        return Err(CliError::params(
            "verify needs --graph and --division, --instance and --solution, or --vectors and --partition",
        ));
    };
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::invariant(format!("{} violation(s)", violations.len())))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(a) => generate::run(a),
        Command::Divide(a) => divide::run(a),
        Command::Balance(a) => balance::run(a),
        Command::Verify(a) => verify(a),
        Command::Solve(a) => solve::run_solve(a),
        Command::Exact(a) => solve::run_exact(a),
        Command::Replay(a) => solve::run_replay(a),
        Command::Bench(a) => bench::run(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code as u8)
        }
    }
}
