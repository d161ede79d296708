use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde_json::json;

use balcover_core::coverage::{
    analysis_replay, brute_force_mc, local_search_with, trace_to_text, verify_local_optimum, GraphProvider, Init,
    LocalOptimality, LocalSearchConfig, ReplayConfig,
};

use crate::error::CliError;
use crate::files::{emit, json_line, read_graph, read_instance, read_solution, report};
use crate::{Format, OracleArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InitArg {
    Greedy,
    Empty,
    Random,
}

#[derive(Args)]
pub struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    b: usize,
    #[arg(long, value_enum, default_value_t = InitArg::Greedy)]
    init: InitArg,
    /// Start from this solution instead of `--init`.
    #[arg(long)]
    start: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200_000_000)]
    work_limit: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
pub struct ExactArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ReplayArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Graph behind an mvc/md instance.
    #[arg(long)]
    graph: PathBuf,
    /// The instance is a dominating set reduction (vertex cover otherwise).
    #[arg(long)]
    dominating: bool,
    /// Locally optimal solution under analysis.
    #[arg(long)]
    a: PathBuf,
    /// Comparison solution; an exact optimum when absent.
    #[arg(long)]
    o: Option<PathBuf>,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, value_enum, default_value_t = OracleArg::LiptonTarjan)]
    oracle: OracleArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

pub fn run_solve(args: SolveArgs) -> Result<(), CliError> {
    let inst = read_instance(&args.instance)?;
    let mut config = LocalSearchConfig::new(args.b);
    config.work_limit = args.work_limit;
    config.init = match (&args.start, args.init) {
        (Some(p), _) => Init::Given(read_solution(p, &inst)?),
        (None, InitArg::Greedy) => Init::Greedy,
        (None, InitArg::Empty) => Init::Empty,
        (None, InitArg::Random) => Init::Random(args.seed),
    };
    let result = local_search_with(&inst, &config)?;
    emit(args.out.as_ref(), &result.solution.to_json())?;
    if let Some(p) = &args.trace {
        emit(Some(p), &trace_to_text(&result.trace))?;
    }
    let text = match args.format {
        Format::Json => json_line(&json!({
            "coverage": result.solution.coverage,
            "swaps": result.trace.len(),
            "certified": result.certified,
            "evaluated": result.evaluated,
        })),
        Format::Text => format!(
            "coverage {}\nswaps {}\ncertified {}\nevaluated {}\n",
            result.solution.coverage,
            result.trace.len(),
            result.certified,
            result.evaluated
        ),
        Format::Csv => return Err(CliError::params("csv output is only available for bench")),
    };
    report(args.out.is_some(), &text)
}

pub fn run_exact(args: ExactArgs) -> Result<(), CliError> {
    let inst = read_instance(&args.instance)?;
    let sol = brute_force_mc(&inst)?;
    emit(args.out.as_ref(), &sol.to_json())
}

pub fn run_replay(args: ReplayArgs) -> Result<(), CliError> {
    let inst = read_instance(&args.instance)?;
    let graph = read_graph(&args.graph)?;
    if graph.n() != inst.family_size() {
        return Err(CliError::params(format!(
            "graph has {} vertices but the instance has {} sets",
            graph.n(),
            inst.family_size()
        )));
    }
    let a = read_solution(&args.a, &inst)?;
    let o = match &args.o {
        Some(p) => read_solution(p, &inst)?,
        None => brute_force_mc(&inst)?,
    };
    let provider = GraphProvider { graph, dominating: args.dominating };
    let config = ReplayConfig { b: args.b, r: args.r, q: args.q };
    let oracle = args.oracle.oracle();
    let replay = analysis_replay(&inst, &a, &o, &provider, oracle.as_ref(), &config)?;
    let text = match args.format {
        Format::Text => replay.to_text(),
        Format::Json => {
            let swap = |s: &Option<balcover_core::coverage::CandidateSwap>| {
                s.as_ref().map(|c| json!({ "part": c.part, "out": c.out, "into": c.into, "gain": c.gain, "within_b": c.within_b }))
            };
            let parts: Vec<_> = replay
                .parts
                .iter()
                .map(|p| {
                    json!({
                        "a_sets": p.a_sets,
                        "o_bar": p.o_bar,
                        "lost": p.lost,
                        "won": p.won,
                        "greedy_order": p.greedy_order,
                        "marginal_gains": p.marginal_gains,
                        "prefix_cover": p.prefix_cover,
                        "prefix_bound_holds": p.prefix_bound_holds,
                        "candidate": swap(&p.candidate),
                    })
                })
                .collect();
            json_line(&json!({
                "alg": replay.alg,
                "opt": replay.opt,
                "z": replay.z,
                "z_parts_only": replay.z_parts_only,
                "lost_total": replay.lost_total,
                "won_total": replay.won_total,
                "lost_claim": replay.lost_claim,
                "won_claim": replay.won_claim,
                "prefix_bounds_hold": replay.prefix_bounds_hold,
                "gains_non_increasing": replay.gains_non_increasing,
                "exchange_violations": replay.exchange_violations,
                "overflow": replay.overflow,
                "threshold": replay.threshold,
                "best_swap": swap(&replay.best_swap),
                "parts": parts,
            }))
        }
        Format::Csv => return Err(CliError::params("csv output is only available for bench")),
    };
    print!("{text}");
    if replay.claims_hold() {
        Ok(())
    } else {
        Err(CliError::invariant("a counting claim failed"))
    }
}

/// Checks a solution file's feasibility and stored coverage, and with `b`
/// its b-swap local optimality.
pub fn verify_solution_file(
    instance: &Path,
    solution: &Path,
    b: Option<usize>,
    format: Format,
) -> Result<Vec<String>, CliError> {
    let inst = read_instance(instance)?;
    let sol = balcover_core::coverage::Solution::from_json(&crate::files::read(solution)?)?;
    let mut violations = Vec::new();
    if let Err(e) = sol.validate(&inst) {
        violations.push(e);
    }
    if let (Some(b), true) = (b, violations.is_empty()) {
        if let LocalOptimality::Improvable(m) = verify_local_optimum(&inst, &sol, b)? {
            violations.push(format!("improving swap: out {:?} into {:?} gain {}", m.out, m.into, m.gain));
        }
    }
    match format {
        Format::Json => print!("{}", json_line(&json!({ "valid": violations.is_empty(), "violations": violations }))),
        _ => {
            for v in &violations {
                println!("violation: {v}");
            }
            println!("valid {}", violations.is_empty());
        }
    }
    Ok(violations)
}
