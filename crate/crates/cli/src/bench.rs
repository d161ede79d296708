use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use balcover_core::coverage::{brute_force_mc, greedy_mc, local_search_with, CoverageError, LocalSearchConfig};
use balcover_core::generators::random_coverage;
use balcover_core::rng::stream_rng;

use crate::error::CliError;
use crate::files::{emit, json_line, report};
use crate::Format;

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 50)]
    instances: usize,
    #[arg(long, default_value_t = 24)]
    universe: usize,
    #[arg(long, default_value_t = 14)]
    sets: usize,
    #[arg(long, default_value_t = 4)]
    k: usize,
    #[arg(long, default_value_t = 0.25)]
    density: f64,
    /// Swap sizes to run, e.g. `1,2,3`.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    b: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchmarkRecord {
    pub instance: usize,
    pub method: String,
    pub coverage: usize,
    pub exact: Option<usize>,
    /// Six decimals, empty without an exact value.
    pub ratio: Option<String>,
    pub swaps: usize,
    pub millis: u128,
    pub seed: u64,
}

fn ratio(coverage: usize, exact: Option<usize>) -> Option<String> {
    exact.map(|e| if e == 0 { "1.000000".to_string() } else { format!("{:.6}", coverage as f64 / e as f64) })
}

fn run_instance(args: &BenchArgs, id: usize) -> Result<Vec<BenchmarkRecord>, CoverageError> {
    let inst = random_coverage(args.universe, args.sets, args.k, args.density, &mut stream_rng(args.seed, id as u64));
    let exact = match brute_force_mc(&inst) {
        Ok(sol) => Some(sol.coverage),
        Err(CoverageError::SizeLimitExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let record = |method: String, coverage, swaps, millis| BenchmarkRecord {
        instance: id,
        method,
        coverage,
        exact,
        ratio: ratio(coverage, exact),
        swaps,
        millis,
        seed: args.seed,
    };
    let start = Instant::now();
    let greedy = greedy_mc(&inst);
    let mut rows = vec![record("greedy".into(), greedy.coverage, 0, start.elapsed().as_millis())];
    for &b in &args.b {
        let start = Instant::now();
        let res = local_search_with(&inst, &LocalSearchConfig::new(b))?;
        rows.push(record(format!("local-{b}"), res.solution.coverage, res.trace.len(), start.elapsed().as_millis()));
    }
    Ok(rows)
}

fn summary(rows: &[BenchmarkRecord]) -> String {
    // method -> (sum, min, count), in first-seen order
    let mut order: Vec<&str> = Vec::new();
    let mut stats: BTreeMap<&str, (f64, f64, usize)> = BTreeMap::new();
    for r in rows {
        let Some(x) = r.ratio.as_deref().and_then(|s| s.parse::<f64>().ok()) else { continue };
        let e = stats.entry(&r.method).or_insert_with(|| {
            order.push(&r.method);
            (0.0, f64::INFINITY, 0)
        });
        e.0 += x;
        e.1 = e.1.min(x);
        e.2 += 1;
    }
    let mut out = format!("{:<10} {:>9} {:>9} {:>6}\n", "method", "mean", "min", "n");
    for m in order {
        let (sum, min, n) = stats[m];
        let _ = writeln!(out, "{m:<10} {:>9.6} {min:>9.6} {n:>6}", sum / n as f64);
    }
    out
}

pub fn run(args: BenchArgs) -> Result<(), CliError> {
    if args.k > args.sets {
        return Err(CliError::params(format!("k = {} exceeds the number of sets {}", args.k, args.sets)));
    }
    if !(0.0..=1.0).contains(&args.density) {
        return Err(CliError::params(format!("density = {} is not a probability", args.density)));
    }
    if args.b.iter().any(|&b| b == 0) {
        return Err(CliError::params("swap sizes must be positive"));
    }
    let per_instance: Vec<Result<Vec<BenchmarkRecord>, CoverageError>> =
        (0..args.instances).into_par_iter().map(|id| run_instance(&args, id)).collect();
    let mut rows = Vec::new();
    for r in per_instance {
        rows.extend(r?);
    }
    let body = match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::new("io", 1, e.to_string()))?).expect("utf-8 csv")
        }
        Format::Json => rows.iter().map(|r| json_line(&serde_json::to_value(r).expect("record"))).collect(),
        Format::Text => return Err(CliError::params("bench writes csv or json")),
    };
    emit(args.out.as_ref(), &body)?;
    report(args.out.is_some(), &summary(&rows))
}
