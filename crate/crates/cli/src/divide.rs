use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde_json::json;

use balcover_core::balancing::{d_color_division, two_color_division, verify_d_color, verify_two_color, ColorReport};
use balcover_core::division::{
    rf_division, uniform_division, verify_division, verify_division_with, Division, DivisionReport, SizeRule,
};
use balcover_core::graph::Graph;

use crate::error::CliError;
use crate::files::{emit, json_line, read, read_graph, report};
use crate::{Format, OracleArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Rf,
    Uniform,
    TwoColor,
    DColor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Closed,
    Uniform,
    Any,
    TwoColor,
    DColor,
}

#[derive(Args)]
pub struct DivideArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    r: usize,
    /// Chunk parameter for two-color divisions.
    #[arg(long, default_value_t = 1)]
    q: usize,
    #[arg(long, value_enum, default_value_t = Mode::Uniform)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = OracleArg::LiptonTarjan)]
    oracle: OracleArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn division_fields(r: &DivisionReport) -> serde_json::Value {
    json!({
        "t": r.t,
        "max_part_size": r.max_part_size,
        "min_part_size": r.min_part_size,
        "max_part_boundary": r.max_part_boundary,
        "boundary_total": r.boundary_total,
        "boundary_size": r.boundary_size,
        "measured_c1": r.measured_c1,
        "measured_c2": r.measured_c2,
        "violations": r.violations,
    })
}

fn color_fields(c: &ColorReport) -> serde_json::Value {
    json!({
        "bound": c.bound.to_string(),
        "max_deviation": c.max_deviation.to_string(),
        "max_deviation_global": c.max_deviation_global.to_string(),
        "global_within_bound": c.global_within_bound(),
        "violations": c.violations,
    })
}

fn render(value: &serde_json::Value, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json_line(value)),
        Format::Text => {
            let mut out = String::new();
            flatten(&mut out, "", value);
            Ok(out)
        }
        Format::Csv => Err(CliError::params("csv output is only available for bench")),
    }
}

fn flatten(out: &mut String, prefix: &str, value: &serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(out, &key, v);
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                let _ = writeln!(out, "{prefix}: {}", item.as_str().map_or(item.to_string(), str::to_string));
            }
        }
        v => {
            let _ = writeln!(out, "{prefix} {}", v.as_str().map_or(v.to_string(), str::to_string));
        }
    }
}

pub fn run(args: DivideArgs) -> Result<(), CliError> {
    let g = read_graph(&args.graph)?;
    let oracle = args.oracle.oracle();
    let (division, summary): (Division, serde_json::Value) = match args.mode {
        Mode::Rf | Mode::Uniform => {
            let (d, rule) = if args.mode == Mode::Rf {
                (rf_division(&g, oracle.as_ref(), args.r)?, SizeRule::Closed)
            } else {
                (uniform_division(&g, oracle.as_ref(), args.r)?, SizeRule::Uniform)
            };
            let rep = verify_division_with(&g, &d, rule, &oracle.bound());
            (d, json!({ "mode": format!("{:?}", args.mode).to_lowercase(), "division": division_fields(&rep) }))
        }
        Mode::TwoColor => {
            let tc = two_color_division(&g, oracle.as_ref(), args.r, args.q)?;
            let rep = verify_two_color(&g, &tc.division, tc.q_prime);
            let summary = json!({
                "mode": "two-color",
                "q_prime": tc.q_prime,
                "gamma1": tc.gamma1,
                "alpha": tc.alpha.to_string(),
                "base_parts": tc.base.t(),
                "division": division_fields(&rep.division),
                "color": color_fields(&rep),
            });
            (tc.division, summary)
        }
        Mode::DColor => {
            let dc = d_color_division(&g, oracle.as_ref(), args.r)?;
            let rep = verify_d_color(&g, &dc.division);
            let summary = json!({
                "mode": "d-color",
                "k": dc.k,
                "base_parts": dc.base.t(),
                "division": division_fields(&rep.division),
                "color": color_fields(&rep),
            });
            (dc.division, summary)
        }
    };
    emit(args.out.as_ref(), &division.to_text())?;
    report(args.out.is_some(), &render(&summary, args.format)?)
}

/// Recomputes the division invariants; returns the violations after
/// printing them.
pub fn verify_division_file(
    graph: &Path,
    division: &Path,
    rule: RuleArg,
    q_prime: Option<usize>,
    format: Format,
) -> Result<Vec<String>, CliError> {
    let g: Graph = read_graph(graph)?;
    let d = Division::parse_text(&read(division)?, &g)?;
    let (violations, value) = match rule {
        RuleArg::Closed | RuleArg::Uniform | RuleArg::Any => {
            let size_rule = match rule {
                RuleArg::Closed => SizeRule::Closed,
                RuleArg::Uniform => SizeRule::Uniform,
                _ => SizeRule::Any,
            };
            let rep = verify_division(&g, &d, size_rule);
            (rep.violations.clone(), json!({ "division": division_fields(&rep) }))
        }
        RuleArg::TwoColor => {
            let q = q_prime.ok_or_else(|| CliError::params("two-color verification needs --q with the reported q'"))?;
            let rep = verify_two_color(&g, &d, q);
            (rep.violations.clone(), json!({ "division": division_fields(&rep.division), "color": color_fields(&rep) }))
        }
        RuleArg::DColor => {
            let rep = verify_d_color(&g, &d);
            (rep.violations.clone(), json!({ "division": division_fields(&rep.division), "color": color_fields(&rep) }))
        }
    };
    let mut value = value;
    value["valid"] = json!(violations.is_empty());
    print!("{}", render(&value, format)?);
    Ok(violations)
}
