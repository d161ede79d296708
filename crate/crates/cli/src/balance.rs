//! Vector files: a header `n d`, then `n` lines of `d` numbers (integers,
//! fractions such as `3/4`, or decimals). Lines starting with `#` are
//! skipped.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use num_traits::{Signed, Zero};
use serde_json::json;

use balcover_core::balancing::{partition_two_vectors, steinitz_bound, vector_partition_steinitz, TwoVectorSet};
use balcover_core::scalar::parse_scalar;
use balcover_core::{ExactPartition, Rational};

use crate::error::CliError;
use crate::files::{emit, json_line, read, report};
use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    TwoVector,
    Steinitz,
}

#[derive(Args)]
pub struct BalanceArgs {
    #[arg(long)]
    vectors: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::TwoVector)]
    mode: Mode,
    /// Minimum chunk size for two-vector partitions.
    #[arg(long, default_value_t = 1)]
    q: usize,
    /// Number of chunks for Steinitz partitions.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Lower bound on `a + b`; the smallest sum when absent.
    #[arg(long)]
    c_low: Option<String>,
    /// Upper bound on `a + b`; the largest sum when absent.
    #[arg(long)]
    c_high: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

pub fn parse_vectors(text: &str) -> Result<Vec<Vec<Rational>>, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (_, header) = lines.next().ok_or_else(|| CliError::parse("vector file is empty"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| CliError::parse(format!("bad header `{header}`"))))
        .collect::<Result<_, _>>()?;
    let [n, d] = dims[..] else {
        return Err(CliError::parse("vector header must be `n d`"));
    };
    let mut vectors = Vec::with_capacity(n);
    for (i, line) in lines {
        let v: Vec<Rational> = line
            .split_whitespace()
            .map(|t| parse_scalar(t).ok_or_else(|| CliError::parse(format!("line {}: bad number `{t}`", i + 1))))
            .collect::<Result<_, _>>()?;
        if v.len() != d {
            return Err(CliError::parse(format!("line {}: expected {d} entries, found {}", i + 1, v.len())));
        }
        vectors.push(v);
    }
    if vectors.len() != n {
        return Err(CliError::parse(format!("header announces {n} vectors, found {}", vectors.len())));
    }
    Ok(vectors)
}

fn bound_arg(text: &Option<String>) -> Result<Option<Rational>, CliError> {
    text.as_ref()
        .map(|t| parse_scalar(t).ok_or_else(|| CliError::params(format!("bad bound `{t}`"))))
        .transpose()
}

fn sums(vectors: &[Vec<Rational>]) -> Vec<Rational> {
    vectors.iter().map(|v| v.iter().fold(Rational::zero(), |s, x| s + x)).collect()
}

pub fn run(args: BalanceArgs) -> Result<(), CliError> {
    let vectors = parse_vectors(&read(&args.vectors)?)?;
    if vectors.is_empty() {
        return Err(CliError::params("no vectors to partition"));
    }
    let partition: ExactPartition = match args.mode {
        Mode::TwoVector => {
            if vectors[0].len() != 2 {
                return Err(CliError::params("two-vector mode needs d = 2"));
            }
            let totals = sums(&vectors);
            let c_low = bound_arg(&args.c_low)?.unwrap_or_else(|| totals.iter().min().unwrap().clone());
            let c_high = bound_arg(&args.c_high)?.unwrap_or_else(|| totals.iter().max().unwrap().clone());
            let pairs = vectors.into_iter().map(|v| (v[0].clone(), v[1].clone())).collect();
            let set = TwoVectorSet::with_ratio_alpha(pairs, c_low, c_high)?;
            partition_two_vectors(&set, args.q)?
        }
        Mode::Steinitz => vector_partition_steinitz(&vectors, args.k)?,
    };
    emit(args.out.as_ref(), &partition.to_text())?;
    let summary = json!({
        "chunks": partition.chunks.len(),
        "q_prime": partition.q_prime,
        "max_certificate": partition.certificates.iter().flatten().map(|c| c.abs()).max().map(|c| c.to_string()),
    });
    let text = match args.format {
        Format::Json => json_line(&summary),
        _ => format!(
            "chunks {}\nq_prime {}\nmax_certificate {}\n",
            partition.chunks.len(),
            partition.q_prime.map_or("-".into(), |q| q.to_string()),
            summary["max_certificate"].as_str().unwrap_or("-"),
        ),
    };
    report(args.out.is_some(), &text)
}

/// Recomputes every chunk certificate and bound from the vectors.
pub fn verify_partition_file(
    vectors: &Path,
    partition: &Path,
    q: Option<usize>,
    format: Format,
) -> Result<Vec<String>, CliError> {
    let vectors = parse_vectors(&read(vectors)?)?;
    let p: ExactPartition = ExactPartition::parse_text(&read(partition)?)?;
    let n = vectors.len();
    let mut violations = Vec::new();
    if p.permutation.len() != n {
        violations.push(format!("permutation has {} entries for {n} vectors", p.permutation.len()));
    }
    if let Err(e) = p.check_structure() {
        violations.push(e);
    }
    if !violations.is_empty() {
        return finish(violations, format);
    }
    let d = vectors.first().map_or(0, Vec::len);
    let with_certs = !p.certificates.is_empty();
    if with_certs && p.certificates.len() != p.chunks.len() {
        violations.push("certificate count differs from chunk count".into());
        return finish(violations, format);
    }
    match p.q_prime {
        Some(qp) => {
            if d != 2 {
                violations.push("two-vector partition over vectors with d != 2".into());
                return finish(violations, format);
            }
            if let Some(q) = q {
                if qp < q || qp > 2 * q - 1 {
                    violations.push(format!("q' = {qp} outside [{q}, {}]", 2 * q - 1));
                }
            }
            for (j, c) in p.chunks.iter().enumerate() {
                if c.len() != qp && c.len() != qp + 1 {
                    violations.push(format!("chunk {j} has {} vectors, expected {qp} or {}", c.len(), qp + 1));
                }
            }
            let sa = vectors.iter().fold(Rational::zero(), |s, v| s + &v[0]);
            let sb = vectors.iter().fold(Rational::zero(), |s, v| s + &v[1]);
            if sb.is_zero() {
                violations.push("second coordinates sum to zero".into());
                return finish(violations, format);
            }
            let alpha = sa / sb;
            let diff: Vec<Rational> = vectors.iter().map(|v| &v[0] - &alpha * &v[1]).collect();
            let c = sums(&vectors).into_iter().max().unwrap_or_else(Rational::zero);
            let two_c = Rational::from_integer(2.into()) * &c;
            // every consecutive segment: max minus min prefix sum
            let mut acc = Rational::zero();
            let (mut lo, mut hi) = (Rational::zero(), Rational::zero());
            for &i in &p.permutation {
                acc += &diff[i];
                lo = lo.min(acc.clone());
                hi = hi.max(acc.clone());
            }
            if &hi - &lo > two_c {
                violations.push(format!("a consecutive segment has discrepancy {} > 2c = {two_c}", &hi - &lo));
            }
            for (j, chunk) in p.chunks.iter().enumerate() {
                let disc = chunk.iter().fold(Rational::zero(), |s, &i| s + &diff[i]);
                if disc.abs() > two_c {
                    violations.push(format!("chunk {j} discrepancy {disc} > 2c = {two_c}"));
                }
                if with_certs && p.certificates[j] != vec![disc.clone()] {
                    violations.push(format!("chunk {j} certificate differs from recomputed {disc}"));
                }
            }
        }
        None => {
            let k = p.chunks.len();
            let (min, max) = p.chunks.iter().fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c.len()), hi.max(c.len())));
            if k > 0 && max - min > 1 {
                violations.push(format!("chunk sizes range over [{min}, {max}]"));
            }
            let total: Vec<Rational> = (0..d).map(|c| vectors.iter().fold(Rational::zero(), |s, v| s + &v[c])).collect();
            let kk = Rational::from_integer((k as i64).into());
            let bound = Rational::from_integer(((3 * d + 1) as i64).into());
            for (j, chunk) in p.chunks.iter().enumerate() {
                let dev: Vec<Rational> =
                    (0..d).map(|c| chunk.iter().fold(&total[c] / &kk, |s, &i| s - &vectors[i][c])).collect();
                if let Some(worst) = dev.iter().map(Signed::abs).max() {
                    if worst >= bound {
                        violations.push(format!("chunk {j} deviation {worst} is not below 3d + 1 = {bound}"));
                    }
                }
                if with_certs && p.certificates[j] != dev {
                    violations.push(format!("chunk {j} certificate differs from recomputed deviation"));
                }
            }
            // prefix sums of the centered vectors in permutation order
            let nn = Rational::from_integer((n as i64).into());
            let limit = Rational::from_integer((steinitz_bound(d) as i64).into());
            let mut acc = vec![Rational::zero(); d];
            for (pos, &i) in p.permutation.iter().enumerate() {
                for c in 0..d {
                    acc[c] += &total[c] / &nn - &vectors[i][c];
                }
                if let Some(norm) = acc.iter().map(Signed::abs).max() {
                    if norm > limit {
                        violations.push(format!("prefix {} has norm {norm} > {limit}", pos + 1));
                        break;
                    }
                }
            }
        }
    }
    finish(violations, format)
}

fn finish(violations: Vec<String>, format: Format) -> Result<Vec<String>, CliError> {
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
