//! Plain-text format for balanced partitions.
//!
//! ```text
//! k <k> q <q'|-> certificates <0|1>
//! p1 p2 ... pn             (the permutation)
//! i1 i2 ...                (k chunk lines)
//! x1 x2 ...                (k certificate lines, when present)
//! ```

use std::fmt::{Display, Write as _};
use std::str::FromStr;

use thiserror::Error;

use super::BalancedPartition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParsePartitionError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("inconsistent partition: {0}")]
    Structure(String),
}

fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl<T: Display> BalancedPartition<T> {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let q = self.q_prime.map_or("-".to_string(), |q| q.to_string());
        let certs = usize::from(!self.certificates.is_empty());
        writeln!(out, "k {} q {q} certificates {certs}", self.chunks.len()).unwrap();
        writeln!(out, "{}", join(&self.permutation)).unwrap();
        for c in &self.chunks {
            writeln!(out, "{}", join(c)).unwrap();
        }
        for c in &self.certificates {
            writeln!(out, "{}", join(c)).unwrap();
        }
        out
    }
}

impl<T: FromStr> BalancedPartition<T> {
    pub fn parse_text(text: &str) -> Result<Self, ParsePartitionError> {
        let syntax = |line: usize, message: String| ParsePartitionError::Syntax { line, message };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (hline, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| ParsePartitionError::Truncated("header".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let ["k", k, "q", q, "certificates", certs] = tokens.as_slice() else {
            return Err(syntax(hline, "header must be `k <k> q <q'|-> certificates <0|1>`".into()));
        };
        let k: usize = k.parse().map_err(|_| syntax(hline, "bad chunk count".into()))?;
        let q_prime = match *q {
            "-" => None,
            q => Some(q.parse().map_err(|_| syntax(hline, "bad q'".into()))?),
        };
        let with_certs = match *certs {
            "0" => false,
            "1" => true,
            _ => return Err(syntax(hline, "certificates flag must be 0 or 1".into())),
        };
        let permutation: Vec<usize> = read_row(&mut lines, "permutation")?;
        let chunks = (0..k).map(|j| read_row(&mut lines, &format!("chunk {j}"))).collect::<Result<Vec<_>, _>>()?;
        let certificates = if with_certs {
            (0..k).map(|j| read_row(&mut lines, &format!("certificate {j}"))).collect::<Result<Vec<_>, _>>()?
        } else {
            Vec::new()
        };
        let p = BalancedPartition { permutation, chunks, q_prime, certificates };
        p.check_structure().map_err(ParsePartitionError::Structure)?;
        Ok(p)
    }
}

fn read_row<'a, U: FromStr>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<Vec<U>, ParsePartitionError> {
    let (ln, l) = lines.next().ok_or_else(|| ParsePartitionError::Truncated(what.into()))?;
    l.split_whitespace()
        .map(|t| t.parse().map_err(|_| ParsePartitionError::Syntax { line: ln, message: format!("bad entry `{t}`") }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn round_trip_with_certificates() {
        let p = BalancedPartition {
            permutation: vec![2, 0, 1, 3],
            chunks: vec![vec![2, 0], vec![1, 3]],
            q_prime: Some(2),
            certificates: vec![vec![Rational::new(1.into(), 2.into())], vec![Rational::new((-1).into(), 2.into())]],
        };
        let text = p.to_text();
        assert_eq!(text, "k 2 q 2 certificates 1\n2 0 1 3\n2 0\n1 3\n1/2\n-1/2\n");
        assert_eq!(BalancedPartition::<Rational>::parse_text(&text).unwrap(), p);
    }

    #[test]
    fn rejects_non_consecutive_chunks() {
        let text = "k 2 q - certificates 0\n0 1 2\n0 2\n1\n";
        assert!(matches!(
            BalancedPartition::<Rational>::parse_text(text),
            Err(ParsePartitionError::Structure(_))
        ));
    }
}
