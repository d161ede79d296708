//! Plain-text division format.
//!
//! ```text
//! t |X| r
//! x1 x2 ...      (the boundary set, possibly empty)
//! v1 v2 ...      (t lines, one per part)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::Division;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseDivisionError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

fn line_of(s: &[usize]) -> String {
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl Division {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {} {}", self.t(), self.boundary.len(), self.r).unwrap();
        writeln!(out, "{}", line_of(&self.boundary)).unwrap();
        for p in &self.parts {
            writeln!(out, "{}", line_of(p)).unwrap();
        }
        out
    }

    /// Parses a division of `g`. Part boundaries are recomputed from `g`.
    pub fn parse_text(text: &str, g: &Graph) -> Result<Division, ParseDivisionError> {
        let syntax = |line: usize, message: &str| ParseDivisionError::Syntax { line, message: message.into() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (hline, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| ParseDivisionError::Truncated("header".into()))?;
        let head: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| syntax(hline, "bad header integer")))
            .collect::<Result<_, _>>()?;
        let &[t, x_len, r] = head.as_slice() else {
            return Err(syntax(hline, "header must be `t |X| r`"));
        };
        let mut read = |what: String| -> Result<Vec<usize>, ParseDivisionError> {
            let (ln, l) = lines.next().ok_or_else(|| ParseDivisionError::Truncated(what))?;
            let set: Vec<usize> = l
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| syntax(ln, "bad vertex")))
                .collect::<Result<_, _>>()?;
            if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
                return Err(ParseDivisionError::OutOfRange { vertex: v, n: g.n() });
            }
            Ok(set)
        };
        let boundary = read("boundary line".into())?;
        if boundary.len() != x_len {
            return Err(syntax(hline + 1, "boundary size disagrees with header"));
        }
        let parts = (0..t).map(|i| read(format!("part {i}"))).collect::<Result<Vec<_>, _>>()?;
        Ok(Division::from_parts(g, boundary, parts, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn round_trip() {
        let g = cycle(6);
        let d = Division::from_parts(&g, vec![0, 3], vec![vec![1, 2], vec![4, 5]], 4);
        let text = d.to_text();
        assert_eq!(text, "2 2 4\n0 3\n1 2\n4 5\n");
        assert_eq!(Division::parse_text(&text, &g).unwrap(), d);
    }

    #[test]
    fn empty_boundary_line() {
        let g = cycle(4);
        let d = Division::from_parts(&g, vec![], vec![vec![0, 1, 2, 3]], 10);
        assert_eq!(Division::parse_text(&d.to_text(), &g).unwrap(), d);
    }

    #[test]
    fn rejects_bad_input() {
        let g = cycle(4);
        assert!(matches!(Division::parse_text("1 0 4\n\n0 9\n", &g), Err(ParseDivisionError::OutOfRange { .. })));
        assert!(matches!(Division::parse_text("2 0 4\n\n0 1\n", &g), Err(ParseDivisionError::Truncated(_))));
        assert!(Division::parse_text("2 0\n", &g).is_err());
    }
}
