//! Plain-text graph format.
//!
//! ```text
//! n m [rot] [colors d]
//! u v            (m lines)
//! w0 w1 ...      (n lines of cyclic neighbor order, when `rot`)
//! c              (n lines of color indices, when `colors`)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseGraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseGraphError {
    ParseGraphError::Syntax { line, message: message.into() }
}

fn parse_list(line_no: usize, text: &str) -> Result<Vec<usize>, ParseGraphError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(line_no, format!("bad integer `{t}`"))))
        .collect()
}

impl Graph {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write!(out, "{} {}", self.n(), self.edge_count()).unwrap();
        if self.rotation().is_some() {
            out.push_str(" rot");
        }
        if self.colors().is_some() {
            write!(out, " colors {}", self.color_count()).unwrap();
        }
        out.push('\n');
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        if let Some(rot) = self.rotation() {
            for order in rot {
                let line: Vec<String> = order.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", line.join(" ")).unwrap();
            }
        }
        if let Some(colors) = self.colors() {
            for c in colors {
                writeln!(out, "{c}").unwrap();
            }
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Graph, ParseGraphError> {
        // Blank lines are meaningful in the rotation block (isolated vertices),
        // so only trailing whitespace on each line is ignored.
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
        let (hline, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| ParseGraphError::Truncated("header".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        if tokens.len() < 2 {
            return Err(syntax(hline, "header must start with `n m`"));
        }
        let n: usize = tokens[0].parse().map_err(|_| syntax(hline, "bad vertex count"))?;
        let m: usize = tokens[1].parse().map_err(|_| syntax(hline, "bad edge count"))?;
        let mut has_rot = false;
        let mut color_count = None;
        let mut i = 2;
        while i < tokens.len() {
            match tokens[i] {
                "rot" => has_rot = true,
                "colors" => {
                    let d = tokens
                        .get(i + 1)
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| syntax(hline, "`colors` needs a count"))?;
                    color_count = Some(d);
                    i += 1;
                }
                other => return Err(syntax(hline, format!("unknown header token `{other}`"))),
            }
            i += 1;
        }

        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| ParseGraphError::Truncated(format!("edge {k}")))?;
            let pair = parse_list(ln, l)?;
            if pair.len() != 2 {
                return Err(syntax(ln, "edge line must contain two vertices"));
            }
            edges.push((pair[0], pair[1]));
        }
        let mut g = Graph::from_edges(n, &edges)?;
        if has_rot {
            let mut rot = Vec::with_capacity(n);
            for v in 0..n {
                let (ln, l) = lines
                    .next()
                    .ok_or_else(|| ParseGraphError::Truncated(format!("rotation of vertex {v}")))?;
                rot.push(parse_list(ln, l)?);
            }
            g = g.with_rotation(rot)?;
        }
        if let Some(d) = color_count {
            let mut colors = Vec::with_capacity(n);
            for v in 0..n {
                let (ln, l) = lines
                    .next()
                    .ok_or_else(|| ParseGraphError::Truncated(format!("color of vertex {v}")))?;
                colors.push(l.trim().parse().map_err(|_| syntax(ln, "bad color"))?);
            }
            g = g.with_colors(colors, d)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_rotation_and_colors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)])
            .unwrap()
            .with_rotation(vec![vec![1], vec![2, 0], vec![1], vec![]])
            .unwrap()
            .with_colors(vec![0, 1, 0, 1], 2)
            .unwrap();
        let text = g.to_text();
        assert!(text.starts_with("4 2 rot colors 2\n"));
        assert_eq!(Graph::parse_text(&text).unwrap(), g);
    }

    #[test]
    fn truncated_input_is_an_error() {
        assert!(matches!(
            Graph::parse_text("3 2\n0 1\n"),
            Err(ParseGraphError::Truncated(_))
        ));
        assert!(Graph::parse_text("3 1 bogus\n0 1\n").is_err());
    }
}
