//! JSON instance and solution files, and the plain-text swap trace.
//!
//! Trace lines look like `out 0 4 into 7 gain 3`.

use serde::{Deserialize, Serialize};

use super::{CoverageError, CoverageInstance, Solution, SwapMove};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
    pub budget: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl InstanceFile {
    pub fn from_instance(inst: &CoverageInstance) -> Self {
        InstanceFile {
            universe_size: inst.universe_size(),
            sets: (0..inst.family_size()).map(|i| inst.members(i)).collect(),
            budget: inst.budget(),
            labels: inst.labels().map(<[String]>::to_vec),
        }
    }

    pub fn into_instance(self) -> Result<CoverageInstance, CoverageError> {
        let mut inst = CoverageInstance::new(self.universe_size, self.sets, self.budget)?;
        if let Some(labels) = self.labels {
            if labels.len() != inst.universe_size() {
                return Err(CoverageError::InvalidParameter(format!(
                    "{} labels for a universe of {}",
                    labels.len(),
                    inst.universe_size()
                )));
            }
            inst.labels = Some(labels);
        }
        Ok(inst)
    }
}

impl CoverageInstance {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&InstanceFile::from_instance(self)).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, CoverageError> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| CoverageError::InvalidParameter(format!("instance JSON: {e}")))?;
        file.into_instance()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub chosen: Vec<usize>,
    pub coverage: usize,
}

impl Solution {
    pub fn to_json(&self) -> String {
        let file = SolutionFile { chosen: self.chosen.clone(), coverage: self.coverage };
        serde_json::to_string(&file).expect("serializable") + "\n"
    }

    /// Parses a solution file. The stored coverage is kept as written;
    /// use [`Solution::validate`] to check it.
    pub fn from_json(text: &str) -> Result<Self, CoverageError> {
        let file: SolutionFile =
            serde_json::from_str(text).map_err(|e| CoverageError::InvalidParameter(format!("solution JSON: {e}")))?;
        Ok(Solution { chosen: file.chosen, coverage: file.coverage })
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| format!(" {x}")).collect()
}

pub fn trace_to_text(trace: &[SwapMove]) -> String {
    trace
        .iter()
        .map(|m| format!("out{} into{} gain {}\n", join(&m.out), join(&m.into), m.gain))
        .collect()
}

pub fn parse_trace(text: &str) -> Result<Vec<SwapMove>, CoverageError> {
    let bad = |line: usize, msg: &str| CoverageError::InvalidParameter(format!("trace line {line}: {msg}"));
    let mut moves = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("out") {
            return Err(bad(i + 1, "expected `out`"));
        }
        let mut out = Vec::new();
        let mut into = Vec::new();
        let mut target = &mut out;
        let mut gain = None;
        while let Some(t) = tokens.next() {
            match t {
                "into" => target = &mut into,
                "gain" => {
                    let g = tokens.next().and_then(|g| g.parse().ok()).ok_or_else(|| bad(i + 1, "bad gain"))?;
                    gain = Some(g);
                }
                x => target.push(x.parse().map_err(|_| bad(i + 1, "bad set index"))?),
            }
        }
        moves.push(SwapMove { out, into, gain: gain.ok_or_else(|| bad(i + 1, "missing gain"))? });
    }
    Ok(moves)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip() {
        let inst = CoverageInstance::from_labeled(vec![vec!["x", "y"], vec!["z"]], 1).unwrap();
        assert_eq!(CoverageInstance::from_json(&inst.to_json()).unwrap(), inst);
    }

    #[test]
    fn solution_and_trace_round_trip() {
        let sol = Solution { chosen: vec![1, 4], coverage: 9 };
        assert_eq!(Solution::from_json(&sol.to_json()).unwrap(), sol);
        let trace = vec![
            SwapMove { out: vec![], into: vec![3], gain: 2 },
            SwapMove { out: vec![0, 2], into: vec![5], gain: 1 },
        ];
        let text = trace_to_text(&trace);
        assert_eq!(text, "out into 3 gain 2\nout 0 2 into 5 gain 1\n");
        assert_eq!(parse_trace(&text).unwrap(), trace);
    }
}
