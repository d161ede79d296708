use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use balcover_core::coverage::{CoverageInstance, Solution};
use balcover_core::graph::Graph;

use crate::error::CliError;

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::new("io", crate::error::EXIT_OTHER, format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(Graph::parse_text(&read(path)?)?)
}

pub fn read_instance(path: &Path) -> Result<CoverageInstance, CliError> {
    Ok(CoverageInstance::from_json(&read(path)?)?)
}

/// Reads a solution file and checks it against `inst`.
pub fn read_solution(path: &Path, inst: &CoverageInstance) -> Result<Solution, CliError> {
    let sol = Solution::from_json(&read(path)?)?;
    sol.validate(inst).map_err(|e| CliError::new("invalid-input", crate::error::EXIT_OTHER, e))?;
    Ok(sol)
}

/// Writes `text` to `path`, or to stdout without one.
pub fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::new("io", crate::error::EXIT_OTHER, format!("{}: {e}", p.display()))),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Reports go to stdout when the main artifact went to a file, to stderr
/// otherwise.
pub fn report(artifact_to_file: bool, text: &str) -> Result<(), CliError> {
    if artifact_to_file {
        std::io::stdout().write_all(text.as_bytes())?;
    } else {
        std::io::stderr().write_all(text.as_bytes())?;
    }
    Ok(())
}

pub fn json_line(value: &serde_json::Value) -> String {
    serde_json::to_string(value).expect("json value") + "\n"
}
