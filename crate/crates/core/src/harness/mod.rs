//! Per-graph reports, theorem sweeps over graph families, and family export.

mod report;
mod verify;

pub use report::{analyze, AnalyzeOptions, BoundCheck, Invariants, PrimeSummary, Report, Stage};
pub use verify::{random_graph, verify, Counterexample, Theorem, Verdict, VerifyOptions};

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::betti::BettiError;
use crate::graph::{enumerate_graphs, Family, GraphError};
use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Betti(#[from] BettiError),
    #[error("{0}")]
    Unsupported(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl From<PolyError> for HarnessError {
    fn from(e: PolyError) -> Self {
        HarnessError::Groebner(e.into())
    }
}

impl HarnessError {
    /// 2 for bad input or unsupported requests, 3 for resource caps.
    pub fn exit_code(&self) -> i32 {
        let cap = |e: &GroebnerError| {
            matches!(
                e,
                GroebnerError::BasisTooLarge(_) | GroebnerError::DegreeTooLarge(..)
            )
        };
        match self {
            HarnessError::Groebner(e) if cap(e) => 3,
            HarnessError::Betti(BettiError::Groebner(e)) if cap(e) => 3,
            HarnessError::Betti(BettiError::DegreeCapExceeded { .. }) => 3,
            HarnessError::Graph(GraphError::TooLarge(_)) => 3,
            _ => 2,
        }
    }
}

/// Writes one JSON file per isomorphism class and returns the paths.
pub fn enumerate_to_dir(family: Family, n: usize, dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    let graphs = enumerate_graphs(family, n)?;
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| HarnessError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    let width = graphs.len().to_string().len();
    let mut paths = Vec::with_capacity(graphs.len());
    for (k, g) in graphs.iter().enumerate() {
        let path = dir.join(format!("{family}-n{n}-{:0width$}.json", k + 1));
        std::fs::write(&path, g.to_json() + "\n").map_err(io(&path))?;
        paths.push(path);
    }
    Ok(paths)
}
