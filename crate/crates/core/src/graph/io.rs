use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// On-disk graph: `{"n": 4, "edges": [[1, 2], [2, 3]]}` with 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, Self::Error> {
        let edges: Vec<(usize, usize)> = value.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(value.n, &edges)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    /// Parses either the JSON form or the plain edge-list text form (first
    /// line `n`, then one `i j` pair per line; `#` starts a comment).
    pub fn parse(input: &str) -> Result<Graph, GraphError> {
        let trimmed = input.trim_start();
        if trimmed.starts_with('{') {
            let json: GraphJson =
                serde_json::from_str(trimmed).map_err(|e| GraphError::Parse(e.to_string()))?;
            return Graph::try_from(json);
        }
        let mut lines = input
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (_, first) = lines
            .next()
            .ok_or_else(|| GraphError::Parse("empty input".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| GraphError::Parse(format!("expected vertex count, found `{first}`")))?;
        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let nums: Vec<&str> = line.split_whitespace().collect();
            let parsed: Option<Vec<usize>> = nums.iter().map(|s| s.parse().ok()).collect();
            match parsed.as_deref() {
                Some([a, b]) => edges.push((*a, *b)),
                _ => {
                    return Err(GraphError::Parse(format!(
                        "line {}: expected `i j`, found `{line}`",
                        lineno + 1
                    )))
                }
            }
        }
        Graph::new(n, &edges)
    }
}
