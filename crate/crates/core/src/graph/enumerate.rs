use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::classes::{classify_c_ell, is_block_graph};
use super::{Graph, GraphError, VertexSet};

/// Graph families the harness sweeps over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Tree,
    ConnectedBlock,
    Connected,
    CEll,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Tree, Family::ConnectedBlock, Family::Connected, Family::CEll];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::ConnectedBlock => "connected-block",
            Family::Connected => "connected",
            Family::CEll => "c-ell",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::Parse(format!("unknown graph family `{s}`")))
    }
}

/// Largest `n` each family is enumerated for.
pub fn family_cap(family: Family) -> usize {
    match family {
        Family::Tree => 9,
        Family::Connected => 6,
        Family::ConnectedBlock | Family::CEll => 7,
    }
}

/// Relabels `g` so that old vertex `v` becomes `perm[v - 1]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    assert_eq!(perm.len(), g.n());
    let mut out = Graph::edgeless(g.n());
    for (a, b) in g.edges() {
        out.add_edge(perm[a - 1], perm[b - 1]);
    }
    out
}

pub fn random_relabeling<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (1..=g.n()).collect();
    perm.shuffle(rng);
    relabel(g, &perm)
}

type Cells = Vec<Vec<usize>>;

/// Splits cells by neighbour counts until the ordered partition is equitable.
/// Sub-cells are ordered by their signature, so the result does not depend on
/// vertex labels.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig = masks
                    .iter()
                    .map(|m| g.neighbors(v).intersection(*m).len())
                    .collect();
                groups.entry(sig).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_for(g: &Graph, cells: &Cells) -> Vec<u64> {
    let mut label = vec![0usize; g.n() + 1];
    for (k, cell) in cells.iter().enumerate() {
        label[cell[0]] = k;
    }
    let mut rows = vec![0u64; g.n()];
    for v in 1..=g.n() {
        rows[label[v]] = g.neighbors(v).iter().fold(0u64, |m, u| m | 1u64 << label[u]);
    }
    rows
}

fn best_leaf(g: &Graph, cells: Cells, best: &mut Option<(Vec<u64>, Cells)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let code = code_for(g, &cells);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, cells));
        }
        return;
    };
    for &v in &cells[target] {
        let mut branch = cells[..target].to_vec();
        branch.push(vec![v]);
        branch.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        branch.extend_from_slice(&cells[target + 1..]);
        best_leaf(g, branch, best);
    }
}

/// Canonical representative of the isomorphism class of `g`: equal for two
/// graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Graph {
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 1..=g.n() {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let mut best = None;
    best_leaf(g, by_degree.into_values().collect(), &mut best);
    let (_, cells) = best.expect("search reaches at least one leaf");
    let mut perm = vec![0; g.n()];
    for (k, cell) in cells.iter().enumerate() {
        perm[cell[0] - 1] = k + 1;
    }
    relabel(g, &perm)
}

fn dedup(candidates: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen: BTreeMap<(usize, Vec<(usize, usize)>), Graph> = BTreeMap::new();
    for g in candidates {
        let c = canonical_form(&g);
        seen.entry((c.edge_count(), c.edges())).or_insert(c);
    }
    seen.into_values().collect()
}

fn extend_by_vertex(g: &Graph, attach: VertexSet) -> Graph {
    let n = g.n() + 1;
    let mut out = Graph::edgeless(n);
    for (a, b) in g.edges() {
        out.add_edge(a, b);
    }
    for v in attach.iter() {
        out.add_edge(v, n);
    }
    out
}

fn grow(
    n: usize,
    allowed: &dyn Fn(&Graph, VertexSet) -> bool,
    keep: &dyn Fn(&Graph) -> bool,
) -> Vec<Graph> {
    let mut current = vec![Graph::edgeless(1)];
    for m in 2..=n {
        let candidates = current.iter().flat_map(|g| {
            (1u64..1 << (m - 1))
                .map(VertexSet)
                .filter(|&s| allowed(g, s))
                .map(|s| extend_by_vertex(g, s))
                .filter(|h| keep(h))
                .collect::<Vec<_>>()
        });
        current = dedup(candidates);
    }
    current
}

/// One canonical representative per isomorphism class of the family on `n`
/// vertices, in a deterministic order.
///
/// Every connected graph has a non-cut vertex whose removal leaves a connected
/// graph of the same family, so each family is grown one vertex at a time.
pub fn enumerate_graphs(family: Family, n: usize) -> Result<Vec<Graph>, GraphError> {
    let cap = family_cap(family);
    if n == 0 || n > cap {
        return Err(GraphError::UnsupportedSize { family, n, cap });
    }
    let graphs = match family {
        Family::Tree => grow(n, &|_, s| s.len() == 1, &|_| true),
        Family::Connected => grow(n, &|_, _| true, &|_| true),
        Family::ConnectedBlock => grow(n, &|g, s| g.is_clique(s), &is_block_graph),
        Family::CEll => grow(n, &|g, s| g.is_clique(s), &is_block_graph)
            .into_iter()
            .filter(|g| classify_c_ell(g).is_some())
            .collect(),
    };
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn canonical_form_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [Graph::path(6), Graph::star(7), Graph::cycle(5), Graph::complete(4)] {
            let c = canonical_form(&g);
            for _ in 0..10 {
                assert_eq!(canonical_form(&random_relabeling(&g, &mut rng)), c);
            }
        }
        assert_ne!(canonical_form(&Graph::path(4)), canonical_form(&Graph::star(4)));
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(Family::Tree, 4).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(Family::Connected, 3).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(Family::Connected, 4).unwrap().len(), 6);
        assert_eq!(enumerate_graphs(Family::ConnectedBlock, 4).unwrap().len(), 4);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_graphs(Family::Connected, 7),
            Err(GraphError::UnsupportedSize { cap: 6, .. })
        ));
        assert!(enumerate_graphs(Family::Tree, 0).is_err());
        assert_eq!("c-ell".parse::<Family>(), Ok(Family::CEll));
        assert!("forest".parse::<Family>().is_err());
    }
}
