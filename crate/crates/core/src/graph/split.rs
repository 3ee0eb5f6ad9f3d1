use super::cliques::{leaf_order, maximal_cliques};
use super::{Graph, GraphError, VertexSet};

/// Decomposition of a connected block graph along its last leaf.
///
/// With `F_r` the last facet of a leaf order and `i` the vertex it shares
/// with its branch:
/// * `merged` (G') replaces `F_r` and every other facet through `i` by one
///   clique on their union;
/// * `remainder` (G'') is the induced subgraph on `[n] \ {i}`, relabeled
///   `1..n-1`, with `remainder_labels` mapping back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafSplit {
    pub vertex: usize,
    pub leaf: VertexSet,
    /// Facets other than the leaf that contain `vertex` (there are q of them).
    pub through_vertex: Vec<VertexSet>,
    pub merged: Graph,
    pub remainder: Graph,
    pub remainder_labels: Vec<usize>,
}

impl LeafSplit {
    pub fn q(&self) -> usize {
        self.through_vertex.len()
    }

    /// G'' on the original vertex set `[n]`, with `vertex` isolated.
    pub fn remainder_in_place(&self) -> Graph {
        let n = self.merged.n();
        let mut g = Graph::edgeless(n);
        for (a, b) in self.remainder.edges() {
            g.add_edge(self.remainder_labels[a - 1], self.remainder_labels[b - 1]);
        }
        g
    }
}

pub fn leaf_split(g: &Graph) -> Result<LeafSplit, GraphError> {
    if !g.is_connected() || !super::is_block_graph(g) {
        return Err(GraphError::NothingToSplit);
    }
    let complex = maximal_cliques(g);
    if complex.facets.len() < 2 {
        return Err(GraphError::NothingToSplit);
    }
    let order = leaf_order(&complex, None)?;
    let r = order.facets.len();
    let leaf = order.facets[r - 1];
    let branch = order.facets[order.branches[r - 1].expect("last facet has a branch")];
    let shared = leaf.intersection(branch);
    debug_assert_eq!(shared.len(), 1, "connected block graph leaf meets its branch in one vertex");
    let vertex = shared.first().ok_or(GraphError::NothingToSplit)?;

    let through_vertex: Vec<VertexSet> = order.facets[..r - 1]
        .iter()
        .copied()
        .filter(|f| f.contains(vertex))
        .collect();
    let union = through_vertex.iter().fold(leaf, |acc, f| acc.union(*f));

    let mut merged = Graph::edgeless(g.n());
    for f in order.facets[..r - 1].iter().filter(|f| !f.contains(vertex)) {
        add_clique(&mut merged, *f);
    }
    add_clique(&mut merged, union);

    let (remainder, remainder_labels) = g.induced_subgraph(g.vertices().without(vertex));
    Ok(LeafSplit {
        vertex,
        leaf,
        through_vertex,
        merged,
        remainder,
        remainder_labels,
    })
}

fn add_clique(g: &mut Graph, set: VertexSet) {
    let vs = set.to_vec();
    for (a, &u) in vs.iter().enumerate() {
        for &v in &vs[a + 1..] {
            g.add_edge(u, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_path_three() {
        let s = leaf_split(&Graph::path(3)).unwrap();
        assert_eq!(s.vertex, 2);
        assert_eq!(s.merged, Graph::complete(3));
        assert_eq!(s.remainder, Graph::edgeless(2));
        assert_eq!(s.remainder_labels, vec![1, 3]);
        assert_eq!(s.q(), 1);
        assert_eq!(s.remainder.component_count(), 2);
    }

    #[test]
    fn split_paw() {
        let paw = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let s = leaf_split(&paw).unwrap();
        assert_eq!(s.vertex, 3);
        assert_eq!(s.merged, Graph::complete(4));
        assert_eq!(s.remainder_in_place(), Graph::new(4, &[(1, 2)]).unwrap());
        assert_eq!(s.remainder.component_count(), s.q() + 1);
    }

    #[test]
    fn split_path_four() {
        let s = leaf_split(&Graph::path(4)).unwrap();
        assert_eq!(s.vertex, 3);
        assert_eq!(s.leaf, VertexSet::from_iter([3, 4]));
        let expected = Graph::new(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(s.merged, expected);
        assert_eq!(s.remainder_in_place(), Graph::new(4, &[(1, 2)]).unwrap());
        assert_eq!(s.remainder.component_count(), 2);
    }

    #[test]
    fn split_needs_two_facets() {
        assert_eq!(leaf_split(&Graph::complete(4)), Err(GraphError::NothingToSplit));
        assert_eq!(leaf_split(&Graph::cycle(4)), Err(GraphError::NothingToSplit));
    }
}
