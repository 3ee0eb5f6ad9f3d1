//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so graphs are limited
//! to [`MAX_VERTICES`] vertices. Every algorithm in this crate is exhaustive in
//! some direction, so that limit is far beyond what is ever practical.

mod classes;
mod cliques;
mod enumerate;
mod io;
mod split;

pub use classes::{
    classify, classify_c_ell, is_block_graph, is_caterpillar, is_caterpillar_by_spine,
    longest_induced_path, CEllChain, Classification, InducedPath,
};
pub use cliques::{is_chordal, leaf_order, maximal_cliques, CliqueComplex, LeafOrder};
pub use enumerate::{
    canonical_form, enumerate_graphs, family_cap, random_relabeling, relabel, Family,
};
pub use io::GraphJson;
pub use split::{leaf_split, LeafSplit};

use std::fmt;

use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("edge endpoint {vertex} is outside 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("graph is not chordal, so its clique complex has no leaf order")]
    NotChordal,
    #[error("facet {0} is not a leaf of the clique complex")]
    NotALeaf(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("leaf split needs a connected block graph with at least two maximal cliques")]
    NothingToSplit,
    #[error("family {family} is only enumerated up to n = {cap}, got n = {n}")]
    UnsupportedSize { family: Family, n: usize, cap: usize },
    #[error("malformed graph input: {0}")]
    Parse(String),
}

/// A set of vertices of a graph, stored as a bitmask (vertex `v` is bit `v - 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple graph on `1..=n`: no loops, no multiple edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing and deduplicating edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut g = Graph::edgeless(n);
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            g.adj[a - 1].insert(b);
            g.adj[b - 1].insert(a);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for v in 1..=n {
            g.adj[v - 1] = VertexSet::full(n).without(v);
        }
        g
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    /// The cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges).expect("valid cycle")
    }

    /// The star with centre `n` and leaves `1..n`.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, n)).collect();
        Graph::new(n, &edges).expect("valid star")
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a - 1].contains(b)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..=self.n {
            for j in self.adj[i - 1].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a >= 1 && b >= 1 && a <= self.n && b <= self.n);
        self.adj[a - 1].insert(b);
        self.adj[b - 1].insert(a);
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.adj[v - 1]))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v - 1]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_of(v, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(1, self.vertices()) == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// The subgraph induced on `within`, relabeled `1..=|within|` in increasing
    /// order. The second component maps new labels (index `k` is label `k+1`)
    /// back to the original vertices.
    pub fn induced_subgraph(&self, within: VertexSet) -> (Graph, Vec<usize>) {
        let labels = within.to_vec();
        let mut g = Graph::edgeless(labels.len());
        for (a, &u) in labels.iter().enumerate() {
            for (b, &v) in labels.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a + 1, b + 1);
                }
            }
        }
        (g, labels)
    }

    /// Same edge set restricted to `within`, but keeping all `n` vertex labels;
    /// vertices outside `within` become isolated.
    pub fn restrict_in_place(&self, within: VertexSet) -> Graph {
        let adj = (1..=self.n)
            .map(|v| {
                if within.contains(v) {
                    self.adj[v - 1].intersection(within)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
