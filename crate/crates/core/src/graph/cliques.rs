use std::collections::HashSet;

use super::{Graph, GraphError, VertexSet};

/// The clique complex of a graph, represented by its facets (the maximal
/// cliques), sorted by their increasing vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueComplex {
    pub facets: Vec<VertexSet>,
}

/// A leaf order `F_1, ..., F_r` of a clique complex: every `F_i` with `i > 1`
/// is a leaf of the complex generated by `F_1, ..., F_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafOrder {
    pub facets: Vec<VertexSet>,
    /// `branches[i]` is the position (in `facets`) of a branch of `facets[i]`
    /// inside `<F_1..F_i>`; `None` for the first facet.
    pub branches: Vec<Option<usize>>,
}

fn vertex_list_order(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}

/// All inclusion-maximal cliques (Bron–Kerbosch with pivoting).
pub fn maximal_cliques(g: &Graph) -> CliqueComplex {
    fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| g.neighbors(u).intersection(p).len())
            .expect("p is nonempty");
        for v in p.difference(g.neighbors(pivot)).iter() {
            let nv = g.neighbors(v);
            expand(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut facets = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut facets);
    facets.sort_by(vertex_list_order);
    CliqueComplex { facets }
}

/// Lexicographic breadth-first search; returns the visiting order.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    // Each label is the list of visit times (descending) of numbered neighbours.
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = g
            .vertices()
            .difference(visited)
            .iter()
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v).difference(visited).iter() {
            labels[u].push(n - step);
        }
    }
    order
}

/// Checks whether `order` is a perfect elimination ordering.
fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        if !g.is_clique(g.neighbors(v).intersection(later)) {
            return false;
        }
    }
    true
}

/// True iff every cycle of length at least 4 has a chord.
pub fn is_chordal(g: &Graph) -> bool {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination(g, &order)
}

fn is_leaf_among(facets: &[VertexSet], alive: u64, f: usize) -> Option<usize> {
    let others = || (0..facets.len()).filter(move |&h| h != f && alive >> h & 1 == 1);
    let face = facets[f];
    others().find(|&b| {
        let inside = facets[b].intersection(face);
        others().all(|h| facets[h].intersection(face).is_subset(inside))
    })
}

/// Finds a leaf order of `complex`. When `last` is given (an index into
/// `complex.facets`), the order ends with that facet.
///
/// The order is built from the back: at each step the lexicographically
/// greatest removable leaf is tried first, with backtracking.
pub fn leaf_order(complex: &CliqueComplex, last: Option<usize>) -> Result<LeafOrder, GraphError> {
    let facets = &complex.facets;
    let r = facets.len();
    if r > 64 {
        // A chordal graph on at most 64 vertices has at most 64 maximal cliques.
        return Err(GraphError::NotChordal);
    }
    if r == 0 {
        return Ok(LeafOrder { facets: vec![], branches: vec![] });
    }
    let all = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };

    fn search(
        facets: &[VertexSet],
        alive: u64,
        forced: Option<usize>,
        dead: &mut HashSet<u64>,
        reversed: &mut Vec<usize>,
    ) -> bool {
        if alive.count_ones() <= 1 {
            if alive != 0 {
                reversed.push(alive.trailing_zeros() as usize);
            }
            return true;
        }
        if forced.is_none() && dead.contains(&alive) {
            return false;
        }
        let candidates: Vec<usize> = match forced {
            Some(f) => vec![f],
            None => (0..facets.len()).rev().filter(|&f| alive >> f & 1 == 1).collect(),
        };
        for f in candidates {
            if is_leaf_among(facets, alive, f).is_some() {
                reversed.push(f);
                if search(facets, alive & !(1u64 << f), None, dead, reversed) {
                    return true;
                }
                reversed.pop();
            }
        }
        if forced.is_none() {
            dead.insert(alive);
        }
        false
    }

    if let Some(f) = last {
        if r > 1 && is_leaf_among(facets, all, f).is_none() {
            return Err(GraphError::NotALeaf(f));
        }
    }
    let mut reversed = Vec::with_capacity(r);
    let mut dead = HashSet::new();
    if !search(facets, all, last, &mut dead, &mut reversed) {
        return Err(GraphError::NotChordal);
    }
    reversed.reverse();
    let order = reversed;
    let mut branches = vec![None];
    for i in 1..r {
        let alive = order[..=i].iter().fold(0u64, |m, &f| m | 1u64 << f);
        let b = is_leaf_among(facets, alive, order[i]).expect("order was built from leaves");
        branches.push(order.iter().position(|&f| f == b));
    }
    Ok(LeafOrder {
        facets: order.iter().map(|&f| facets[f]).collect(),
        branches,
    })
}
