use serde::Serialize;

use super::cliques::{is_chordal, maximal_cliques};
use super::{Graph, GraphError, VertexSet};

/// A longest induced path: `length` edges through `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedPath {
    pub length: usize,
    pub vertices: Vec<usize>,
}

/// Witness that a graph is a C_ℓ-graph: a chain of maximal cliques glued at
/// single vertices, plus pendant edges ("whiskers") attached at the gluing
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CEllChain {
    pub ell: usize,
    pub chain: Vec<Vec<usize>>,
    /// Pairs `(j, k)`: `j` is a gluing vertex, `k` a vertex of degree one.
    pub whiskers: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub connected_components: usize,
    pub is_chordal: bool,
    pub is_tree: bool,
    pub is_block: bool,
    pub is_caterpillar: bool,
    pub c_ell: Option<CEllChain>,
    pub longest_induced_path: InducedPath,
}

/// Chordal, and any two maximal cliques share at most one vertex.
pub fn is_block_graph(g: &Graph) -> bool {
    if !is_chordal(g) {
        return false;
    }
    let facets = maximal_cliques(g).facets;
    facets.iter().enumerate().all(|(a, fa)| {
        facets[a + 1..]
            .iter()
            .all(|fb| fa.intersection(*fb).len() <= 1)
    })
}

/// Exhaustive search for a longest induced path, with the trivial `n - 1`
/// bound used to stop early.
pub fn longest_induced_path(g: &Graph) -> InducedPath {
    fn extend(g: &Graph, path: &mut Vec<usize>, blocked: VertexSet, best: &mut Vec<usize>, limit: usize) {
        if path.len() > best.len() {
            *best = path.clone();
        }
        if best.len() == limit {
            return;
        }
        let last = *path.last().expect("path is never empty");
        for v in g.neighbors(last).difference(blocked).iter() {
            // v may touch only `last` among the path vertices
            let new_blocked = blocked.union(g.neighbors(last)).with(v);
            path.push(v);
            extend(g, path, new_blocked, best, limit);
            path.pop();
            if best.len() == limit {
                return;
            }
        }
    }
    let mut best = vec![1];
    let limit = g.n();
    for start in 1..=g.n() {
        let mut path = vec![start];
        extend(g, &mut path, VertexSet::singleton(start), &mut best, limit);
        if best.len() == limit {
            break;
        }
    }
    InducedPath {
        length: best.len() - 1,
        vertices: best,
    }
}

/// Caterpillar test for trees: deleting every leaf leaves a path (or nothing).
pub fn is_caterpillar(t: &Graph) -> Result<bool, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    let spine: VertexSet = (1..=t.n()).filter(|&v| t.degree(v) > 1).collect();
    if spine.is_empty() {
        return Ok(true);
    }
    // The spine of a tree is a subtree, so it is a path iff no spine vertex has
    // three spine neighbours.
    Ok(spine
        .iter()
        .all(|v| t.neighbors(v).intersection(spine).len() <= 2))
}

/// Caterpillar test straight from the definition: some path `P` in the tree
/// dominates every vertex. Exhaustive over all paths.
pub fn is_caterpillar_by_spine(t: &Graph) -> Result<bool, GraphError> {
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    fn walk(t: &Graph, last: usize, on_path: VertexSet, dominated: VertexSet) -> bool {
        if dominated == t.vertices() {
            return true;
        }
        t.neighbors(last).difference(on_path).iter().any(|v| {
            walk(t, v, on_path.with(v), dominated.union(t.neighbors(v)).with(v))
        })
    }
    Ok((1..=t.n()).any(|s| {
        walk(t, s, VertexSet::singleton(s), t.neighbors(s).with(s))
    }))
}

/// Searches for a C_ℓ-graph structure. Among all valid chains the
/// lexicographically smallest facet sequence is returned.
pub fn classify_c_ell(g: &Graph) -> Option<CEllChain> {
    if !g.is_connected() || !is_block_graph(g) {
        return None;
    }
    let facets = maximal_cliques(g).facets;
    if facets.iter().any(|f| f.len() < 2) {
        return None;
    }
    let lists: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();

    let mut best: Option<Vec<usize>> = None;
    let mut chain = Vec::new();
    let check = |chain: &[usize], best: &mut Option<Vec<usize>>| {
        if whiskers_for(g, &facets, chain).is_some() {
            let key: Vec<&Vec<usize>> = chain.iter().map(|&c| &lists[c]).collect();
            let better = match best {
                None => true,
                Some(b) => key < b.iter().map(|&c| &lists[c]).collect::<Vec<_>>(),
            };
            if better {
                *best = Some(chain.to_vec());
            }
        }
    };

    fn grow(
        facets: &[VertexSet],
        chain: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        visit(chain);
        let last = facets[*chain.last().expect("nonempty chain")];
        for next in 0..facets.len() {
            if chain.contains(&next) || facets[next].intersection(last).len() != 1 {
                continue;
            }
            let earlier = &chain[..chain.len() - 1];
            if earlier
                .iter()
                .any(|&c| !facets[c].intersection(facets[next]).is_empty())
            {
                continue;
            }
            chain.push(next);
            grow(facets, chain, visit);
            chain.pop();
        }
    }

    for start in 0..facets.len() {
        chain.push(start);
        grow(&facets, &mut chain, &mut |c| check(c, &mut best));
        chain.pop();
    }

    let chain = best?;
    let whiskers = whiskers_for(g, &facets, &chain).expect("validated chain");
    Some(CEllChain {
        ell: chain.len(),
        chain: chain.iter().map(|&c| lists[c].clone()).collect(),
        whiskers,
    })
}

/// Given a candidate chain, checks that every other facet is a whisker and
/// returns the whiskers.
fn whiskers_for(g: &Graph, facets: &[VertexSet], chain: &[usize]) -> Option<Vec<(usize, usize)>> {
    let glue: VertexSet = chain
        .windows(2)
        .map(|w| facets[w[0]].intersection(facets[w[1]]))
        .fold(VertexSet::EMPTY, VertexSet::union);
    let mut whiskers = Vec::new();
    for (idx, f) in facets.iter().enumerate() {
        if chain.contains(&idx) {
            continue;
        }
        if f.len() != 2 {
            return None;
        }
        let v = f.to_vec();
        let (a, b) = (v[0], v[1]);
        if glue.contains(a) && g.degree(b) == 1 {
            whiskers.push((a, b));
        } else if glue.contains(b) && g.degree(a) == 1 {
            whiskers.push((b, a));
        } else {
            return None;
        }
    }
    whiskers.sort_unstable();
    Some(whiskers)
}

pub fn classify(g: &Graph) -> Classification {
    let is_tree = g.is_tree();
    Classification {
        connected_components: g.component_count(),
        is_chordal: is_chordal(g),
        is_tree,
        is_block: is_block_graph(g),
        is_caterpillar: is_tree && is_caterpillar(g).unwrap_or(false),
        c_ell: classify_c_ell(g),
        longest_induced_path: longest_induced_path(g),
    }
}
