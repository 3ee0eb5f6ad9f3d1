use rayon::prelude::*;

use super::{GroebnerBasis, TermOrder};
use crate::field::Fp;
use crate::graph::{Graph, VertexSet};
use crate::poly::{binomial_generator, Monomial, MonomialIdeal, Ring};

/// An admissible path from `i` to `j` (`i < j`) and its coefficient monomial
/// `u = prod_{v > j} x_v * prod_{v < i} y_v` over the interior vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub i: usize,
    pub j: usize,
    pub interior: Vec<usize>,
    pub u: Monomial,
}

impl AdmissiblePath {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.i];
        v.extend_from_slice(&self.interior);
        v.push(self.j);
        v
    }
}

/// No proper subsequence of the interior, kept in path order, closes a path
/// from `i` to `j`.
fn is_minimal(g: &Graph, i: usize, j: usize, interior: &[usize]) -> bool {
    let k = interior.len();
    (0u64..(1u64 << k) - 1).all(|mask| {
        let mut prev = i;
        for (pos, &v) in interior.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                if !g.has_edge(prev, v) {
                    return true;
                }
                prev = v;
            }
        }
        !g.has_edge(prev, j)
    })
}

pub fn admissible_paths(g: &Graph, i: usize, j: usize) -> Vec<AdmissiblePath> {
    assert!(i < j && j <= g.n(), "admissible paths need i < j <= n");
    let ring = Ring::new(g.n());
    let allowed: VertexSet = (1..=g.n()).filter(|&v| v < i || v > j).collect();
    let mut out = Vec::new();
    let mut path = vec![i];

    fn dfs(
        g: &Graph,
        j: usize,
        allowed: VertexSet,
        path: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("nonempty");
        if g.has_edge(last, j) && is_minimal(g, path[0], j, &path[1..]) {
            found.push(path[1..].to_vec());
        }
        let on_path: VertexSet = path.iter().copied().collect();
        for v in g.neighbors(last).intersection(allowed).difference(on_path).iter() {
            // A chord from v back to an earlier vertex would let every
            // completion skip the vertices in between.
            if g.neighbors(v).intersection(on_path).without(last).is_empty() {
                path.push(v);
                dfs(g, j, allowed, path, found);
                path.pop();
            }
        }
    }

    let mut interiors = Vec::new();
    dfs(g, j, allowed, &mut path, &mut interiors);
    interiors.sort();
    for interior in interiors {
        let mut u = Monomial::one(ring.nvars());
        for &v in &interior {
            let var = if v > j { ring.x(v) } else { ring.y(v) };
            u = u.mul(&Monomial::var(ring.nvars(), var));
        }
        out.push(AdmissiblePath { i, j, interior, u });
    }
    out
}

/// The basis `{u_π f_ij : π admissible from i to j}`, sorted by descending
/// leading monomial. No reduction is applied.
pub fn groebner_basis_combinatorial(g: &Graph, field: Fp) -> GroebnerBasis {
    let ring = Ring::new(g.n());
    let pairs: Vec<(usize, usize)> = (1..=g.n())
        .flat_map(|i| (i + 1..=g.n()).map(move |j| (i, j)))
        .collect();
    let mut elements: Vec<_> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let f = binomial_generator(&ring, i, j, field).expect("i < j");
            admissible_paths(g, i, j)
                .into_iter()
                .map(move |p| f.mul_term_unchecked(1, &p.u))
        })
        .collect();
    elements.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    elements.dedup();
    GroebnerBasis {
        ring,
        field,
        order: TermOrder::Lex,
        elements,
    }
}

/// Minimal generators of `in_<(J_G)`: the leading monomials `u_π x_i y_j`.
pub fn initial_ideal(g: &Graph) -> MonomialIdeal {
    groebner_basis_combinatorial(g, Fp::default()).initial_ideal()
}
