//! Minimal primes of binomial edge ideals via cut-point sets.
//!
//! For `S ⊆ [n]` let `G_1..G_c` be the components of `G` restricted to
//! `[n] \ S`. The prime `P_S(G)` is generated by `x_i, y_i` for `i ∈ S` and
//! by `J` of the complete graph on each component. `P_S(G)` is a minimal
//! prime exactly when every `i ∈ S` joins at least two components of
//! `G \ S` when put back.

use serde::Serialize;

use crate::field::Fp;
use crate::graph::{Graph, VertexSet};
use crate::groebner::{buchberger, intersect_ideals, ideal_equal, GroebnerError};
use crate::poly::{binomial_generator, edge_ideal, Ideal, Polynomial, Ring, Var};

/// A cut-point set `S` together with `c(S)`, the number of components of
/// `G` restricted to `[n] \ S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSet {
    pub set: Vec<usize>,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComponent {
    pub cut: CutSet,
    /// Vertex sets of the components of `G \ S`, each completed to a clique.
    pub completed: Vec<Vec<usize>>,
    pub ideal: Ideal,
}

/// `c(S)`: components of `G` after deleting `S`.
pub fn component_count_without(g: &Graph, s: VertexSet) -> usize {
    g.components_within(g.vertices().difference(s)).len()
}

/// `S = ∅`, or `c(S \ {i}) < c(S)` for every `i ∈ S`.
pub fn is_cut_point_set(g: &Graph, s: VertexSet) -> bool {
    let c = component_count_without(g, s);
    s.iter()
        .all(|i| component_count_without(g, s.without(i)) < c)
}

/// All cut-point sets, ordered by size and then lexicographically.
///
/// A vertex with fewer than two neighbours can never rejoin two components,
/// so such vertices are left out of the subset search.
pub fn cut_point_sets(g: &Graph) -> Vec<CutSet> {
    let candidates: Vec<usize> = (1..=g.n()).filter(|&v| g.degree(v) >= 2).collect();
    let mut out: Vec<CutSet> = (0u64..1 << candidates.len())
        .map(|mask| {
            candidates
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect::<VertexSet>()
        })
        .filter(|&s| is_cut_point_set(g, s))
        .map(|s| CutSet {
            set: s.to_vec(),
            components: component_count_without(g, s),
        })
        .collect();
    out.sort_by(|a, b| a.set.len().cmp(&b.set.len()).then(a.set.cmp(&b.set)));
    out
}

/// `P_S(G)` as an ideal of the ring of `G`.
pub fn prime_component(g: &Graph, cut: &CutSet, field: Fp) -> PrimeComponent {
    let ring = Ring::new(g.n());
    let s: VertexSet = cut.set.iter().copied().collect();
    let mut gens = Vec::new();
    for &i in &cut.set {
        for v in [Var::X(i), Var::Y(i)] {
            gens.push(Polynomial::from_monomial(field, 1, ring.var_monomial(v)));
        }
    }
    let components = g.components_within(g.vertices().difference(s));
    for comp in &components {
        let vs = comp.to_vec();
        for (a, &k) in vs.iter().enumerate() {
            for &l in &vs[a + 1..] {
                gens.push(binomial_generator(&ring, k, l, field).expect("k < l"));
            }
        }
    }
    PrimeComponent {
        cut: cut.clone(),
        completed: components.iter().map(|c| c.to_vec()).collect(),
        ideal: Ideal {
            ring,
            field,
            generators: gens,
        },
    }
}

/// True if `big` contains every generator of `small`.
fn contains_ideal(big: &Ideal, small: &Ideal) -> Result<bool, GroebnerError> {
    let gb = buchberger(big)?;
    for f in &small.generators {
        if !gb.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P_S(G)` over all cut-point sets, dropping any prime that contains another.
pub fn minimal_primes(g: &Graph, field: Fp) -> Result<Vec<PrimeComponent>, GroebnerError> {
    let primes: Vec<PrimeComponent> = cut_point_sets(g)
        .iter()
        .map(|c| prime_component(g, c, field))
        .collect();
    let mut keep = Vec::with_capacity(primes.len());
    for (a, p) in primes.iter().enumerate() {
        let mut redundant = false;
        for (b, q) in primes.iter().enumerate() {
            if a != b && contains_ideal(&p.ideal, &q.ideal)? {
                // Equal primes keep the first copy.
                if b < a || !contains_ideal(&q.ideal, &p.ideal)? {
                    redundant = true;
                    break;
                }
            }
        }
        if !redundant {
            keep.push(p.clone());
        }
    }
    Ok(keep)
}

/// Intersects all minimal primes by elimination and compares with `J_G`.
pub fn verify_decomposition(g: &Graph, field: Fp) -> Result<bool, GroebnerError> {
    let primes = minimal_primes(g, field)?;
    let mut acc = primes[0].ideal.clone();
    for p in &primes[1..] {
        acc = intersect_ideals(&acc, &p.ideal)?;
    }
    ideal_equal(&acc, &edge_ideal(g, field))
}
