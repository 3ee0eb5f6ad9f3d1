use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::HarnessError;
use crate::betti::{betti_koszul_from_basis, betti_squarefree_hochster, BettiTable};
use crate::decomposition::verify_decomposition;
use crate::field::Fp;
use crate::graph::{
    classify_c_ell, enumerate_graphs, family_cap, is_caterpillar, leaf_split,
    longest_induced_path, random_relabeling, Graph, GraphJson,
};
use crate::groebner::{buchberger, groebner_basis_combinatorial, initial_ideal};
use crate::poly::{edge_ideal, Monomial, MonomialIdeal, Ring};

/// Statements the harness can sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `depth S/J_G = depth S/in(J_G) = n + 1` for connected block graphs.
    DepthBlock,
    /// `reg S/J_G = reg S/in(J_G) = ℓ` for `C_ℓ`-graphs.
    RegCell,
    /// For trees, `reg S/J_T = ℓ` exactly when `T` is a caterpillar.
    RegTree,
    /// `in(J_G + (x_i, y_i)) = in(J_G) + (x_i, y_i)` for every vertex `i`.
    Lemma21,
    /// The admissible-path basis equals the reduced Buchberger basis.
    GbEquivalence,
    /// `J_G` is the intersection of its minimal primes `P_S(G)`.
    PrimaryDec,
    /// `ℓ ≤ reg S/J_G ≤ n - 1` for connected graphs.
    MmBounds,
    /// `in(J_G) = in(J_{G'}) ∩ ((x_i, y_i) + in(J_{G''}))` for block graphs.
    LeafSplitInitial,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::DepthBlock,
        Theorem::RegCell,
        Theorem::RegTree,
        Theorem::Lemma21,
        Theorem::GbEquivalence,
        Theorem::PrimaryDec,
        Theorem::MmBounds,
        Theorem::LeafSplitInitial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::DepthBlock => "depth-block",
            Theorem::RegCell => "reg-cell",
            Theorem::RegTree => "reg-tree",
            Theorem::Lemma21 => "lemma-21",
            Theorem::GbEquivalence => "gb-equivalence",
            Theorem::PrimaryDec => "primary-dec",
            Theorem::MmBounds => "mm-bounds",
            Theorem::LeafSplitInitial => "leaf-split-initial",
        }
    }

    /// The family swept, or `None` for every labeled graph.
    fn family(self) -> Option<crate::graph::Family> {
        use crate::graph::Family::*;
        match self {
            Theorem::DepthBlock | Theorem::LeafSplitInitial => Some(ConnectedBlock),
            Theorem::RegCell => Some(CEll),
            Theorem::RegTree => Some(Tree),
            Theorem::Lemma21 => None,
            Theorem::GbEquivalence | Theorem::PrimaryDec | Theorem::MmBounds => Some(Connected),
        }
    }

    fn max_n(self) -> usize {
        match self.family() {
            Some(f) => family_cap(f),
            None => 5,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| HarnessError::Unsupported(format!("unknown theorem `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    /// Random relabelings checked per isomorphism class.
    pub labelings: usize,
    pub seed: u64,
    pub field: Fp,
    /// Extra uniformly random labeled graphs on `max_n + 1` vertices.
    pub random: usize,
}

impl VerifyOptions {
    pub fn new(max_n: usize) -> Self {
        VerifyOptions {
            max_n,
            labelings: 1,
            seed: 0,
            field: Fp::default(),
            random: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: GraphJson,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: Theorem,
    pub family: String,
    pub min_n: usize,
    pub max_n: usize,
    pub labelings: usize,
    pub random: usize,
    pub seed: u64,
    pub prime: u32,
    pub graphs_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    pub pass: bool,
    pub runtime_ms: u128,
}

/// Each possible edge present with probability one half.
pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::edgeless(n);
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(0.5) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let mut g = Graph::edgeless(n);
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(a, b);
                }
            }
            g
        })
        .collect()
}

fn koszul_table(g: &Graph, field: Fp) -> Result<BettiTable, HarnessError> {
    let basis = buchberger(&edge_ideal(g, field))?;
    Ok(betti_koszul_from_basis(&basis, 2 * g.n() as u32 + 2)?)
}

fn hochster_table(g: &Graph, field: Fp) -> Result<BettiTable, HarnessError> {
    Ok(betti_squarefree_hochster(&initial_ideal(g), field)?)
}

fn vertex_ideal(ring: &Ring, i: usize) -> MonomialIdeal {
    let nvars = ring.nvars();
    MonomialIdeal::new(
        nvars,
        vec![Monomial::var(nvars, ring.x(i)), Monomial::var(nvars, ring.y(i))],
    )
}

/// `None` when the statement holds for `g`, otherwise a description.
fn check(theorem: Theorem, g: &Graph, field: Fp) -> Result<Option<String>, HarnessError> {
    let n = g.n();
    let fail = |s: String| Ok(Some(s));
    match theorem {
        Theorem::DepthBlock => {
            let expected = n + g.component_count();
            let dj = koszul_table(g, field)?.depth()?;
            let di = hochster_table(g, field)?.depth()?;
            if dj != expected || di != expected {
                return fail(format!("depth S/J = {dj}, depth S/in(J) = {di}, n + c = {expected}"));
            }
        }
        Theorem::RegCell => {
            let Some(chain) = classify_c_ell(g) else {
                return fail("not a C_ell-graph".into());
            };
            let rj = koszul_table(g, field)?.regularity()?;
            let ri = hochster_table(g, field)?.regularity()?;
            if rj != chain.ell || ri != chain.ell {
                return fail(format!("reg S/J = {rj}, reg S/in(J) = {ri}, ell = {}", chain.ell));
            }
        }
        Theorem::RegTree => {
            let ell = longest_induced_path(g).length;
            let caterpillar = is_caterpillar(g)?;
            let reg = koszul_table(g, field)?.regularity()?;
            let ok = if caterpillar { reg == ell } else { reg > ell };
            if !ok {
                return fail(format!("reg S/J = {reg}, ell = {ell}, caterpillar = {caterpillar}"));
            }
        }
        Theorem::Lemma21 => {
            let ini = initial_ideal(g);
            let j = edge_ideal(g, field);
            for i in 1..=n {
                let lhs = buchberger(&j.with_vertex_variables(i))?.initial_ideal();
                let rhs = ini.sum(&vertex_ideal(&j.ring, i));
                if lhs != rhs {
                    return fail(format!("vertex {i}: ideals differ"));
                }
            }
        }
        Theorem::GbEquivalence => {
            let reduced = buchberger(&edge_ideal(g, field))?;
            let gamma = groebner_basis_combinatorial(g, field);
            if reduced.elements != gamma.elements {
                return fail(format!(
                    "Buchberger has {} elements, admissible paths give {}",
                    reduced.elements.len(),
                    gamma.elements.len()
                ));
            }
        }
        Theorem::PrimaryDec => {
            if !verify_decomposition(g, field)? {
                return fail("intersection of minimal primes differs from J_G".into());
            }
        }
        Theorem::MmBounds => {
            let ell = longest_induced_path(g).length;
            let reg = koszul_table(g, field)?.regularity()?;
            if reg < ell || reg + 1 > n {
                return fail(format!("reg S/J = {reg} outside [{ell}, {}]", n - 1));
            }
        }
        Theorem::LeafSplitInitial => {
            let split = leaf_split(g)?;
            let ring = Ring::new(n);
            let lhs = initial_ideal(g);
            let remainder = initial_ideal(&split.remainder_in_place());
            let rhs = initial_ideal(&split.merged)
                .intersect(&remainder.sum(&vertex_ideal(&ring, split.vertex)));
            if lhs != rhs {
                return fail(format!("split at vertex {}: ideals differ", split.vertex));
            }
        }
    }
    Ok(None)
}

fn has_two_facets(g: &Graph) -> bool {
    crate::graph::maximal_cliques(g).facets.len() >= 2
}

pub fn verify(theorem: Theorem, options: VerifyOptions) -> Result<Verdict, HarnessError> {
    let start = Instant::now();
    let cap = theorem.max_n();
    if options.max_n == 0 || options.max_n > cap || (options.random > 0 && options.max_n + 1 > 8) {
        return Err(HarnessError::Unsupported(format!(
            "{theorem} is supported for 1 <= n <= {cap} (random graphs up to 8 vertices)"
        )));
    }
    let min_n = match theorem {
        Theorem::LeafSplitInitial => 2,
        _ => 1,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut graphs: Vec<Graph> = Vec::new();
    for n in min_n..=options.max_n {
        match theorem.family() {
            Some(family) => {
                for class in enumerate_graphs(family, n)? {
                    if theorem == Theorem::LeafSplitInitial && !has_two_facets(&class) {
                        continue;
                    }
                    if options.labelings == 0 {
                        graphs.push(class);
                    } else {
                        for _ in 0..options.labelings {
                            graphs.push(random_relabeling(&class, &mut rng));
                        }
                    }
                }
            }
            None => graphs.extend(all_labeled_graphs(n)),
        }
    }
    for _ in 0..options.random {
        graphs.push(random_graph(options.max_n + 1, &mut rng));
    }

    let outcomes: Vec<Option<Counterexample>> = graphs
        .par_iter()
        .map(|g| {
            Ok(check(theorem, g, options.field)?.map(|detail| Counterexample {
                graph: GraphJson::from(g),
                detail,
            }))
        })
        .collect::<Result<_, HarnessError>>()?;
    let mut counterexamples: Vec<Counterexample> = outcomes.into_iter().flatten().collect();
    counterexamples.sort_by(|a, b| (a.graph.n, &a.graph.edges).cmp(&(b.graph.n, &b.graph.edges)));

    Ok(Verdict {
        theorem,
        family: theorem
            .family()
            .map_or_else(|| "all".to_string(), |f| f.to_string()),
        min_n,
        max_n: options.max_n,
        labelings: options.labelings,
        random: options.random,
        seed: options.seed,
        prime: options.field.characteristic(),
        graphs_checked: graphs.len(),
        pass: counterexamples.is_empty(),
        counterexamples,
        runtime_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!("conjecture".parse::<Theorem>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for t in Theorem::ALL {
            let v = verify(t, VerifyOptions::new(4)).unwrap();
            assert!(v.pass, "{t}: {:?}", v.counterexamples);
            assert!(v.graphs_checked > 0);
        }
    }

    #[test]
    fn sweeps_are_deterministic() {
        let mut opts = VerifyOptions::new(4);
        opts.labelings = 2;
        opts.random = 5;
        opts.seed = 9;
        let a = verify(Theorem::GbEquivalence, opts).unwrap();
        let b = verify(Theorem::GbEquivalence, opts).unwrap();
        assert_eq!((a.graphs_checked, a.counterexamples), (b.graphs_checked, b.counterexamples));
    }

    #[test]
    fn unsupported_sizes() {
        assert!(verify(Theorem::MmBounds, VerifyOptions::new(7)).is_err());
        assert!(verify(Theorem::Lemma21, VerifyOptions::new(6)).is_err());
        assert_eq!(
            verify(Theorem::MmBounds, VerifyOptions::new(7)).unwrap_err().exit_code(),
            2
        );
    }

    #[test]
    fn checks_catch_false_claims() {
        // A 4-cycle is not a C_ell-graph.
        let detail = check(Theorem::RegCell, &Graph::cycle(4), Fp::default()).unwrap();
        assert!(detail.is_some());
        // The triangle is a single clique and cannot be split.
        assert!(check(Theorem::LeafSplitInitial, &Graph::complete(3), Fp::default()).is_err());
    }
}
