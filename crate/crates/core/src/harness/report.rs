use serde::Serialize;

use super::HarnessError;
use crate::betti::{betti_koszul_from_basis, betti_squarefree_hochster, BettiTable};
use crate::decomposition::minimal_primes;
use crate::field::Fp;
use crate::graph::{classify, Classification, Graph, GraphJson};
use crate::groebner::{buchberger, groebner_basis_combinatorial};
use crate::poly::edge_ideal;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub field: Fp,
    pub skip_koszul: bool,
}

/// A value, or the string `"skipped"` when its stage was not run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Stage<T> {
    Computed(T),
    Skipped(&'static str),
}

impl<T> Stage<T> {
    pub fn skipped() -> Self {
        Stage::Skipped("skipped")
    }

    pub fn computed(&self) -> Option<&T> {
        match self {
            Stage::Computed(v) => Some(v),
            Stage::Skipped(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub betti: BettiTable,
    pub regularity: usize,
    pub projective_dimension: usize,
    pub depth: usize,
}

impl Invariants {
    pub fn from_table(betti: BettiTable) -> Result<Self, HarnessError> {
        Ok(Invariants {
            regularity: betti.regularity()?,
            projective_dimension: betti.projective_dimension()?,
            depth: betti.depth()?,
            betti,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorList {
    pub count: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeSummary {
    pub cut_set: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

/// `ℓ ≤ reg(S/J_G) ≤ n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub lower: usize,
    pub upper: usize,
    pub regularity: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub graph: GraphJson,
    pub prime: u32,
    pub classification: Classification,
    pub groebner_basis: GeneratorList,
    pub initial_ideal: GeneratorList,
    pub minimal_primes: Vec<PrimeSummary>,
    /// Invariants of `S/in(J_G)` via Hochster's formula.
    pub initial: Invariants,
    /// Invariants of `S/J_G` via the Koszul complex.
    pub binomial: Stage<Invariants>,
    pub bounds: Stage<BoundCheck>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

pub fn analyze(g: &Graph, options: AnalyzeOptions) -> Result<Report, HarnessError> {
    let field = options.field;
    let n = g.n();
    let classification = classify(g);
    let gamma = groebner_basis_combinatorial(g, field);
    let initial_ideal = gamma.initial_ideal();
    let ring = gamma.ring;
    let generators = |v: Vec<String>| GeneratorList {
        count: v.len(),
        elements: v,
    };
    let primes = minimal_primes(g, field)?
        .into_iter()
        .map(|p| PrimeSummary {
            cut_set: p.cut.set,
            components: p.completed,
        })
        .collect();
    let initial = Invariants::from_table(betti_squarefree_hochster(&initial_ideal, field)?)?;
    let (binomial, bounds) = if options.skip_koszul {
        (Stage::skipped(), Stage::skipped())
    } else {
        let basis = buchberger(&edge_ideal(g, field))?;
        let inv = Invariants::from_table(betti_koszul_from_basis(&basis, 2 * n as u32 + 2)?)?;
        let lower = classification.longest_induced_path.length;
        let upper = n - 1;
        let bounds = BoundCheck {
            lower,
            upper,
            regularity: inv.regularity,
            holds: lower <= inv.regularity && inv.regularity <= upper,
        };
        (Stage::Computed(inv), Stage::Computed(bounds))
    };
    Ok(Report {
        graph: GraphJson::from(g),
        prime: field.characteristic(),
        classification,
        groebner_basis: generators(gamma.render()),
        initial_ideal: generators(initial_ideal.render(&ring)),
        minimal_primes: primes,
        initial,
        binomial,
        bounds,
    })
}
