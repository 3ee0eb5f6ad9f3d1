use super::{Monomial, PolyError, Polynomial, Ring, Var};
use crate::field::Fp;
use crate::graph::Graph;

/// An ideal given by generators, all in the same ring and characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub ring: Ring,
    pub field: Fp,
    pub generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, field: Fp, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        for g in &generators {
            if g.field() != field {
                return Err(PolyError::CharacteristicMismatch(
                    field.characteristic(),
                    g.field().characteristic(),
                ));
            }
            if g.nvars() != ring.nvars() {
                return Err(PolyError::RingMismatch(ring.nvars(), g.nvars()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, field, generators })
    }

    pub fn zero(ring: Ring, field: Fp) -> Self {
        Ideal {
            ring,
            field,
            generators: vec![],
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    /// The monomial ideal generated by the (single-term) generators.
    pub fn as_monomial_ideal(&self) -> Result<MonomialIdeal, PolyError> {
        if !self.is_monomial() {
            return Err(PolyError::NotMonomial);
        }
        Ok(MonomialIdeal::new(
            self.ring.nvars(),
            self.generators
                .iter()
                .map(|g| g.leading_monomial().expect("nonzero generator").clone())
                .collect(),
        ))
    }

    /// Adds the generators of `other`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring, self.field, gens)
    }

    /// Adds `x_i, y_i` to the generators.
    pub fn with_vertex_variables(&self, i: usize) -> Ideal {
        let mut gens = self.generators.clone();
        for v in [Var::X(i), Var::Y(i)] {
            gens.push(Polynomial::from_monomial(self.field, 1, self.ring.var_monomial(v)));
        }
        Ideal {
            generators: gens,
            ..self.clone()
        }
    }
}

/// `f_ij = x_i y_j - x_j y_i` for `i < j`.
pub fn binomial_generator(ring: &Ring, i: usize, j: usize, field: Fp) -> Result<Polynomial, PolyError> {
    if i == 0 || i >= j || j > ring.n {
        return Err(PolyError::InvalidGenerator { i, j });
    }
    let nv = ring.nvars();
    let lead = Monomial::var(nv, ring.x(i)).mul(&Monomial::var(nv, ring.y(j)));
    let trail = Monomial::var(nv, ring.x(j)).mul(&Monomial::var(nv, ring.y(i)));
    Ok(Polynomial::from_terms(
        field,
        nv,
        vec![(1, lead), (field.neg(1), trail)],
    ))
}

/// The binomial edge ideal: one `f_ij` per edge.
pub fn edge_ideal(g: &Graph, field: Fp) -> Ideal {
    let ring = Ring::new(g.n());
    let gens = g
        .edges()
        .into_iter()
        .map(|(i, j)| binomial_generator(&ring, i, j, field).expect("edges are normalized"))
        .collect();
    Ideal {
        ring,
        field,
        generators: gens,
    }
}

/// A monomial ideal stored by its minimal generators, sorted in descending
/// order. Two monomial ideals are equal iff these lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        assert!(gens.iter().all(|m| m.nvars() == nvars));
        let mut gens = gens;
        // Sorting by degree first guarantees every divisor is seen before its multiples.
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for m in gens {
            if !minimal.iter().any(|d| d.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn with_variables(&self, vars: &[usize]) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(vars.iter().map(|&v| Monomial::var(self.nvars, v)));
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Exponent-wise maximum over all generators.
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars), |acc, m| acc.lcm(m))
    }

    pub fn to_ideal(&self, ring: Ring, field: Fp) -> Ideal {
        assert_eq!(ring.nvars(), self.nvars);
        Ideal {
            ring,
            field,
            generators: self
                .gens
                .iter()
                .map(|m| Polynomial::from_monomial(field, 1, m.clone()))
                .collect(),
        }
    }

    pub fn render(&self, ring: &Ring) -> Vec<String> {
        self.gens.iter().map(|m| m.render(ring)).collect()
    }
}
