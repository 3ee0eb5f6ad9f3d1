//! Gröbner bases for the lex order: a generic Buchberger engine, normal forms,
//! ideal equality and intersection by elimination, plus the admissible-path
//! basis of binomial edge ideals.

mod paths;

pub use paths::{admissible_paths, groebner_basis_combinatorial, initial_ideal, AdmissiblePath};

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::field::Fp;
use crate::poly::{Ideal, Monomial, MonomialIdeal, PolyError, Polynomial, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Gröbner basis grew past {0} elements")]
    BasisTooLarge(usize),
    #[error("Gröbner basis element of degree {0} exceeds the cap {1}")]
    DegreeTooLarge(u32, u32),
}

/// Resource caps for [`buchberger_with_limits`]. Exceeding one is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 20_000,
            max_degree: 64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    /// `x1 > ... > xn > y1 > ... > yn`.
    Lex,
    /// Lex with an auxiliary variable `t` above all others.
    Elimination,
}

/// A reduced Gröbner basis: monic, sorted by descending leading monomial, no
/// leading monomial divides a term of another element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub field: Fp,
    pub order: TermOrder,
    pub elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ring.nvars(),
            self.leading_monomials().into_iter().cloned().collect(),
        )
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(normal_form(f, self)?.is_zero())
    }

    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.elements.iter().enumerate().all(|(k, g)| {
            g.leading_coefficient() == Some(1)
                && g.terms().iter().all(|(_, m)| {
                    lms.iter()
                        .enumerate()
                        .all(|(l, lm)| l == k || !lm.divides(m))
                })
        })
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring,
            field: self.field,
            generators: self.elements.clone(),
        }
    }

    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.render(&self.ring)).collect()
    }
}

/// Divides by a list of monic polynomials, keeping their tails precomputed.
pub(crate) struct Reducer<'a> {
    lms: Vec<&'a Monomial>,
    tails: Vec<Polynomial>,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(basis: &'a [Polynomial]) -> Self {
        Reducer {
            lms: basis
                .iter()
                .map(|g| g.leading_monomial().expect("nonzero"))
                .collect(),
            tails: basis
                .iter()
                .map(|g| {
                    debug_assert_eq!(g.leading_coefficient(), Some(1));
                    g.clone().split_leading().expect("nonzero").1
                })
                .collect(),
        }
    }

    fn divisor(&self, m: &Monomial) -> Option<usize> {
        self.lms.iter().position(|lm| lm.divides(m))
    }

    /// Full reduction: no term of the result is divisible by a leading monomial.
    pub(crate) fn reduce(&self, f: &Polynomial) -> Polynomial {
        let mut rem = Polynomial::zero(f.field(), f.nvars());
        let mut p = f.clone();
        while let Some(((c, m), rest)) = p.split_leading() {
            match self.divisor(&m) {
                Some(k) => {
                    let q = self.lms[k].quotient_of(&m);
                    p = rest.sub_multiple(c, &q, &self.tails[k]);
                }
                None => {
                    rem.push_smallest(c, m);
                    p = rest;
                }
            }
        }
        rem
    }
}

/// Remainder of `f` on full division by the basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    if f.field() != basis.field {
        return Err(PolyError::CharacteristicMismatch(
            f.field().characteristic(),
            basis.field.characteristic(),
        )
        .into());
    }
    if f.nvars() != basis.ring.nvars() {
        return Err(PolyError::RingMismatch(f.nvars(), basis.ring.nvars()).into());
    }
    Ok(Reducer::new(&basis.elements).reduce(f))
}

/// Turns a Gröbner basis (any generating set containing one) into the reduced one.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    // Ascending order makes every divisor appear before its multiples.
    for g in basis.into_iter().rev() {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(lm))
        {
            minimal.push(g.monic());
        }
    }
    let reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, g)| g.clone())
                .collect();
            let reducer = Reducer::new(&others);
            let (lead, tail) = minimal[k].clone().split_leading().expect("nonzero");
            let mut out = Polynomial::from_monomial(tail.field(), lead.0, lead.1);
            out = out.add(&reducer.reduce(&tail)).expect("same ring");
            out
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    reduced
}

pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with_limits(ideal, Limits::default())
}

/// Reduced Gröbner basis for the pure lex order of the ideal's ring (with the
/// auxiliary variable, if any, greatest).
///
/// Pairs are processed smallest lcm first (normal strategy). Pairs are skipped
/// by the coprime leading monomial criterion and Buchberger's chain criterion.
pub fn buchberger_with_limits(ideal: &Ideal, limits: Limits) -> Result<GroebnerBasis, GroebnerError> {
    let order = if ideal.ring.aux {
        TermOrder::Elimination
    } else {
        TermOrder::Lex
    };
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut live: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: Polynomial,
                   basis: &mut Vec<Polynomial>,
                   pending: &mut BTreeSet<(Monomial, usize, usize)>,
                   live: &mut HashSet<(usize, usize)>|
     -> Result<(), GroebnerError> {
        let h = h.monic();
        let lm = h.leading_monomial().expect("nonzero").clone();
        if lm.degree() > limits.max_degree {
            return Err(GroebnerError::DegreeTooLarge(lm.degree(), limits.max_degree));
        }
        if basis.len() >= limits.max_basis {
            return Err(GroebnerError::BasisTooLarge(limits.max_basis));
        }
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.leading_monomial().expect("nonzero").lcm(&lm);
            pending.insert((l, i, k));
            live.insert((i, k));
        }
        basis.push(h);
        Ok(())
    };

    let mut gens: Vec<Polynomial> = ideal.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    gens.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for f in gens {
        let h = Reducer::new(&basis).reduce(&f);
        if !h.is_zero() {
            add(h, &mut basis, &mut pending, &mut live)?;
        }
    }

    while let Some((lcm, i, j)) = pending.pop_first() {
        live.remove(&(i, j));
        let (li, lj) = (
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        );
        if li.is_coprime(lj) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|l| {
            l != i
                && l != j
                && basis[l].leading_monomial().expect("nonzero").divides(&lcm)
                && !live.contains(&key(i, l))
                && !live.contains(&key(j, l))
        });
        if chain {
            continue;
        }
        let s = basis[i].s_polynomial(&basis[j])?;
        let h = Reducer::new(&basis).reduce(&s);
        if !h.is_zero() {
            add(h, &mut basis, &mut pending, &mut live)?;
        }
    }

    Ok(GroebnerBasis {
        ring: ideal.ring,
        field: ideal.field,
        order,
        elements: reduce_basis(basis),
    })
}

fn same_ring(a: &Ideal, b: &Ideal) -> Result<(), PolyError> {
    if a.field != b.field {
        return Err(PolyError::CharacteristicMismatch(
            a.field.characteristic(),
            b.field.characteristic(),
        ));
    }
    if a.ring != b.ring {
        return Err(PolyError::RingMismatch(a.ring.nvars(), b.ring.nvars()));
    }
    Ok(())
}

/// Each ideal's generators reduce to zero modulo the other's reduced basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    same_ring(a, b)?;
    let (ga, gb) = (buchberger(a)?, buchberger(b)?);
    for (gens, basis) in [(&a.generators, &gb), (&b.generators, &ga)] {
        for f in gens {
            if !basis.contains(f)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `I ∩ J`. Monomial ideals use pairwise lcms; otherwise `t` is eliminated
/// from `t·I + (1 - t)·J`. The result's generators are the reduced basis of
/// the intersection (or its minimal monomial generators).
pub fn intersect_ideals(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    intersect_ideals_with_limits(a, b, Limits::default())
}

pub fn intersect_ideals_with_limits(a: &Ideal, b: &Ideal, limits: Limits) -> Result<Ideal, GroebnerError> {
    same_ring(a, b)?;
    if a.ring.aux {
        return Err(PolyError::RingMismatch(a.ring.nvars(), a.ring.nvars() - 1).into());
    }
    if a.is_monomial() && b.is_monomial() {
        let m = a.as_monomial_ideal()?.intersect(&b.as_monomial_ideal()?);
        return Ok(m.to_ideal(a.ring, a.field));
    }
    let ring = a.ring.with_aux();
    let nv = ring.nvars();
    let t = Monomial::var(nv, 0);
    let lift = |f: &Polynomial| f.map_monomials(nv, |m| m.with_leading_vars(1));
    let mut gens = Vec::new();
    for f in &a.generators {
        gens.push(lift(f).mul_term_unchecked(1, &t));
    }
    for g in &b.generators {
        let g = lift(g);
        let tg = g.mul_term_unchecked(1, &t);
        gens.push(g.sub(&tg)?);
    }
    let gb = buchberger_with_limits(&Ideal::new(ring, a.field, gens)?, limits)?;
    let generators = gb
        .elements
        .iter()
        .filter(|g| g.leading_monomial().expect("nonzero").exp(0) == 0)
        .map(|g| g.map_monomials(nv - 1, |m| m.without_leading_vars(1)))
        .collect();
    Ideal::new(a.ring, a.field, generators).map_err(Into::into)
}
