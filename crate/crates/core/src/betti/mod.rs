//! Graded Betti numbers of `S/I`, with regularity, projective dimension and
//! depth read off the table.
//!
//! Two independent routes are provided: Hochster's formula for squarefree
//! monomial ideals and homology of the Koszul complex for homogeneous ideals.

mod hochster;
mod koszul;

pub use hochster::{
    betti_squarefree_hochster, betti_squarefree_hochster_unrestricted, reduced_homology_ranks,
};
pub use koszul::{
    betti_koszul, betti_koszul_from_basis, betti_koszul_graded, standard_monomials, Grading,
};

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("generator {0} is not squarefree")]
    NotSquarefree(String),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("syzygies may reach degree {needed}, above the cap {cap}")]
    DegreeCapExceeded { needed: u32, cap: u32 },
    #[error("Betti table is incomplete: no β_0,0")]
    Incomplete,
    #[error("at most 63 variables are supported, got {0}")]
    TooManyVariables(usize),
}

impl From<PolyError> for BettiError {
    fn from(e: PolyError) -> Self {
        BettiError::Groebner(e.into())
    }
}

/// Graded Betti numbers `β_{i,j}` of `S/I`. Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    p: u32,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(nvars: usize, p: u32) -> Self {
        BettiTable {
            nvars,
            p,
            entries: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    /// Nonzero entries `(i, j, β_{i,j})` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    fn check(&self) -> Result<(), BettiError> {
        if self.get(0, 0) == 1 {
            Ok(())
        } else {
            Err(BettiError::Incomplete)
        }
    }

    /// `max{j - i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> Result<usize, BettiError> {
        self.check()?;
        Ok(self.entries().map(|(i, j, _)| j - i).max().unwrap_or(0))
    }

    /// `max{i : β_{i,j} ≠ 0}`.
    pub fn projective_dimension(&self) -> Result<usize, BettiError> {
        self.check()?;
        Ok(self.entries().map(|(i, _, _)| i).max().unwrap_or(0))
    }

    /// `nvars - pd` by Auslander–Buchsbaum.
    pub fn depth(&self) -> Result<usize, BettiError> {
        Ok(self.nvars - self.projective_dimension()?)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<[u64; 3]> = self
            .entries()
            .map(|(i, j, b)| [i as u64, j as u64, b])
            .collect();
        let mut st = s.serialize_struct("BettiTable", 2)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

pub fn regularity_of(table: &BettiTable) -> Result<usize, BettiError> {
    table.regularity()
}

pub fn projective_dimension(table: &BettiTable) -> Result<usize, BettiError> {
    table.projective_dimension()
}

pub fn depth_of(table: &BettiTable) -> Result<usize, BettiError> {
    table.depth()
}

#[cfg(test)]
mod tests;
