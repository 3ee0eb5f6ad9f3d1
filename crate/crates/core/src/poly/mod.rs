//! Sparse polynomials over GF(p) in the variables `x1..xn, y1..yn`, ordered
//! lexicographically with `x1 > ... > xn > y1 > ... > yn`.
//!
//! Rings used for elimination carry one extra variable `t` that is greater
//! than every other variable.

mod ideal;
mod monomial;
mod polynomial;

pub use ideal::{binomial_generator, edge_ideal, Ideal, MonomialIdeal};
pub use monomial::Monomial;
pub use polynomial::Polynomial;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u32, u32),
    #[error("ring mismatch: {0} vs {1} variables")]
    RingMismatch(usize, usize),
    #[error("binomial generator needs i < j <= n, got i = {i}, j = {j}")]
    InvalidGenerator { i: usize, j: usize },
    #[error("expected a monomial ideal")]
    NotMonomial,
}

/// One of the ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// Auxiliary elimination variable, greatest of all.
    T,
    X(usize),
    Y(usize),
}

/// The polynomial ring `K[x1..xn, y1..yn]`, optionally with an extra leading
/// elimination variable `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Ring {
    pub n: usize,
    pub aux: bool,
}

impl Ring {
    pub fn new(n: usize) -> Self {
        assert!(2 * n < 64, "at most 31 vertices");
        Ring { n, aux: false }
    }

    pub fn with_aux(self) -> Self {
        Ring { aux: true, ..self }
    }

    pub fn without_aux(self) -> Self {
        Ring { aux: false, ..self }
    }

    pub fn nvars(&self) -> usize {
        2 * self.n + self.aux as usize
    }

    pub fn index(&self, var: Var) -> usize {
        let off = self.aux as usize;
        match var {
            Var::T => {
                assert!(self.aux, "ring has no auxiliary variable");
                0
            }
            Var::X(i) => {
                assert!(i >= 1 && i <= self.n);
                off + i - 1
            }
            Var::Y(i) => {
                assert!(i >= 1 && i <= self.n);
                off + self.n + i - 1
            }
        }
    }

    pub fn var_at(&self, idx: usize) -> Var {
        let off = self.aux as usize;
        if self.aux && idx == 0 {
            Var::T
        } else if idx - off < self.n {
            Var::X(idx - off + 1)
        } else {
            Var::Y(idx - off - self.n + 1)
        }
    }

    pub fn x(&self, i: usize) -> usize {
        self.index(Var::X(i))
    }

    pub fn y(&self, i: usize) -> usize {
        self.index(Var::Y(i))
    }

    pub fn var_name(&self, idx: usize) -> String {
        self.var_at(idx).to_string()
    }

    pub fn var_monomial(&self, var: Var) -> Monomial {
        Monomial::var(self.nvars(), self.index(var))
    }

    /// The vertex a variable belongs to (`None` for `t`).
    pub fn vertex_of(&self, idx: usize) -> Option<usize> {
        match self.var_at(idx) {
            Var::T => None,
            Var::X(i) | Var::Y(i) => Some(i),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => write!(f, "t"),
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// Lex comparison of two monomials of the same ring.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::RingMismatch(a.nvars(), b.nvars()));
    }
    Ok(a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(ring: &Ring, vars: &[Var]) -> Monomial {
        vars.iter()
            .fold(Monomial::one(ring.nvars()), |m, &v| m.mul(&ring.var_monomial(v)))
    }

    #[test]
    fn lex_examples() {
        let r = Ring::new(5);
        let a = mono(&r, &[Var::X(1), Var::Y(2)]);
        let b = mono(&r, &[Var::X(2), Var::Y(1)]);
        assert_eq!(lex_compare(&a, &b), Ok(Ordering::Greater));
        let c = mono(&r, &[Var::X(2), Var::Y(3)]);
        assert_eq!(lex_compare(&c, &c.clone()), Ok(Ordering::Equal));
        let y1 = mono(&r, &[Var::Y(1)]);
        let x5 = mono(&r, &[Var::X(5)]);
        assert_eq!(lex_compare(&y1, &x5), Ok(Ordering::Less));
        assert!(lex_compare(&y1, &Monomial::one(4)).is_err());
    }

    #[test]
    fn aux_variable_is_greatest() {
        let r = Ring::new(2).with_aux();
        assert_eq!(r.nvars(), 5);
        assert_eq!(r.index(Var::T), 0);
        assert_eq!(r.x(1), 1);
        assert_eq!(r.y(2), 4);
        assert_eq!(r.var_name(3), "y1");
        let t = mono(&r, &[Var::T]);
        let big = mono(&r, &[Var::X(1), Var::X(1), Var::X(2)]);
        assert!(t > big);
    }

    #[test]
    fn monomial_basics() {
        let r = Ring::new(3);
        let a = mono(&r, &[Var::X(1), Var::X(1), Var::Y(2)]);
        let b = mono(&r, &[Var::X(1), Var::Y(3)]);
        assert_eq!(a.render(&r), "x1^2*y2");
        assert_eq!(a.lcm(&b), mono(&r, &[Var::X(1), Var::X(1), Var::Y(2), Var::Y(3)]));
        assert!(b.divides(&a.lcm(&b)));
        assert!(!b.divides(&a));
        assert!(!a.is_squarefree() && b.is_squarefree());
        assert_eq!(a.degree(), 3);
        assert!(mono(&r, &[Var::X(2)]).is_coprime(&b));
    }
}
