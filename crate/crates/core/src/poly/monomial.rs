use std::cmp::Ordering;
use std::fmt::Write;
use std::hash::{Hash, Hasher};

use super::Ring;

/// A monomial as a dense exponent vector. Variable 0 is the greatest in the
/// term order, so comparing exponent vectors lexicographically is exactly the
/// lex order.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
    support: u64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
            support: 0,
        }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial::from_exps(exps)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        assert!(exps.len() <= 64, "at most 64 variables");
        let degree = exps.iter().sum();
        let support = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | 1u64 << i);
        Monomial { exps, degree, support }
    }

    /// Squarefree monomial whose support is `mask`.
    pub fn from_support(nvars: usize, mask: u64) -> Self {
        Monomial::from_exps((0..nvars).map(|i| (mask >> i & 1) as u32).collect())
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Bitmask of variables with positive exponent.
    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
            support: self.support | other.support,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support & !other.support == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial::from_exps(other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support & other.support == 0
    }

    /// Prepends `count` new variables (greatest in the order) with exponent zero.
    pub(crate) fn with_leading_vars(&self, count: usize) -> Monomial {
        let mut exps = vec![0; count];
        exps.extend_from_slice(&self.exps);
        Monomial::from_exps(exps)
    }

    /// Drops the first `count` variables, which must have exponent zero.
    pub(crate) fn without_leading_vars(&self, count: usize) -> Monomial {
        debug_assert!(self.exps[..count].iter().all(|&e| e == 0));
        Monomial::from_exps(self.exps[count..].to_vec())
    }

    pub fn render(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for (idx, &e) in self.exps.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&ring.var_name(idx));
            if e > 1 {
                write!(out, "^{e}").expect("write to string");
            }
        }
        out
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    /// Pure lex with variable 0 greatest.
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
