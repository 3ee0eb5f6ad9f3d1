use std::cmp::Ordering;

use super::{Monomial, PolyError, Ring};
use crate::field::Fp;

/// A polynomial over GF(p): nonzero terms in strictly descending lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(u32, Monomial)>,
    field: Fp,
    nvars: usize,
}

impl Polynomial {
    pub fn zero(field: Fp, nvars: usize) -> Self {
        Polynomial {
            terms: Vec::new(),
            field,
            nvars,
        }
    }

    pub fn from_monomial(field: Fp, coeff: u32, m: Monomial) -> Self {
        let nvars = m.nvars();
        let coeff = coeff % field.characteristic();
        let terms = if coeff == 0 { vec![] } else { vec![(coeff, m)] };
        Polynomial { terms, field, nvars }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials
    /// and drops zero coefficients.
    pub fn from_terms(field: Fp, nvars: usize, mut terms: Vec<(u32, Monomial)>) -> Self {
        assert!(terms.iter().all(|(_, m)| m.nvars() == nvars));
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            let c = c % field.characteristic();
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = field.add(*lc, c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        Polynomial {
            terms: out,
            field,
            nvars,
        }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|(c, _)| *c)
    }

    /// True if every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].1.degree() == w[1].1.degree())
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::CharacteristicMismatch(
                self.field.characteristic(),
                other.field.characteristic(),
            ));
        }
        if self.nvars != other.nvars {
            return Err(PolyError::RingMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// `self + scale * other`, merging the two sorted term lists.
    fn add_scaled(&self, scale: u32, other: &Polynomial) -> Polynomial {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().expect("peeked").clone()),
                (None, Some((c, m))) => {
                    out.push((f.mul(scale, *c), m.clone()));
                    b.next();
                }
                (Some((ca, ma)), Some((cb, mb))) => match ma.cmp(mb) {
                    Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                    Ordering::Less => {
                        out.push((f.mul(scale, *cb), mb.clone()));
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = f.add(*ca, f.mul(scale, *cb));
                        if c != 0 {
                            out.push((c, ma.clone()));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
        out.retain(|(c, _)| *c != 0);
        Polynomial {
            terms: out,
            field: f,
            nvars: self.nvars,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.add_scaled(1, other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.add_scaled(self.field.neg(1), other))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero(self.field, self.nvars);
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (self.field.mul(*a, c), m.clone()))
                .collect(),
            field: self.field,
            nvars: self.nvars,
        }
    }

    /// Multiplies by the term `c * m`. Multiplication by a monomial preserves
    /// the order of terms.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Result<Polynomial, PolyError> {
        if m.nvars() != self.nvars {
            return Err(PolyError::RingMismatch(self.nvars, m.nvars()));
        }
        Ok(self.mul_term_unchecked(c, m))
    }

    pub(crate) fn mul_term_unchecked(&self, c: u32, m: &Monomial) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero(self.field, self.nvars);
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (self.field.mul(*a, c), t.mul(m)))
                .collect(),
            field: self.field,
            nvars: self.nvars,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut acc = Polynomial::zero(self.field, self.nvars);
        for (c, m) in &other.terms {
            acc = acc.add_scaled(1, &self.mul_term_unchecked(*c, m));
        }
        Ok(acc)
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.field.inv(c)),
        }
    }

    /// `lcm/lt(f) * f - lcm/lt(g) * g` with both leading terms made monic.
    pub fn s_polynomial(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let (Some(lf), Some(lg)) = (self.leading_monomial(), other.leading_monomial()) else {
            return Ok(Polynomial::zero(self.field, self.nvars));
        };
        let l = lf.lcm(lg);
        let f = self.field;
        let a = self.mul_term_unchecked(f.inv(self.terms[0].0), &lf.quotient_of(&l));
        let b = other.mul_term_unchecked(f.inv(other.terms[0].0), &lg.quotient_of(&l));
        Ok(a.add_scaled(f.neg(1), &b))
    }

    /// Subtracts `c * m * g` where `c * m * lt(g)` cancels a term of `self`.
    pub(crate) fn sub_multiple(&self, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(self.field.neg(c), &g.mul_term_unchecked(1, m))
    }

    pub(crate) fn split_leading(mut self) -> Option<((u32, Monomial), Polynomial)> {
        if self.terms.is_empty() {
            return None;
        }
        let lead = self.terms.remove(0);
        Some((lead, self))
    }

    pub(crate) fn push_smallest(&mut self, c: u32, m: Monomial) {
        debug_assert!(self.terms.last().is_none_or(|(_, l)| *l > m));
        if c != 0 {
            self.terms.push((c, m));
        }
    }

    /// Applies `f` to every monomial; `f` must preserve the relative order.
    pub(crate) fn map_monomials(&self, nvars: usize, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let p = Polynomial {
            terms: self.terms.iter().map(|(c, m)| (*c, f(m))).collect(),
            field: self.field,
            nvars,
        };
        debug_assert!(p.terms.windows(2).all(|w| w[0].1 > w[1].1));
        p
    }

    /// Renders as e.g. `x1*y2 - x2*y1`, terms in descending order.
    pub fn render(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let signed = self.field.signed(*c);
            let mag = signed.unsigned_abs();
            if k == 0 {
                if signed < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if signed < 0 { " - " } else { " + " });
            }
            match (mag, m.is_one()) {
                (_, true) => out.push_str(&mag.to_string()),
                (1, false) => out.push_str(&m.render(ring)),
                (_, false) => out.push_str(&format!("{mag}*{}", m.render(ring))),
            }
        }
        out
    }
}
