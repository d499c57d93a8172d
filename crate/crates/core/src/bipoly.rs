//! Sparse bivariate polynomials, just enough for symbolic substitution checks.

use std::collections::BTreeMap;
use std::fmt;

use crate::gf::{Fe, FieldRef};

#[derive(Clone)]
pub struct BiPoly {
    field: FieldRef,
    // (deg_x, deg_y) -> nonzero coefficient
    terms: BTreeMap<(u64, u64), Fe>,
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?}*X^{i}*Y^{j}", self.field.coords(c))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl BiPoly {
    pub fn zero(field: FieldRef) -> Self {
        BiPoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: FieldRef, c: Fe) -> Self {
        let mut p = Self::zero(field);
        p.add_term(0, 0, c);
        p
    }

    pub fn monomial(field: FieldRef, i: u64, j: u64, c: Fe) -> Self {
        let mut p = Self::zero(field);
        p.add_term(i, j, c);
        p
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn add_term(&mut self, i: u64, j: u64, c: Fe) {
        if c.is_zero() {
            return;
        }
        let f = &self.field;
        let e = self.terms.entry((i, j)).or_insert(Fe::ZERO);
        *e = f.add(*e, c);
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u64, j: u64) -> Fe {
        self.terms.get(&(i, j)).copied().unwrap_or(Fe::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), Fe)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &other.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.scale(self.field.from_int(-1)))
    }

    pub fn scale(&self, c: Fe) -> BiPoly {
        let mut out = Self::zero(self.field.clone());
        for (&(i, j), &v) in &self.terms {
            out.add_term(i, j, self.field.mul(c, v));
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let f = &self.field;
        let mut out = Self::zero(f.clone());
        for (&(i1, j1), &a) in &self.terms {
            for (&(i2, j2), &b) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, f.mul(a, b));
            }
        }
        out
    }

    pub fn eval(&self, x: Fe, y: Fe) -> Fe {
        let f = &self.field;
        self.terms.iter().fold(f.zero(), |acc, (&(i, j), &c)| {
            f.add(acc, f.mul(c, f.mul(f.pow(x, i as u128), f.pow(y, j as u128))))
        })
    }

    /// `Some(c)` when `self == c * other` for a nonzero constant c.
    pub fn proportional_to(&self, other: &BiPoly) -> Option<Fe> {
        let f = &self.field;
        let (&key, &lead) = other.terms.iter().next()?;
        let c = f.div(self.coeff(key.0, key.1), lead)?;
        if c.is_zero() {
            return None;
        }
        (*self == other.scale(c)).then_some(c)
    }

    /// First monomial (in term order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &BiPoly) -> Option<((u64, u64), Fe, Fe)> {
        let diff = self.sub(other);
        let (&k, _) = diff.terms.iter().next()?;
        Some((k, self.coeff(k.0, k.1), other.coeff(k.0, k.1)))
    }
}
