//! Quotient curves of AM curves and the two characterization families
//! `L(y) = a x + 1/x` and `L(y) = x^3 + b x`.

mod sigma;
mod yaut;

use crate::curve::{count_affine_by_table, counting_field, CountableCurve, RamificationProfile, RamifiedPlaces};
use crate::error::{param, Result};
use crate::gf::{Fe, FieldRef, FiniteField};
use crate::linpoly::LinearizedPoly;

pub use sigma::{
    diagonal_quotient, fine_form_split, quotient_sigma_x, quotient_sigma_y, DiagonalCertificate, FineFormSplit,
    QuotientCount, SigmaQuotient,
};
pub use yaut::{
    verify_ymap, weierstrass_places, y_aut_group, y_aut_group_in, y_aut_search, WeierstrassData, YAutGroup,
    YMap, YSearchResult,
};

fn p_linear(l: &LinearizedPoly) -> Result<LinearizedPoly> {
    if !l.is_separable() {
        return param("L must be separable");
    }
    Ok(l.as_p_linearized())
}

/// `L(y) = a x + 1/x` with L p-linearized of degree q.
#[derive(Clone, Debug, PartialEq)]
pub struct YCurve {
    l: LinearizedPoly,
    a: Fe,
}

pub fn y_curve(l: &LinearizedPoly, a: Fe) -> Result<YCurve> {
    let l = p_linear(l)?;
    if a.is_zero() {
        return param("a must be nonzero");
    }
    if !l.field().contains(&a) {
        return param("a is not an element of the coefficient field of L");
    }
    Ok(YCurve { l, a })
}

impl YCurve {
    pub fn l(&self) -> &LinearizedPoly {
        &self.l
    }

    pub fn a(&self) -> Fe {
        self.a
    }

    pub fn q(&self) -> u64 {
        self.l.degree()
    }

    pub fn field(&self) -> &FieldRef {
        self.l.field()
    }

    /// Totally ramified over x = 0 and x = ∞, each with G^(1) = E_q.
    pub fn ramification(&self) -> RamificationProfile {
        let q = self.q();
        RamificationProfile {
            group_order: q,
            base_genus: 0,
            places: vec![RamifiedPlaces { count: 2, filtration: vec![q, q, 1] }],
        }
    }
}

/// `a x + 1/x`, or None at x = 0.
fn y_rhs(f: &FiniteField, a: Fe, x: Fe) -> Option<Fe> {
    f.inv(x).map(|xi| f.add(f.mul(a, x), xi))
}

impl CountableCurve for YCurve {
    fn base_field(&self) -> &FieldRef {
        self.l.field()
    }

    fn genus(&self) -> Result<u64> {
        self.ramification().genus()
    }

    fn count_places(&self, k: usize) -> Result<u64> {
        let (field, emb) = counting_field(self.l.field(), k)?;
        let l = self.l.lift(&emb)?;
        let a = emb.apply(self.a);
        let affine = count_affine_by_table(&field, &l, |x| y_rhs(&field, a, x));
        Ok(affine + 2)
    }
}

/// `L(y) = x^3 + b x`, p ≠ 3.
#[derive(Clone, Debug, PartialEq)]
pub struct ZCurve {
    l: LinearizedPoly,
    b: Fe,
}

pub fn z_curve(l: &LinearizedPoly, b: Fe) -> Result<ZCurve> {
    if l.p() == 3 {
        return param("the x^3 + b x family requires p ≠ 3");
    }
    let l = p_linear(l)?;
    if !l.field().contains(&b) {
        return param("b is not an element of the coefficient field of L");
    }
    Ok(ZCurve { l, b })
}

impl ZCurve {
    pub fn l(&self) -> &LinearizedPoly {
        &self.l
    }

    pub fn b(&self) -> Fe {
        self.b
    }

    pub fn q(&self) -> u64 {
        self.l.degree()
    }

    /// One place over x = ∞ with G^(0) = ... = G^(3) = E_q, G^(4) = 1.
    pub fn ramification(&self) -> RamificationProfile {
        let q = self.q();
        RamificationProfile {
            group_order: q,
            base_genus: 0,
            places: vec![RamifiedPlaces { count: 1, filtration: vec![q, q, q, q, 1] }],
        }
    }
}

impl CountableCurve for ZCurve {
    fn base_field(&self) -> &FieldRef {
        self.l.field()
    }

    fn genus(&self) -> Result<u64> {
        self.ramification().genus()
    }

    fn count_places(&self, k: usize) -> Result<u64> {
        let (field, emb) = counting_field(self.l.field(), k)?;
        let l = self.l.lift(&emb)?;
        let b = emb.apply(self.b);
        let f = field.as_ref();
        let affine = count_affine_by_table(&field, &l, |x| Some(f.add(f.mul(f.square(x), x), f.mul(b, x))));
        Ok(affine + 1)
    }
}

/// Deuring-Shafarevich over the rational x-line, one entry per short orbit.
pub fn y_prank_formula(y: &YCurve) -> Result<u64> {
    crate::curve::deuring_shafarevich(y.q(), 0, &[1, 1])
}

pub fn z_prank_formula(z: &ZCurve) -> Result<u64> {
    crate::curve::deuring_shafarevich(z.q(), 0, &[1])
}
