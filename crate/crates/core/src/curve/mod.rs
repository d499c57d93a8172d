//! Generalized Artin-Mumford curves `L1(X) * L2(Y) = 1`.

mod count;
mod formulas;
mod zeta;

use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::error::{param, Error, Result};
use crate::gf::{embed, make_field, Embedding, FieldRef, MAX_DEGREE};
use crate::linpoly::{lcm, random_separable, KernelSpace, LinearizedPoly};

pub use count::{count_affine_by_table, CountableCurve, MAX_COUNT_ORDER};
pub(crate) use count::counting_field;
pub use formulas::{
    deuring_shafarevich, nakajima_check, riemann_hurwitz, NakajimaCheck, RamificationProfile, RamifiedPlaces,
};
pub use zeta::{l_polynomial, WeilCheck, ZetaData, MAX_ZETA_GENUS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tower {
    pub p: u32,
    pub n: usize,
    pub m: usize,
}

impl Tower {
    pub fn qbar(&self) -> u64 {
        (self.p as u64).pow(self.n as u32)
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow((self.n * self.m) as u32)
    }

    /// The q = p case, which the abstract excludes but the proofs borrow.
    pub fn is_prime_regime(&self) -> bool {
        self.n * self.m == 1
    }
}

#[derive(Clone, Debug)]
pub struct AMCurve {
    tower: Tower,
    l1: LinearizedPoly,
    l2: LinearizedPoly,
    kernel1: KernelSpace,
    kernel2: KernelSpace,
}

/// Brings two polynomials onto one coefficient field.
fn common_field(l1: &LinearizedPoly, l2: &LinearizedPoly) -> Result<(LinearizedPoly, LinearizedPoly)> {
    if l1.field().same_as(l2.field()) {
        return Ok((l1.clone(), l2.clone()));
    }
    if l1.p() != l2.p() {
        return param("L1 and L2 have different characteristics");
    }
    let d = lcm(l1.field().degree(), l2.field().degree());
    let f = make_field(l1.p(), d, 0)?;
    Ok((l1.lift_to(&f)?, l2.lift_to(&f)?))
}

impl AMCurve {
    pub fn new(l1: LinearizedPoly, l2: LinearizedPoly) -> Result<Self> {
        if l1.n() != l2.n() {
            return Err(Error::Validation(format!(
                "L1 is {}-linearized but L2 is {}-linearized",
                l1.qbar(),
                l2.qbar()
            )));
        }
        if l1.m() != l2.m() {
            return Err(Error::Validation(format!(
                "degree mismatch: deg L1 = {}, deg L2 = {}",
                l1.degree(),
                l2.degree()
            )));
        }
        if l1.m() == 0 {
            return Err(Error::Validation("L1 and L2 must have degree q > 1".into()));
        }
        for (name, l) in [("L1", &l1), ("L2", &l2)] {
            if !l.is_separable() {
                return Err(Error::Inseparable(format!("{name} has zero coefficient of T")));
            }
        }
        let (k1, k2) = (l1.classify_linearity(), l2.classify_linearity());
        if k1 > 1 && k2 > 1 {
            return Err(Error::Validation(format!(
                "L1 and L2 are both q̄^k-linearized for k >= 2 (L1: k = {k1}, L2: k = {k2}); at most one may be"
            )));
        }
        let (l1, l2) = common_field(&l1, &l2)?;
        let tower = Tower { p: l1.p(), n: l1.n(), m: l1.m() };
        // each kernel picks its own splitting degree; the curve needs both
        let d = lcm(l1.kernel()?.ambient().degree(), l2.kernel()?.ambient().degree());
        if d > MAX_DEGREE {
            return Err(Error::DeskScaleLimit(format!(
                "kernels of L1 and L2 only split together in GF({}^{d})",
                tower.p
            )));
        }
        let ambient = make_field(tower.p, d, 0)?;
        let emb = embed(l1.field(), &ambient)?;
        Ok(AMCurve { tower, kernel1: l1.kernel_in(&emb)?, kernel2: l2.kernel_in(&emb)?, l1, l2 })
    }

    /// The classical curve (X^p - X)(Y^p - Y) = 1 over GF(p).
    pub fn classical(p: u32) -> Result<Self> {
        let f = make_field(p, 1, 0)?;
        let l = LinearizedPoly::from_ints(1, f, &[-1, 1])?;
        AMCurve::new(l.clone(), l)
    }

    /// Seeded random member of the family with coefficients in GF(q). Draws
    /// whose kernels need an ambient field past MAX_DEGREE are redrawn.
    pub fn random(p: u32, n: usize, m: usize, seed: u64) -> Result<Self> {
        let field = make_field(p, n * m, 0)?;
        let mut s = seed.wrapping_mul(2);
        loop {
            let l1 = random_separable(n, &field, m, s)?;
            let l2 = random_separable(n, &field, m, s ^ 0xA5A5_0000_0000_0001)?;
            match AMCurve::new(l1, l2) {
                Err(Error::Validation(_) | Error::DeskScaleLimit(_)) => s = s.wrapping_add(0x1_0000),
                other => return other,
            }
        }
    }

    pub fn tower(&self) -> Tower {
        self.tower
    }

    pub fn q(&self) -> u64 {
        self.tower.q()
    }

    pub fn qbar(&self) -> u64 {
        self.tower.qbar()
    }

    pub fn l1(&self) -> &LinearizedPoly {
        &self.l1
    }

    pub fn l2(&self) -> &LinearizedPoly {
        &self.l2
    }

    pub fn coeff_field(&self) -> &FieldRef {
        self.l1.field()
    }

    /// Field holding both kernels (and F_q̄).
    pub fn ambient(&self) -> &FieldRef {
        self.kernel1.ambient()
    }

    pub fn coeff_to_ambient(&self) -> &Embedding {
        self.kernel1.embedding()
    }

    pub fn kernel1(&self) -> &KernelSpace {
        &self.kernel1
    }

    pub fn kernel2(&self) -> &KernelSpace {
        &self.kernel2
    }

    /// L1 and L2 agree after monic normalization.
    pub fn is_diagonal(&self) -> bool {
        self.l1.monic() == self.l2.monic()
    }

    pub fn ramification(&self) -> RamificationProfile {
        RamificationProfile::am_cover(self.q())
    }

    /// Riemann-Hurwitz on the cover K(x,y)/K(x), cross-checked against (q-1)^2.
    pub fn genus(&self) -> Result<u64> {
        let g = self.ramification().genus()?;
        let q = self.q();
        if g != (q - 1) * (q - 1) {
            return Err(Error::Inconsistency(format!("Riemann-Hurwitz gave {g}, expected (q-1)^2")));
        }
        Ok(g)
    }

    /// Deuring-Shafarevich for Σ with its two short orbits of length q.
    pub fn prank_formula(&self) -> Result<u64> {
        let q = self.q();
        deuring_shafarevich(q * q, 0, &[q, q])
    }

    /// Same curve with coefficients lifted to `field`.
    pub fn rebase(&self, field: &FieldRef) -> Result<Self> {
        AMCurve::new(self.l1.lift_to(field)?, self.l2.lift_to(field)?)
    }

    /// L1 and L2 lifted into `field` through `emb` (coefficient field -> field).
    pub fn lifted(&self, emb: &Embedding) -> Result<(LinearizedPoly, LinearizedPoly)> {
        Ok((self.l1.lift(emb)?, self.l2.lift(emb)?))
    }

    /// `L1(X) L2(Y) - 1` over the ambient field.
    pub fn defining_polynomial(&self) -> Result<BiPoly> {
        let (l1, l2) = self.lifted(self.coeff_to_ambient())?;
        let a = self.ambient();
        let f1 = l1.substitute_linear(a.one(), a.zero(), a.zero());
        let f2 = l2.substitute_linear(a.zero(), a.one(), a.zero());
        Ok(f1.mul(&f2).sub(&BiPoly::constant(a.clone(), a.one())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldRef {
        make_field(3, 1, 0).unwrap()
    }

    #[test]
    fn classical_curve_is_valid() {
        let c = AMCurve::classical(3).unwrap();
        assert_eq!(c.genus().unwrap(), 4);
        assert_eq!(c.prank_formula().unwrap(), 4);
        assert!(c.is_diagonal());
        assert!(c.tower().is_prime_regime());
        assert_eq!(c.ambient().degree(), 1);
    }

    #[test]
    fn both_9_linearized_is_rejected() {
        let l = LinearizedPoly::from_ints(1, f3(), &[1, 0, 1]).unwrap();
        let err = AMCurve::new(l.clone(), l).unwrap_err();
        assert!(matches!(err, Error::Validation(ref m) if m.contains("both")), "{err}");
    }

    #[test]
    fn one_9_linearized_is_fine() {
        let l1 = LinearizedPoly::from_ints(1, f3(), &[1, 1, 1]).unwrap();
        let l2 = LinearizedPoly::from_ints(1, f3(), &[1, 0, 1]).unwrap();
        let c = AMCurve::new(l1, l2).unwrap();
        assert_eq!(c.genus().unwrap(), 64);
        assert_eq!(c.kernel1().roots().len(), 9);
        assert_eq!(c.kernel2().roots().len(), 9);
    }

    #[test]
    fn degree_mismatch_and_inseparable() {
        let a = LinearizedPoly::from_ints(1, f3(), &[1, 1]).unwrap();
        let b = LinearizedPoly::from_ints(1, f3(), &[1, 1, 1]).unwrap();
        assert!(matches!(AMCurve::new(a.clone(), b), Err(Error::Validation(_))));
        let c = LinearizedPoly::from_ints(1, f3(), &[0, 1]).unwrap();
        assert!(matches!(AMCurve::new(a, c), Err(Error::Inseparable(_))));
    }

    #[test]
    fn random_curves_have_expected_genus() {
        for (p, n, m, g) in [(3, 1, 1, 4), (3, 1, 2, 64), (3, 2, 1, 64), (5, 1, 1, 16)] {
            for seed in 0..3 {
                let c = AMCurve::random(p, n, m, seed).unwrap();
                assert_eq!(c.genus().unwrap(), g);
            }
        }
    }

    #[test]
    fn defining_polynomial_vanishes_on_points() {
        let c = AMCurve::classical(3).unwrap();
        let f = c.defining_polynomial().unwrap();
        let a = c.ambient();
        for x in a.enumerate() {
            for y in a.enumerate() {
                let on = a.mul(c.l1().eval(x), c.l2().eval(y)) == a.one();
                assert_eq!(f.eval(x, y).is_zero(), on);
            }
        }
    }
}
