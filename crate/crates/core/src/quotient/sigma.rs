use serde::Serialize;

use super::{y_curve, YCurve};
use crate::autgroup::{verify_automorphism, AutMap};
use crate::bipoly::BiPoly;
use crate::curve::{counting_field, AMCurve, CountableCurve};
use crate::error::{param, Result};
use crate::gf::Embedding;
use crate::linpoly::LinearizedPoly;

#[derive(Clone, Debug, Serialize)]
pub struct QuotientCount {
    pub k: usize,
    /// Places of the rational quotient, parametrized by y (and y = ∞).
    pub quotient_places: u64,
    /// Σ_x-orbits of places mapped to themselves by Frobenius.
    pub stable_orbits: u64,
    /// Σ_x-orbits that contain a place rational over GF(Q0^k).
    pub rational_orbits: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaQuotient {
    pub relation: String,
    pub counts: Vec<QuotientCount>,
    pub transcript: Vec<String>,
}

/// X/Σ_x: η = L1(x) is Σ_x-invariant and L2(y) = 1/η, so the quotient is
/// the y-line. Checked by counting for k = 1, 2.
pub fn quotient_sigma_x(c: &AMCurve) -> Result<SigmaQuotient> {
    sigma_quotient(c, "x", "y")
}

/// Same with the roles of x and y exchanged.
pub fn quotient_sigma_y(c: &AMCurve) -> Result<SigmaQuotient> {
    let swapped = AMCurve::new(c.l2().clone(), c.l1().clone())?;
    sigma_quotient(&swapped, "y", "x")
}

fn sigma_quotient(c: &AMCurve, moved: &str, kept: &str) -> Result<SigmaQuotient> {
    let mut counts = Vec::new();
    let mut transcript = vec![format!(
        "η = L1({moved}) is fixed by {moved} -> {moved} + α for L1(α) = 0; L2({kept}) = 1/η, so K(η, {kept}) = K({kept})"
    )];
    for k in 1..=2 {
        let (field, emb) = counting_field(c.coeff_field(), k)?;
        let f = field.as_ref();
        let (l1, l2) = c.lifted(&emb)?;
        let m1 = l1.fp_matrix();
        let ker2 = l2.kernel_size_in(&Embedding::identity(&field))?;
        // y-line places: every y in K gives (η, y) = (1/L2(y), y), plus y = ∞
        let quotient_places = field.order() + 1;
        let nonzero_l2 = field.enumerate().filter(|&y| !l2.eval(y).is_zero()).count() as u64;
        // one orbit per fibre of L1 over 1/L2(y), the P_{x=α} orbit, and the
        // P_{y=β} places, each fixed by Σ_x and rational iff β in K
        let stable_orbits = nonzero_l2 + 1 + ker2;
        // the orbit over y holds a rational point iff 1/L2(y) = L1(x) for some x in K
        let with_rational = field
            .enumerate()
            .filter(|&y| f.inv(l2.eval(y)).is_some_and(|t| m1.solve(&f.coords(&t)).is_some()))
            .count() as u64;
        let rational_orbits = with_rational + 1 + ker2;
        transcript.push(format!(
            "k = {k}: quotient has {quotient_places} places, {stable_orbits} Frobenius-stable orbits, {rational_orbits} orbits with a rational place"
        ));
        counts.push(QuotientCount {
            k,
            quotient_places,
            stable_orbits,
            rational_orbits,
            ok: quotient_places == stable_orbits && quotient_places == c.coeff_field().order().pow(k as u32) + 1,
        });
    }
    Ok(SigmaQuotient { relation: format!("L2({kept}) = 1/η, η = L1({moved})"), counts, transcript })
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagonalCertificate {
    /// L1 = r L2.
    pub ratio: Vec<u32>,
    pub a: Vec<u32>,
    pub additivity: bool,
    pub eta_identity: bool,
    pub h_order: usize,
    /// Every τ_{α,-α} is an automorphism fixing t = x + y and η = L2(y).
    pub h_invariant: bool,
    /// Whether τ_{α,α} also fixes t (it moves t by 2α).
    pub diagonal_fixes_t: bool,
    pub genus: u64,
}

/// For L1 = r L2, put t = x + y and X = r L2(y). Then
/// L2(t) = L2(x) + L2(y) = X/r + 1/X, the curve with L = L2 and a = 1/r.
pub fn diagonal_quotient(c: &AMCurve) -> Result<(YCurve, DiagonalCertificate)> {
    if !c.is_diagonal() {
        return param("the diagonal quotient needs L1 and L2 equal after normalization");
    }
    let cf = c.coeff_field().clone();
    let f = cf.as_ref();
    let (l1, l2) = (c.l1(), c.l2());
    let lead = |l: &LinearizedPoly| l.coeffs()[l.m()];
    let r = f.div(lead(l1), lead(l2)).expect("leading coefficient is nonzero");
    let a = f.inv(r).expect("r is nonzero");
    let y = y_curve(l2, a)?;

    let (one, zero) = (f.one(), f.zero());
    let lx = l2.substitute_linear(one, zero, zero);
    let ly = l2.substitute_linear(zero, one, zero);
    let lt = l2.substitute_linear(one, one, zero);
    let additivity = lt.sub(&lx).sub(&ly).is_zero();
    let unit = BiPoly::constant(cf.clone(), one);
    let big_f = l1.substitute_linear(one, zero, zero).mul(&ly).sub(&unit);
    let rs = BiPoly::constant(cf.clone(), r);
    // r η L2(t) - r η^2 - 1 with η = L2(y) is exactly F
    let eta_identity = rs.mul(&ly).mul(&lt).sub(&rs.mul(&ly).mul(&ly)).sub(&unit) == big_f;

    let amb = c.ambient();
    let (_, l2a) = c.lifted(c.coeff_to_ambient())?;
    let roots = c.kernel2().roots();
    let mut h_invariant = true;
    let mut diagonal_fixes_t = true;
    for &alpha in roots {
        let h = AutMap::tau(amb, alpha, amb.neg(alpha));
        h_invariant &= l2a.eval(alpha).is_zero() && c.kernel1().contains(&alpha) && verify_automorphism(c, &h)?.ok;
        diagonal_fixes_t &= amb.add(alpha, alpha).is_zero();
    }
    let cert = DiagonalCertificate {
        ratio: f.coords(&r),
        a: f.coords(&a),
        additivity,
        eta_identity,
        h_order: roots.len(),
        h_invariant,
        diagonal_fixes_t,
        genus: y.genus()?,
    };
    Ok((y, cert))
}

#[derive(Clone, Debug)]
pub struct FineFormSplit {
    pub curve: AMCurve,
    pub identity_holds: bool,
    pub transcript: Vec<String>,
}

/// `L1(z) L(y) - L1(z)^2 = a` with L1 = L rewrites as
/// `L(z) L(y - z) = a`, the member `(L/a)(X) L(Y) = 1` with X = z, Y = y - z.
pub fn fine_form_split(l1: &LinearizedPoly, l: &LinearizedPoly, a: crate::gf::Fe) -> Result<FineFormSplit> {
    if !l1.field().same_as(l.field()) || l1 != l {
        return param("L(Y) - L1(Z) = L2(Y - Z) needs L1 = L2 = L");
    }
    let f = l.field().clone();
    let Some(ai) = f.inv(a) else { return param("a must be nonzero") };
    let (one, zero) = (f.one(), f.zero());
    let lz = l1.substitute_linear(one, zero, zero);
    let ly = l.substitute_linear(zero, one, zero);
    let av = BiPoly::constant(f.clone(), a);
    let left = lz.mul(&ly).sub(&lz.mul(&lz)).sub(&av);
    let right = l.substitute_linear(one, zero, zero).mul(&l.substitute_linear(f.neg(one), one, zero)).sub(&av);
    let identity_holds = left == right;
    let curve = AMCurve::new(l1.scale(ai)?, l.clone())?;
    let transcript = vec![
        format!("L1(Z) L(Y) - L1(Z)^2 - a has {} terms", left.len()),
        format!("L(Z) L(Y - Z) - a agrees: {identity_holds}"),
    ];
    Ok(FineFormSplit { curve, identity_holds, transcript })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use std::collections::BTreeSet;

    #[test]
    fn classical_sigma_x_quotient_is_rational() {
        let c = AMCurve::classical(3).unwrap();
        let q = quotient_sigma_x(&c).unwrap();
        assert_eq!(q.counts[0].quotient_places, 4);
        assert_eq!(q.counts[1].quotient_places, 10);
        for k in &q.counts {
            assert!(k.ok);
            assert_eq!(k.rational_orbits, k.quotient_places);
        }
        assert!(quotient_sigma_y(&c).unwrap().counts.iter().all(|k| k.ok));
    }

    #[test]
    fn rational_orbits_by_brute_force() {
        // orbits of affine GF(9)-points of the classical curve under x -> x + α
        let c = AMCurve::classical(3).unwrap();
        let k = make_field(3, 2, 0).unwrap();
        let mut orbits = BTreeSet::new();
        for x in k.enumerate() {
            for y in k.enumerate() {
                let lx = k.sub(k.pow(x, 3), x);
                let ly = k.sub(k.pow(y, 3), y);
                if k.mul(lx, ly) == k.one() {
                    let rep = (0..3).map(|i| k.index(&k.add(x, k.from_int(i)))).min().unwrap();
                    orbits.insert((rep, k.index(&y)));
                }
            }
        }
        // plus one orbit of P_{x=α} and three fixed P_{y=β}
        let q = quotient_sigma_x(&c).unwrap();
        assert_eq!(orbits.len() as u64 + 4, q.counts[1].rational_orbits);
    }

    #[test]
    fn diagonal_quotient_of_classical() {
        let (y, cert) = diagonal_quotient(&AMCurve::classical(3).unwrap()).unwrap();
        assert_eq!(cert.genus, 2);
        assert!(cert.additivity && cert.eta_identity && cert.h_invariant);
        assert!(!cert.diagonal_fixes_t);
        assert_eq!(cert.h_order, 3);
        assert_eq!(y.a(), y.field().one());
    }

    #[test]
    fn diagonal_quotient_needs_equal_polynomials() {
        let f = make_field(3, 1, 0).unwrap();
        let l1 = LinearizedPoly::from_ints(1, f.clone(), &[1, 1, 1]).unwrap();
        let l2 = LinearizedPoly::from_ints(1, f, &[1, 0, 1]).unwrap();
        assert!(diagonal_quotient(&AMCurve::new(l1, l2).unwrap()).is_err());
    }

    #[test]
    fn fine_form() {
        let f = make_field(3, 2, 0).unwrap();
        let l = LinearizedPoly::from_ints(1, f.clone(), &[-1, 1]).unwrap();
        let s = fine_form_split(&l, &l, f.generator()).unwrap();
        assert!(s.identity_holds);
        assert_eq!(s.curve.genus().unwrap(), 4);
        let other = LinearizedPoly::from_ints(1, f.clone(), &[1, 1]).unwrap();
        assert!(fine_form_split(&other, &l, f.one()).is_err());
    }
}
