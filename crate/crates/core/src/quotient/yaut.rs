//! Automorphisms of `L(y) = a x + 1/x`: E_q, ν, μ, the fixed places of μ,
//! and an exhaustive search over Möbius-in-x, affine-in-y maps.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::YCurve;
use crate::autgroup::{Relation, Verification};
use crate::bipoly::BiPoly;
use crate::error::{inconsistency, param, Error, Result};
use crate::gf::{embed, make_field, poly, Embedding, Fe, FieldRef, FiniteField, MAX_DEGREE};
use crate::linpoly::LinearizedPoly;

/// `(x, y) -> ((s x + u) / (v x + w), e y + α)`, Möbius part scaled so its
/// first nonzero entry is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YMap {
    pub mobius: [Fe; 4],
    pub e: Fe,
    pub alpha: Fe,
}

impl YMap {
    pub fn new(f: &FiniteField, mobius: [Fe; 4], e: Fe, alpha: Fe) -> Self {
        let lead = mobius.iter().copied().find(|c| !c.is_zero()).expect("nonzero Möbius matrix");
        let li = f.inv(lead).expect("nonzero");
        YMap { mobius: mobius.map(|c| f.mul(c, li)), e, alpha }
    }

    pub fn identity(f: &FiniteField) -> Self {
        YMap { mobius: [f.one(), f.zero(), f.zero(), f.one()], e: f.one(), alpha: f.zero() }
    }

    pub fn tau(f: &FiniteField, alpha: Fe) -> Self {
        YMap { alpha, ..Self::identity(f) }
    }

    pub fn nu(f: &FiniteField) -> Self {
        let m1 = f.neg(f.one());
        Self::new(f, [m1, f.zero(), f.zero(), f.one()], m1, f.zero())
    }

    pub fn mu(f: &FiniteField, a: Fe) -> Self {
        Self::new(f, [f.zero(), f.one(), a, f.zero()], f.one(), f.zero())
    }

    pub fn det(&self, f: &FiniteField) -> Fe {
        let [s, u, v, w] = self.mobius;
        f.sub(f.mul(s, w), f.mul(u, v))
    }

    /// None when x is sent to 0 or ∞ (the image is not an affine point).
    pub fn apply(&self, f: &FiniteField, x: Fe, y: Fe) -> Option<(Fe, Fe)> {
        let [s, u, v, w] = self.mobius;
        let xn = f.div(f.add(f.mul(s, x), u), f.add(f.mul(v, x), w))?;
        (!xn.is_zero()).then(|| (xn, f.add(f.mul(self.e, y), self.alpha)))
    }

    /// Action on the x-line including ∞ (`None`).
    fn act_x(&self, f: &FiniteField, x: Option<Fe>) -> Option<Fe> {
        let [s, u, v, w] = self.mobius;
        match x {
            Some(x) => f.div(f.add(f.mul(s, x), u), f.add(f.mul(v, x), w)),
            None => f.div(s, v),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, f: &FiniteField, o: &YMap) -> YMap {
        let [s1, u1, v1, w1] = self.mobius;
        let [s2, u2, v2, w2] = o.mobius;
        let dot = |a: Fe, b: Fe, c: Fe, d: Fe| f.add(f.mul(a, b), f.mul(c, d));
        let m = [dot(s1, s2, u1, v2), dot(s1, u2, u1, w2), dot(v1, s2, w1, v2), dot(v1, u2, w1, w2)];
        YMap::new(f, m, f.mul(self.e, o.e), f.add(f.mul(self.e, o.alpha), self.alpha))
    }

    pub fn order(&self, f: &FiniteField) -> u64 {
        let id = YMap::identity(f);
        let mut acc = *self;
        let mut k = 1;
        while acc != id {
            acc = acc.compose(f, self);
            k += 1;
        }
        k
    }
}

/// Symbolic check: with `G = L(e y + α) - a X' - 1/X'`, demand
/// `x (s x + u)(v x + w) G = c (s x + u)(v x + w) (x L(y) - a x^2 - 1)`.
pub fn verify_ymap(l: &LinearizedPoly, a: Fe, g: &YMap) -> Verification {
    let f = l.field().clone();
    let ff = f.as_ref();
    if g.det(ff).is_zero() || g.e.is_zero() {
        return Verification { ok: false, scale: None, transcript: Vec::new(), mismatch: Some("map is degenerate".into()) };
    }
    let [s, u, v, w] = g.mobius;
    let lin = |c1: Fe, c0: Fe| {
        let mut b = BiPoly::monomial(f.clone(), 1, 0, c1);
        b.add_term(0, 0, c0);
        b
    };
    let (num, den) = (lin(s, u), lin(v, w));
    let x = BiPoly::monomial(f.clone(), 1, 0, ff.one());
    let av = BiPoly::constant(f.clone(), a);
    let image_l = l.substitute_linear(ff.zero(), g.e, g.alpha);
    let lhs = image_l
        .mul(&x)
        .mul(&num)
        .mul(&den)
        .sub(&av.mul(&x).mul(&num).mul(&num))
        .sub(&x.mul(&den).mul(&den));
    let base = l
        .substitute_linear(ff.zero(), ff.one(), ff.zero())
        .mul(&x)
        .sub(&av.mul(&x).mul(&x))
        .sub(&BiPoly::constant(f.clone(), ff.one()));
    let rhs = base.mul(&num).mul(&den);
    let transcript = vec![format!("cleared image has {} terms, cleared equation {}", lhs.len(), rhs.len())];
    match lhs.proportional_to(&rhs) {
        Some(c) => Verification { ok: true, scale: Some(ff.coords(&c)), transcript, mismatch: None },
        None => {
            let mismatch = lhs
                .first_difference(&rhs)
                .map(|((i, j), p, q)| format!("coefficient of X^{i} Y^{j}: {:?} vs {:?}", ff.coords(&p), ff.coords(&q)));
            Verification { ok: false, scale: None, transcript, mismatch }
        }
    }
}

#[derive(Clone, Debug)]
pub struct YAutGroup {
    pub field: FieldRef,
    pub elements: Vec<YMap>,
    pub relations: Vec<Relation>,
    pub q: u64,
}

impl YAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn all_ok(&self) -> bool {
        self.relations.iter().all(|r| r.ok)
    }
}

pub fn y_aut_group(y: &YCurve) -> Result<YAutGroup> {
    let k = y.l().kernel()?;
    y_aut_group_in(y, k.embedding())
}

/// E_q ⋊ <ν> × <μ>, built in the field reached by `emb` and certified
/// exhaustively. Relation failures are reported, not raised.
pub fn y_aut_group_in(y: &YCurve, emb: &Embedding) -> Result<YAutGroup> {
    let f = emb.sup().clone();
    let ff = f.as_ref();
    let l = y.l().lift(emb)?;
    let a = emb.apply(y.a());
    let kernel = y.l().kernel_in(emb)?;
    let id = YMap::identity(ff);
    let (nu, mu) = (YMap::nu(ff), YMap::mu(ff, a));
    let mut set = HashSet::new();
    for &alpha in kernel.roots() {
        let t = YMap::tau(ff, alpha);
        for sgn in [id, nu] {
            for inv in [id, mu] {
                set.insert(t.compose(ff, &sgn).compose(ff, &inv));
            }
        }
    }
    let mut elements: Vec<YMap> = set.into_iter().collect();
    elements.sort();
    let q = y.q();
    let mut relations = Vec::new();
    let mut rel = |lhs: String, rhs: &str, ok: bool| relations.push(Relation { lhs, rhs: rhs.into(), ok });

    let failed = elements.par_iter().filter(|g| !verify_ymap(&l, a, g).ok).count();
    rel("F∘g".into(), "c·F for every element", failed == 0);
    rel("|G|".into(), &format!("4q = {}", 4 * q), elements.len() as u64 == 4 * q);
    let members: HashSet<YMap> = elements.iter().copied().collect();
    let closed = elements.par_iter().all(|g| elements.iter().all(|h| members.contains(&g.compose(ff, h))));
    rel("G·G".into(), "G", closed);
    rel("μ²".into(), "1", mu.compose(ff, &mu) == id);
    rel("ν²".into(), "1", nu.compose(ff, &nu) == id);
    rel("μν".into(), "νμ", mu.compose(ff, &nu) == nu.compose(ff, &mu));
    for (i, &b) in kernel.fp_basis().iter().enumerate() {
        let t = YMap::tau(ff, b);
        rel(format!("μ τ{i}"), "τ μ", mu.compose(ff, &t) == t.compose(ff, &mu));
        rel(format!("ν τ{i} ν"), "τ_{-α}", nu.compose(ff, &t).compose(ff, &nu) == YMap::tau(ff, ff.neg(b)));
    }
    // μ commutes with everything and lies outside Dih(E_q) = E_q ⋊ <ν>
    let central = elements.iter().all(|g| mu.compose(ff, g) == g.compose(ff, &mu));
    rel("μ g".into(), "g μ for all g", central);
    let dihedral: Vec<YMap> = elements.iter().copied().filter(|g| g.mobius[1].is_zero() && g.mobius[2].is_zero()).collect();
    rel("|Dih(E_q)|".into(), &format!("2q = {}", 2 * q), dihedral.len() as u64 == 2 * q);
    rel("<μ> ∩ Dih(E_q)".into(), "{1}", !dihedral.contains(&mu));
    Ok(YAutGroup { field: f, elements, relations, q })
}

#[derive(Clone, Debug, Serialize)]
pub struct WeierstrassData {
    /// Degree over GF(p) of the field holding every listed place.
    pub field_degree: usize,
    /// (x, y) coordinates of the places fixed by μ.
    pub places: Vec<(Vec<u32>, Vec<u32>)>,
    pub all_fixed_by_mu: bool,
    /// Affine points fixed by μ found by scanning the whole field.
    pub fixed_by_scan: usize,
    pub mu_is_involution: bool,
    /// Places over the zeros of a x^2 + 1, and how many of them μ fixes.
    pub plus_locus_places: usize,
    pub plus_locus_fixed: usize,
}

/// Field over which both zeros of `a x^2 + c` and all q places above each exist,
/// with those places.
fn places_over(y: &YCurve, c: i64) -> Result<(FieldRef, Embedding, Vec<(Fe, Fe)>)> {
    let base = y.field();
    let p = base.characteristic();
    let q = y.q() as usize;
    let mut d = base.degree();
    while d <= MAX_DEGREE {
        let e = make_field(p, d, 0)?;
        let emb = embed(base, &e)?;
        let l = y.l().lift(&emb)?;
        let a = emb.apply(y.a());
        let rs = poly::roots(&e, &[e.from_int(c), e.zero(), a]);
        let m = l.fp_matrix();
        let kb = l.roots_basis();
        if rs.len() == 2 && kb.len() == l.m() {
            let mut pts = Vec::new();
            for &r in &rs {
                let t = super::y_rhs(&e, a, r).expect("r is nonzero");
                if let Some(v) = m.solve(&e.coords(&t)) {
                    let y0 = e.from_fp_vector(&v);
                    let ker = l.kernel_in(&Embedding::identity(&e))?;
                    pts.extend(ker.roots().iter().map(|&k| (r, e.add(y0, k))));
                }
            }
            if pts.len() == 2 * q {
                return Ok((e, emb, pts));
            }
        }
        d += base.degree();
    }
    Err(Error::DeskScaleLimit(format!("places over a x^2 {c:+} need GF({p}^D), D > {MAX_DEGREE}")))
}

/// The places fixed by μ: x = 1/(a x), so a x^2 = 1, with q places above
/// each of the two zeros. The zeros of a x^2 + 1 are reported alongside;
/// μ sends x to -x there.
pub fn weierstrass_places(y: &YCurve) -> Result<WeierstrassData> {
    let (e, emb, pts) = places_over(y, -1)?;
    let ff = e.as_ref();
    let a = emb.apply(y.a());
    let mu = YMap::mu(ff, a);
    let all_fixed = pts.iter().all(|&(x, v)| mu.apply(ff, x, v) == Some((x, v)));
    // independent scan over the x-line: affine fixed points need x = μ(x);
    // x = 0 and x = ∞ carry the two totally ramified places, which μ swaps
    let l = y.l().lift(&emb)?;
    let m = l.fp_matrix();
    let mut fixed_by_scan = 0;
    for x in e.enumerate() {
        if mu.act_x(ff, Some(x)) != Some(x) || x.is_zero() {
            continue;
        }
        let t = super::y_rhs(ff, a, x).expect("x is nonzero");
        if m.solve(&e.coords(&t)).is_some() {
            fixed_by_scan += l.kernel_size_in(&Embedding::identity(&e))? as usize;
        }
    }
    if mu.act_x(ff, Some(ff.zero())).is_some() || mu.act_x(ff, None) != Some(ff.zero()) {
        return inconsistency("μ does not swap the places over x = 0 and x = ∞");
    }
    let (pe, pemb, plus) = places_over(y, 1)?;
    let pmu = YMap::mu(&pe, pemb.apply(y.a()));
    let plus_fixed = plus.iter().filter(|&&(x, v)| pmu.apply(&pe, x, v) == Some((x, v))).count();
    let mut places: Vec<(Vec<u32>, Vec<u32>)> = pts.iter().map(|(x, v)| (ff.coords(x), ff.coords(v))).collect();
    places.sort();
    Ok(WeierstrassData {
        field_degree: e.degree(),
        places,
        all_fixed_by_mu: all_fixed,
        fixed_by_scan,
        mu_is_involution: mu.compose(ff, &mu) == YMap::identity(ff),
        plus_locus_places: plus.len(),
        plus_locus_fixed: plus_fixed,
    })
}

#[derive(Clone, Debug)]
pub struct YSearchResult {
    pub field: FieldRef,
    pub embedding: Embedding,
    pub maps: Vec<YMap>,
    pub evaluations: u64,
}

const TEST_POINTS: usize = 40;
const PROBE_MIN_ORDER: u64 = 200;

/// All maps `((s x + u)/(v x + w), e y + α)` over GF(p^D) preserving the
/// curve, filtered on probe points and confirmed symbolically.
pub fn y_aut_search(y: &YCurve, degree: usize, budget: u64) -> Result<YSearchResult> {
    let base = y.field();
    let p = base.characteristic();
    if degree % base.degree() != 0 {
        return param(format!("GF({p}^{degree}) does not contain the coefficient field of L"));
    }
    let field = make_field(p, degree, 0)?;
    let emb_bf = embed(base, &field)?;
    if y.l().kernel_in(&emb_bf).is_err() {
        return param(format!("GF({p}^{degree}) does not contain the roots of L"));
    }
    let mut j = 2;
    while (p as u64).saturating_pow((degree * j) as u32) < PROBE_MIN_ORDER {
        j += 1;
    }
    let probe = make_field(p, degree * j, 0)?;
    let emb_fp = embed(&field, &probe)?;
    let emb_bp = emb_bf.then(&emb_fp)?;
    let pf = probe.as_ref();
    let lp = y.l().lift(&emb_bp)?;
    let ap = emb_bp.apply(y.a());
    let mp = lp.fp_matrix();
    let pts: Vec<(Fe, Fe)> = probe
        .enumerate()
        .filter_map(|x| {
            let t = super::y_rhs(pf, ap, x)?;
            mp.solve(&pf.coords(&t)).map(|v| (x, pf.from_fp_vector(&v)))
        })
        .take(TEST_POINTS)
        .collect();
    if pts.len() < 2 {
        return param("too few probe points to filter candidates");
    }
    let elems: Vec<Fe> = field.enumerate().collect();
    let images: Vec<Fe> = elems.iter().map(|&c| emb_fp.apply(c)).collect();
    let mut by_image: HashMap<Fe, Vec<usize>> = HashMap::new();
    for (i, &c) in images.iter().enumerate() {
        by_image.entry(lp.eval(c)).or_default().push(i);
    }
    let ff = field.as_ref();
    // normalized Möbius matrices: first nonzero entry is 1
    let mut mobius = Vec::new();
    for &s in &elems {
        for &u in &elems {
            for &v in &elems {
                for &w in &elems {
                    let m = [s, u, v, w];
                    let first = m.iter().find(|c| !c.is_zero());
                    if first != Some(&ff.one()) || ff.sub(ff.mul(s, w), ff.mul(u, v)).is_zero() {
                        continue;
                    }
                    mobius.push(m);
                }
            }
        }
    }
    let counter = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    let candidates: Vec<YMap> = mobius
        .par_iter()
        .flat_map_iter(|&m| {
            let mut out = Vec::new();
            if over.load(Ordering::Relaxed) {
                return out;
            }
            let mi = m.map(|c| emb_fp.apply(c));
            // x-images on every probe point; a pole or zero rules the map out
            let rhs: Option<Vec<Fe>> = pts
                .iter()
                .map(|&(x, _)| {
                    let xn = pf.div(pf.add(pf.mul(mi[0], x), mi[1]), pf.add(pf.mul(mi[2], x), mi[3]))?;
                    super::y_rhs(pf, ap, xn)
                })
                .collect();
            let Some(rhs) = rhs else { return out };
            for (ie, &e) in images.iter().enumerate().skip(1) {
                if counter.fetch_add(pts.len() as u64, Ordering::Relaxed) > budget {
                    over.store(true, Ordering::Relaxed);
                    return out;
                }
                let ly: Vec<Fe> = pts.iter().map(|&(_, v)| lp.eval(pf.mul(e, v))).collect();
                let want = pf.sub(rhs[0], ly[0]);
                let Some(alphas) = by_image.get(&want) else { continue };
                if (1..pts.len()).all(|k| pf.sub(rhs[k], ly[k]) == want) {
                    for &ia in alphas {
                        out.push(YMap::new(ff, m, elems[ie], elems[ia]));
                    }
                }
            }
            out
        })
        .collect();
    if over.load(Ordering::Relaxed) {
        return Err(Error::Budget { budget });
    }
    let l = y.l().lift(&emb_bf)?;
    let a = emb_bf.apply(y.a());
    let mut maps: Vec<YMap> = candidates.into_par_iter().filter(|g| verify_ymap(&l, a, g).ok).collect();
    maps.sort();
    Ok(YSearchResult { field, embedding: emb_bf, maps, evaluations: counter.load(Ordering::Relaxed) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::y_curve;

    fn classical_y() -> YCurve {
        let f = make_field(3, 1, 0).unwrap();
        let l = LinearizedPoly::from_ints(1, f.clone(), &[-1, 1]).unwrap();
        y_curve(&l, f.one()).unwrap()
    }

    #[test]
    fn group_of_order_twelve() {
        let g = y_aut_group(&classical_y()).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.all_ok(), "{:?}", g.relations);
    }

    #[test]
    fn non_automorphisms_fail() {
        let y = classical_y();
        let f = y.field().clone();
        // y -> y + 1 is fine, x -> x + 1 is not
        assert!(verify_ymap(y.l(), y.a(), &YMap::tau(&f, f.one())).ok);
        let shift = YMap::new(&f, [f.one(), f.one(), f.zero(), f.one()], f.one(), f.zero());
        assert!(!verify_ymap(y.l(), y.a(), &shift).ok);
    }

    #[test]
    fn mu_fixes_exactly_2q_places() {
        let w = weierstrass_places(&classical_y()).unwrap();
        assert_eq!(w.places.len(), 6);
        assert!(w.all_fixed_by_mu && w.mu_is_involution);
        assert_eq!(w.fixed_by_scan, 6);
        assert_eq!(w.plus_locus_places, 6);
        assert_eq!(w.plus_locus_fixed, 0);
    }

    #[test]
    fn search_matches_group() {
        let y = classical_y();
        for d in [1, 2] {
            let r = y_aut_search(&y, d, crate::autgroup::DEFAULT_BUDGET).unwrap();
            assert_eq!(r.maps.len(), 12);
            let g = y_aut_group_in(&y, &r.embedding).unwrap();
            assert_eq!(r.maps, g.elements);
            assert!(r.maps.contains(&YMap::identity(&r.field)));
        }
    }
}
