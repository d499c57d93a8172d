//! Brute-force search for affine-linear automorphisms over GF(p^D). It does
//! not assume the shape of the group, so it serves as an oracle for the
//! claimed groups.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{verify_affine, AffineMap};
use crate::curve::AMCurve;
use crate::error::{param, Error, Result};
use crate::gf::{embed, make_field, Embedding, Fe, FieldRef};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

const TEST_POINTS: usize = 40;
const PROBE_MIN_ORDER: u64 = 200;

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub field: FieldRef,
    /// Coefficient field -> search field, for comparing with a claimed group.
    pub embedding: Embedding,
    pub maps: Vec<AffineMap>,
    pub evaluations: u64,
}

/// All `(x, y) -> (a x + b y + e, c x + d y + f)` over GF(p^D) with
/// `F∘φ = const·F`. Candidates are filtered on curve points over a larger
/// probe field (rational points over GF(p^D) alone can be too few), then
/// confirmed symbolically.
pub fn linear_aut_search(curve: &AMCurve, degree: usize, budget: u64) -> Result<SearchResult> {
    let p = curve.tower().p;
    let field = make_field(p, degree, 0)?;
    let coeff = curve.coeff_field();
    if degree % coeff.degree() != 0 {
        return param(format!(
            "search field GF({p}^{degree}) does not contain the coefficient field GF({p}^{})",
            coeff.degree()
        ));
    }
    let emb_cf = embed(coeff, &field)?;
    let need = crate::linpoly::lcm(curve.ambient().degree(), coeff.degree());
    for l in [curve.l1(), curve.l2()] {
        if l.kernel_in(&emb_cf).is_err() {
            return param(format!(
                "GF({p}^{degree}) does not contain both kernels; search over GF({p}^{need}) or an extension"
            ));
        }
    }
    let mut j = 2;
    while (p as u64).saturating_pow((degree * j) as u32) < PROBE_MIN_ORDER {
        j += 1;
    }
    let probe = make_field(p, degree * j, 0)?;
    let emb_fp = embed(&field, &probe)?;
    let emb_cp = emb_cf.then(&emb_fp)?;
    let (l1p, l2p) = curve.lifted(&emb_cp)?;
    let pts = curve.affine_points_in(&emb_cp, TEST_POINTS)?;
    if pts.len() < 2 {
        return param("too few probe points to filter candidates");
    }

    let elems: Vec<Fe> = field.enumerate().collect();
    let images: Vec<Fe> = elems.iter().map(|&e| emb_fp.apply(e)).collect();
    let pf = probe.as_ref();
    // tc[j][i] = L2(elems[i] x_j), td[j][i] = L2(elems[i] y_j)
    let tc: Vec<Vec<Fe>> = pts.iter().map(|(x, _)| images.iter().map(|&c| l2p.eval(pf.mul(c, *x))).collect()).collect();
    let td: Vec<Vec<Fe>> = pts.iter().map(|(_, y)| images.iter().map(|&d| l2p.eval(pf.mul(d, *y))).collect()).collect();
    // d grouped by the first difference td[1] - td[0]
    let mut by_diff: HashMap<Fe, Vec<usize>> = HashMap::new();
    for i in 0..elems.len() {
        by_diff.entry(pf.sub(td[1][i], td[0][i])).or_default().push(i);
    }
    let mut by_image: HashMap<Fe, Vec<usize>> = HashMap::new();
    for (i, &e) in images.iter().enumerate() {
        by_image.entry(l2p.eval(e)).or_default().push(i);
    }

    let counter = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    let charge = |k: u64| {
        if counter.fetch_add(k, Ordering::Relaxed) + k > budget {
            over.store(true, Ordering::Relaxed);
        }
        !over.load(Ordering::Relaxed)
    };
    let nf = elems.len();
    let candidates: Vec<AffineMap> = (0..nf)
        .into_par_iter()
        .flat_map_iter(|ia| {
            let mut out = Vec::new();
            for ib in 0..nf {
                if ia == 0 && ib == 0 {
                    continue;
                }
                for ie in 0..nf {
                    if !charge(pts.len() as u64) {
                        return out;
                    }
                    let (a, b, e) = (images[ia], images[ib], images[ie]);
                    let w: Option<Vec<Fe>> =
                        pts.iter().map(|&(x, y)| pf.inv(l1p.eval(pf.add(pf.add(pf.mul(a, x), pf.mul(b, y)), e)))).collect();
                    let Some(w) = w else { continue };
                    let dw = pf.sub(w[1], w[0]);
                    for ic in 0..nf {
                        let want = pf.sub(dw, pf.sub(tc[1][ic], tc[0][ic]));
                        let Some(ds) = by_diff.get(&want) else { continue };
                        for &id in ds {
                            if !charge(1) {
                                return out;
                            }
                            let base = pf.add(tc[0][ic], td[0][id]);
                            let fits = (2..pts.len()).all(|jj| pf.sub(pf.add(tc[jj][ic], td[jj][id]), base) == pf.sub(w[jj], w[0]));
                            if !fits {
                                continue;
                            }
                            let Some(fs) = by_image.get(&pf.sub(w[0], base)) else { continue };
                            for &iff in fs {
                                out.push(AffineMap {
                                    xx: elems[ia],
                                    xy: elems[ib],
                                    x0: elems[ie],
                                    yx: elems[ic],
                                    yy: elems[id],
                                    y0: elems[iff],
                                });
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    if over.load(Ordering::Relaxed) {
        return Err(Error::Budget { budget });
    }
    let (l1, l2) = curve.lifted(&emb_cf)?;
    let mut maps: Vec<AffineMap> = candidates
        .into_par_iter()
        .filter(|m| !m.det(&field).is_zero() && verify_affine(&l1, &l2, m).ok)
        .collect();
    maps.sort();
    Ok(SearchResult { field, embedding: emb_cf, maps, evaluations: counter.load(Ordering::Relaxed) })
}
