use rayon::prelude::*;

use super::AMCurve;
use crate::error::{Error, Result};
use crate::gf::{embed, make_field, Embedding, Fe, FieldRef, MAX_DEGREE};
use crate::linpoly::LinearizedPoly;

/// Value tables are `Vec<u32>` over the whole counting field.
pub const MAX_COUNT_ORDER: u64 = 1 << 24;

/// A curve whose rational places over extensions of a base field can be counted.
pub trait CountableCurve: Sync {
    /// GF(Q0), the field the equation is defined over.
    fn base_field(&self) -> &FieldRef;

    fn genus(&self) -> Result<u64>;

    /// Number of GF(Q0^k)-rational places of the nonsingular model.
    fn count_places(&self, k: usize) -> Result<u64>;
}

/// GF(Q0^k) together with the embedding of the base field.
pub(crate) fn counting_field(base: &FieldRef, k: usize) -> Result<(FieldRef, Embedding)> {
    let d = base.degree() * k;
    let p = base.characteristic();
    let too_big = d > MAX_DEGREE || (p as u128).pow(d as u32) > MAX_COUNT_ORDER as u128;
    if k == 0 || too_big {
        return Err(Error::DeskScaleLimit(format!(
            "counting over GF({p}^{d}) exceeds the {MAX_COUNT_ORDER}-element value-table limit"
        )));
    }
    let field = make_field(p, d, 0)?;
    let emb = embed(base, &field)?;
    Ok((field, emb))
}

/// `#{(x, y) in K^2 : L(y) = rhs(x)}`, with `rhs` returning `None` for x
/// values that contribute nothing. `L` must already live in `K`.
///
/// Every y is bucketed by `L(y)` once, then each x costs one lookup.
pub fn count_affine_by_table<F>(field: &FieldRef, l: &LinearizedPoly, rhs: F) -> u64
where
    F: Fn(Fe) -> Option<Fe> + Sync,
{
    assert!(l.field().same_as(field), "polynomial must be lifted into the counting field");
    let order = field.order();
    let m = l.fp_matrix();
    let values: Vec<u64> = (0..order)
        .into_par_iter()
        .map(|i| field.index(&field.apply_matrix(&m, field.from_index(i))))
        .collect();
    let mut table = vec![0u32; order as usize];
    for v in values {
        table[v as usize] += 1;
    }
    (0..order)
        .into_par_iter()
        .map(|i| match rhs(field.from_index(i)) {
            Some(t) => table[field.index(&t) as usize] as u64,
            None => 0,
        })
        .sum()
}

impl CountableCurve for AMCurve {
    fn base_field(&self) -> &FieldRef {
        self.coeff_field()
    }

    fn genus(&self) -> Result<u64> {
        AMCurve::genus(self)
    }

    fn count_places(&self, k: usize) -> Result<u64> {
        self.rational_places(k)
    }
}

impl AMCurve {
    /// Affine solutions of L1(x) L2(y) = 1 over GF(Q0^k), plus the places
    /// at infinity P_{x=α} (α in ker L1) and P_{y=β} (β in ker L2) that
    /// are rational, i.e. whose label lies in GF(Q0^k).
    pub fn rational_places(&self, k: usize) -> Result<u64> {
        let (field, emb) = counting_field(self.coeff_field(), k)?;
        let (l1, l2) = self.lifted(&emb)?;
        let m1 = l1.fp_matrix();
        let affine = count_affine_by_table(&field, &l2, |x| field.inv(field.apply_matrix(&m1, x)));
        Ok(affine + self.l1().kernel_size_in(&emb)? + self.l2().kernel_size_in(&emb)?)
    }

    /// Affine points over the field reached by `emb`; used for test points.
    pub(crate) fn affine_points_in(&self, emb: &Embedding, limit: usize) -> Result<Vec<(Fe, Fe)>> {
        let field = emb.sup();
        let (l1, l2) = self.lifted(emb)?;
        let m2 = l2.fp_matrix();
        let ker: Vec<Fe> = l2.roots_basis();
        let mut out = Vec::new();
        for x in field.enumerate() {
            if out.len() >= limit {
                break;
            }
            let Some(t) = field.inv(l1.eval(x)) else { continue };
            if let Some(v) = m2.solve(&field.coords(&t)) {
                let y = field.from_fp_vector(&v);
                out.push((x, y));
                // one more point on the same fibre when the fibre is visible
                if let Some(&b) = ker.first() {
                    if out.len() < limit {
                        out.push((x, field.add(y, b)));
                    }
                }
            }
        }
        Ok(out)
    }
}
