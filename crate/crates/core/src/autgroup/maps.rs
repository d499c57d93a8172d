use serde::Serialize;

use crate::bipoly::BiPoly;
use crate::gf::{Fe, FiniteField};
use crate::linpoly::LinearizedPoly;

/// `(x, y) -> (λ u + α, λ⁻¹ v + β)` with `(u, v) = (x, y)`, or `(y, x)` when
/// `swap` is set. Covers τ_{α,β}, θ, ξ and all their products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutMap {
    pub swap: bool,
    pub lambda: Fe,
    pub alpha: Fe,
    pub beta: Fe,
}

impl AutMap {
    pub fn identity(f: &FiniteField) -> Self {
        AutMap { swap: false, lambda: f.one(), alpha: f.zero(), beta: f.zero() }
    }

    pub fn tau(f: &FiniteField, alpha: Fe, beta: Fe) -> Self {
        AutMap { swap: false, lambda: f.one(), alpha, beta }
    }

    pub fn theta(f: &FiniteField, lambda: Fe) -> Self {
        AutMap { swap: false, lambda, alpha: f.zero(), beta: f.zero() }
    }

    pub fn xi(f: &FiniteField) -> Self {
        AutMap { swap: true, ..Self::identity(f) }
    }

    pub fn is_translation(&self, f: &FiniteField) -> bool {
        !self.swap && self.lambda == f.one()
    }

    pub fn apply(&self, f: &FiniteField, x: Fe, y: Fe) -> (Fe, Fe) {
        let (u, v) = if self.swap { (y, x) } else { (x, y) };
        let li = f.inv(self.lambda).expect("λ is nonzero");
        (f.add(f.mul(self.lambda, u), self.alpha), f.add(f.mul(li, v), self.beta))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, f: &FiniteField, other: &AutMap) -> AutMap {
        let l1 = self.lambda;
        let l1i = f.inv(l1).expect("λ is nonzero");
        if self.swap {
            let l2i = f.inv(other.lambda).expect("λ is nonzero");
            AutMap {
                swap: !other.swap,
                lambda: f.mul(l1, l2i),
                alpha: f.add(f.mul(l1, other.beta), self.alpha),
                beta: f.add(f.mul(l1i, other.alpha), self.beta),
            }
        } else {
            AutMap {
                swap: other.swap,
                lambda: f.mul(l1, other.lambda),
                alpha: f.add(f.mul(l1, other.alpha), self.alpha),
                beta: f.add(f.mul(l1i, other.beta), self.beta),
            }
        }
    }

    pub fn inverse(&self, f: &FiniteField) -> AutMap {
        let l = self.lambda;
        let li = f.inv(l).expect("λ is nonzero");
        if self.swap {
            AutMap { swap: true, lambda: l, alpha: f.neg(f.mul(l, self.beta)), beta: f.neg(f.mul(li, self.alpha)) }
        } else {
            AutMap { swap: false, lambda: li, alpha: f.neg(f.mul(li, self.alpha)), beta: f.neg(f.mul(l, self.beta)) }
        }
    }

    pub fn pow(&self, f: &FiniteField, k: u64) -> AutMap {
        (0..k).fold(AutMap::identity(f), |acc, _| acc.compose(f, self))
    }

    pub fn order(&self, f: &FiniteField) -> u64 {
        let id = AutMap::identity(f);
        let mut acc = *self;
        let mut k = 1;
        while acc != id {
            acc = acc.compose(f, self);
            k += 1;
        }
        k
    }

    pub fn to_affine(&self, f: &FiniteField) -> AffineMap {
        let li = f.inv(self.lambda).expect("λ is nonzero");
        let z = f.zero();
        if self.swap {
            AffineMap { xx: z, xy: self.lambda, x0: self.alpha, yx: li, yy: z, y0: self.beta }
        } else {
            AffineMap { xx: self.lambda, xy: z, x0: self.alpha, yx: z, yy: li, y0: self.beta }
        }
    }
}

/// `(x, y) -> (xx x + xy y + x0, yx x + yy y + y0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    pub xx: Fe,
    pub xy: Fe,
    pub x0: Fe,
    pub yx: Fe,
    pub yy: Fe,
    pub y0: Fe,
}

impl AffineMap {
    pub fn det(&self, f: &FiniteField) -> Fe {
        f.sub(f.mul(self.xx, self.yy), f.mul(self.xy, self.yx))
    }

    pub fn apply(&self, f: &FiniteField, x: Fe, y: Fe) -> (Fe, Fe) {
        (
            f.add(f.add(f.mul(self.xx, x), f.mul(self.xy, y)), self.x0),
            f.add(f.add(f.mul(self.yx, x), f.mul(self.yy, y)), self.y0),
        )
    }

    /// Swap-shaped: x' depends only on y and y' only on x.
    pub fn is_swap_shape(&self) -> bool {
        self.xx.is_zero() && self.yy.is_zero()
    }

    /// Back to structured form when the map has the (λ, λ⁻¹) shape.
    pub fn to_aut_map(&self, f: &FiniteField) -> Option<AutMap> {
        let one = f.one();
        if self.xy.is_zero() && self.yx.is_zero() && !self.xx.is_zero() && f.mul(self.xx, self.yy) == one {
            return Some(AutMap { swap: false, lambda: self.xx, alpha: self.x0, beta: self.y0 });
        }
        if self.is_swap_shape() && !self.xy.is_zero() && f.mul(self.xy, self.yx) == one {
            return Some(AutMap { swap: true, lambda: self.xy, alpha: self.x0, beta: self.y0 });
        }
        None
    }

    pub fn compose(&self, f: &FiniteField, o: &AffineMap) -> AffineMap {
        let lin = |a: Fe, b: Fe, c: Fe, d: Fe| f.add(f.mul(a, b), f.mul(c, d));
        AffineMap {
            xx: lin(self.xx, o.xx, self.xy, o.yx),
            xy: lin(self.xx, o.xy, self.xy, o.yy),
            x0: f.add(lin(self.xx, o.x0, self.xy, o.y0), self.x0),
            yx: lin(self.yx, o.xx, self.yy, o.yx),
            yy: lin(self.yx, o.xy, self.yy, o.yy),
            y0: f.add(lin(self.yx, o.x0, self.yy, o.y0), self.y0),
        }
    }
}

/// Outcome of a symbolic substitution check `F ∘ φ = c F`.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub ok: bool,
    /// The constant c, as coordinates, when F ∘ φ is proportional to F.
    pub scale: Option<Vec<u32>>,
    pub transcript: Vec<String>,
    pub mismatch: Option<String>,
}

/// Expands `L1(φ_x) L2(φ_y) - 1` and compares it with `c (L1(X) L2(Y) - 1)`.
/// Both polynomials must already live in the field of the map's entries.
pub fn verify_affine(l1: &LinearizedPoly, l2: &LinearizedPoly, m: &AffineMap) -> Verification {
    let f = l1.field();
    let mut transcript = Vec::new();
    if m.det(f).is_zero() {
        return Verification {
            ok: false,
            scale: None,
            transcript,
            mismatch: Some("linear part is singular".into()),
        };
    }
    let one = BiPoly::constant(f.clone(), f.one());
    let base = l1
        .substitute_linear(f.one(), f.zero(), f.zero())
        .mul(&l2.substitute_linear(f.zero(), f.one(), f.zero()))
        .sub(&one);
    let px = l1.substitute_linear(m.xx, m.xy, m.x0);
    let py = l2.substitute_linear(m.yx, m.yy, m.y0);
    transcript.push(format!("L1(φ_x) expands to {} terms, L2(φ_y) to {}", px.len(), py.len()));
    let image = px.mul(&py).sub(&one);
    transcript.push(format!("F∘φ has {} terms, F has {}", image.len(), base.len()));
    match image.proportional_to(&base) {
        Some(c) => {
            transcript.push(format!("F∘φ = c·F with c = {:?}", f.coords(&c)));
            Verification { ok: true, scale: Some(f.coords(&c)), transcript, mismatch: None }
        }
        None => {
            let mismatch = image.first_difference(&base).map(|((i, j), a, b)| {
                format!("coefficient of X^{i} Y^{j}: {:?} vs {:?} in F", f.coords(&a), f.coords(&b))
            });
            Verification { ok: false, scale: None, transcript, mismatch }
        }
    }
}
