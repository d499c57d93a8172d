//! Automorphism groups Σ⋊Δ and Σ⋊Γ of AM curves: construction, symbolic
//! verification, structural certificates, Σ-orbits at infinity, and a
//! brute-force affine-linear search used as an independent oracle.

mod maps;
mod orbits;
mod search;
mod structure;

use std::collections::HashSet;

use rayon::prelude::*;

use crate::curve::AMCurve;
use crate::error::{inconsistency, Result};
use crate::gf::{Embedding, Fe, FieldRef};

pub use maps::{verify_affine, AffineMap, AutMap, Verification};
pub use orbits::{sigma_orbits, Orbit, OrbitData, PlaceLabel};
pub use search::{linear_aut_search, SearchResult, DEFAULT_BUDGET};
pub use structure::{structure_report, Relation, StructureReport};

/// Symbolic check of `φ` on `c`; the map's entries live in `c.ambient()`.
pub fn verify_automorphism(c: &AMCurve, phi: &AutMap) -> Result<Verification> {
    let (l1, l2) = c.lifted(c.coeff_to_ambient())?;
    Ok(verify_affine(&l1, &l2, &phi.to_affine(c.ambient())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// L1 = L2 up to scaling: Σ⋊Δ with Δ = <θ, ξ> dihedral.
    SigmaDelta,
    /// Σ⋊Γ with Γ = <θ> cyclic.
    SigmaGamma,
}

#[derive(Clone, Debug)]
pub struct AutGroup {
    field: FieldRef,
    kind: GroupKind,
    p: u32,
    q: u64,
    qbar: u64,
    lambda: Fe,
    kernel1: Vec<Fe>,
    kernel2: Vec<Fe>,
    elements: Vec<AutMap>,
    generators: Vec<(String, AutMap)>,
}

impl AutGroup {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[AutMap] {
        &self.elements
    }

    pub fn generators(&self) -> &[(String, AutMap)] {
        &self.generators
    }

    pub fn lambda(&self) -> Fe {
        self.lambda
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn qbar(&self) -> u64 {
        self.qbar
    }

    pub fn kernel1(&self) -> &[Fe] {
        &self.kernel1
    }

    pub fn kernel2(&self) -> &[Fe] {
        &self.kernel2
    }

    pub fn contains(&self, g: &AutMap) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn sigma(&self) -> Vec<AutMap> {
        self.elements.iter().copied().filter(|g| g.is_translation(&self.field)).collect()
    }

    pub fn as_affine_set(&self) -> HashSet<AffineMap> {
        self.elements.iter().map(|g| g.to_affine(&self.field)).collect()
    }
}

/// The predicted group Σ ⋊ Δ (or Σ ⋊ Γ), built in the curve's ambient field.
pub fn claimed_group(c: &AMCurve) -> Result<AutGroup> {
    claimed_group_in(c, c.coeff_to_ambient())
}

/// Same construction inside any field reached by `emb` (coefficient field
/// -> target) that contains both kernels and F_q̄.
pub fn claimed_group_in(c: &AMCurve, emb: &Embedding) -> Result<AutGroup> {
    let f = emb.sup().clone();
    let (l1, l2) = c.lifted(emb)?;
    let k1 = c.l1().kernel_in(emb)?.roots().to_vec();
    let k2 = c.l2().kernel_in(emb)?.roots().to_vec();
    let qbar = c.qbar();
    let lambda = f.primitive_root_of_unity(qbar - 1)?;
    let kind = if c.is_diagonal() { GroupKind::SigmaDelta } else { GroupKind::SigmaGamma };
    let swaps: &[bool] = match kind {
        GroupKind::SigmaDelta => &[false, true],
        GroupKind::SigmaGamma => &[false],
    };
    let powers: Vec<Fe> = (0..qbar - 1).map(|i| f.pow(lambda, i as u128)).collect();
    let mut elements = Vec::with_capacity(swaps.len() * powers.len() * k1.len() * k2.len());
    for &swap in swaps {
        for &l in &powers {
            for &alpha in &k1 {
                for &beta in &k2 {
                    elements.push(AutMap { swap, lambda: l, alpha, beta });
                }
            }
        }
    }
    elements.sort();
    let failed: Vec<(AutMap, Verification)> = elements
        .par_iter()
        .map(|g| (*g, verify_affine(&l1, &l2, &g.to_affine(&f))))
        .filter(|(_, v)| !v.ok)
        .collect();
    if let Some((g, v)) = failed.first() {
        return inconsistency(format!(
            "claimed automorphism {g:?} fails symbolic verification: {}",
            v.mismatch.clone().unwrap_or_default()
        ));
    }
    let mut generators = Vec::new();
    for (i, b) in c.l1().kernel_in(emb)?.fp_basis().iter().enumerate() {
        generators.push((format!("tau_a{i}"), AutMap::tau(&f, *b, f.zero())));
    }
    for (i, b) in c.l2().kernel_in(emb)?.fp_basis().iter().enumerate() {
        generators.push((format!("tau_b{i}"), AutMap::tau(&f, f.zero(), *b)));
    }
    generators.push(("theta".into(), AutMap::theta(&f, lambda)));
    if kind == GroupKind::SigmaDelta {
        generators.push(("xi".into(), AutMap::xi(&f)));
    }
    Ok(AutGroup {
        field: f,
        kind,
        p: c.tower().p,
        q: c.q(),
        qbar,
        lambda,
        kernel1: k1,
        kernel2: k2,
        elements,
        generators,
    })
}
