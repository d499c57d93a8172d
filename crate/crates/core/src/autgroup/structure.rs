use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{AutGroup, AutMap, GroupKind};

#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub sigma_order: usize,
    pub complement_order: usize,
    pub structure: Vec<String>,
    pub relations: Vec<Relation>,
}

impl StructureReport {
    pub fn all_ok(&self) -> bool {
        self.relations.iter().all(|r| r.ok)
    }
}

fn rel(out: &mut Vec<Relation>, lhs: impl Into<String>, rhs: impl Into<String>, ok: bool) {
    out.push(Relation { lhs: lhs.into(), rhs: rhs.into(), ok });
}

/// Exhaustive certificate: group axioms, Σ elementary abelian, normal and
/// Sylow, the complement cyclic or dihedral, and G = Σ·complement with
/// trivial intersection.
pub fn structure_report(g: &AutGroup) -> StructureReport {
    let f = g.field().as_ref();
    let id = AutMap::identity(f);
    let p = g.p() as u64;
    let mut relations = Vec::new();
    let mut tags = Vec::new();
    let set: HashSet<AutMap> = g.elements().iter().copied().collect();

    let closed = g
        .elements()
        .par_iter()
        .all(|a| g.elements().iter().all(|b| set.contains(&a.compose(f, b))));
    rel(&mut relations, "G·G", "G", closed);
    rel(&mut relations, "1", "∈ G", set.contains(&id));
    let inverses = g.elements().iter().all(|a| set.contains(&a.inverse(f)));
    rel(&mut relations, "g⁻¹", "∈ G for all g", inverses);

    let sigma = g.sigma();
    let q2 = (g.q() * g.q()) as usize;
    rel(&mut relations, "|Σ|", format!("q² = {q2}"), sigma.len() == q2);
    let exponent_p = sigma.iter().all(|s| *s == id || s.order(f) == p);
    let abelian = sigma
        .par_iter()
        .all(|a| sigma.iter().all(|b| a.compose(f, b) == b.compose(f, a)));
    rel(&mut relations, "τ^p", "1 for all τ in Σ", exponent_p);
    rel(&mut relations, "τ τ'", "τ' τ for all τ, τ' in Σ", abelian);
    if exponent_p && abelian {
        tags.push(format!("Sigma: elementary abelian of order {}", sigma.len()));
    }
    let sigma_set: HashSet<AutMap> = sigma.iter().copied().collect();
    let normal = g
        .elements()
        .par_iter()
        .all(|x| sigma.iter().all(|s| sigma_set.contains(&x.compose(f, s).compose(f, &x.inverse(f)))));
    rel(&mut relations, "g Σ g⁻¹", "Σ for all g in G", normal);
    if normal {
        tags.push("Sigma: normal".into());
    }
    let index = g.order() as u64 / sigma.len().max(1) as u64;
    let sylow = g.order() % sigma.len().max(1) == 0 && index % p != 0;
    rel(&mut relations, "[G : Σ]", format!("prime to p = {p}"), sylow);
    if sylow {
        tags.push("Sigma: Sylow p-subgroup".into());
    }

    // complement: the maps fixing the origin, generated by θ (and ξ)
    let theta = AutMap::theta(f, g.lambda());
    let m = g.qbar() - 1;
    let theta_order = theta.order(f);
    rel(&mut relations, format!("θ^{m}"), "1", theta.pow(f, m) == id);
    rel(&mut relations, "ord θ", format!("q̄ - 1 = {m}"), theta_order == m);
    let complement: Vec<AutMap> = g.elements().iter().copied().filter(|x| x.alpha.is_zero() && x.beta.is_zero()).collect();
    let expected_complement = match g.kind() {
        GroupKind::SigmaDelta => 2 * m as usize,
        GroupKind::SigmaGamma => m as usize,
    };
    rel(&mut relations, "|complement|", expected_complement.to_string(), complement.len() == expected_complement);
    match g.kind() {
        GroupKind::SigmaGamma => {
            if theta_order == m {
                tags.push(format!("Gamma: cyclic of order {m}"));
            }
        }
        GroupKind::SigmaDelta => {
            let xi = AutMap::xi(f);
            let xi2 = xi.compose(f, &xi) == id;
            let inv = xi.compose(f, &theta).compose(f, &xi) == theta.inverse(f);
            rel(&mut relations, "ξ²", "1", xi2);
            rel(&mut relations, "ξθξ", "θ⁻¹", inv);
            if xi2 && inv && theta_order == m {
                tags.push(format!("Delta: dihedral of order {}", 2 * m));
            }
        }
    }
    let meet = complement.iter().filter(|x| sigma_set.contains(x)).count();
    rel(&mut relations, "Σ ∩ complement", "{1}", meet == 1);
    let products: HashSet<AutMap> = sigma
        .iter()
        .flat_map(|s| complement.iter().map(move |d| (*s, *d)))
        .map(|(s, d)| s.compose(f, &d))
        .collect();
    let bijective = products.len() == sigma.len() * complement.len() && products.len() == g.order();
    rel(&mut relations, "Σ × complement -> G", "bijective", bijective);

    // semidirect action on generators
    let lam = g.lambda();
    let lam_inv = f.inv(lam).expect("λ is nonzero");
    for (name, t) in g.generators().iter().filter(|(_, t)| t.is_translation(f)) {
        let c = theta.compose(f, t).compose(f, &theta.inverse(f));
        let want = AutMap::tau(f, f.mul(lam, t.alpha), f.mul(lam_inv, t.beta));
        rel(&mut relations, format!("θ {name} θ⁻¹"), "τ_{λα, λ⁻¹β}", c == want);
        if g.kind() == GroupKind::SigmaDelta {
            let xi = AutMap::xi(f);
            let c = xi.compose(f, t).compose(f, &xi);
            rel(&mut relations, format!("ξ {name} ξ"), "τ_{β, α}", c == AutMap::tau(f, t.beta, t.alpha));
        }
    }
    if closed && normal && bijective && meet == 1 {
        tags.push(match g.kind() {
            GroupKind::SigmaDelta => "semidirect: Sigma ⋊ Delta".into(),
            GroupKind::SigmaGamma => "semidirect: Sigma ⋊ Gamma".into(),
        });
    }
    StructureReport {
        order: g.order(),
        sigma_order: sigma.len(),
        complement_order: complement.len(),
        structure: tags,
        relations,
    }
}
