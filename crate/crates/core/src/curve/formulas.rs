//! Genus and p-rank formula engines: Riemann-Hurwitz with differents from
//! ramification filtrations, Deuring-Shafarevich, and the Nakajima bound.

use serde::Serialize;

use crate::error::{inconsistency, param, Result};

/// `count` places sharing the lower ramification filtration
/// `|G_P^(0)|, |G_P^(1)|, ...` (trailing ones may be omitted).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamifiedPlaces {
    pub count: u64,
    pub filtration: Vec<u64>,
}

impl RamifiedPlaces {
    /// d_P = sum_i (|G_P^(i)| - 1).
    pub fn different_exponent(&self) -> u64 {
        self.filtration.iter().map(|&g| g.saturating_sub(1)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationProfile {
    pub group_order: u64,
    pub base_genus: u64,
    pub places: Vec<RamifiedPlaces>,
}

impl RamificationProfile {
    /// The cover K(x,y)/K(x) of an AM curve: q places (the zeros of L1)
    /// each totally and wildly ramified with G^(1) = G, G^(2) = 1.
    pub fn am_cover(q: u64) -> Self {
        RamificationProfile {
            group_order: q,
            base_genus: 0,
            places: vec![RamifiedPlaces { count: q, filtration: vec![q, q, 1] }],
        }
    }

    pub fn different_degree(&self) -> u64 {
        self.places.iter().map(|pl| pl.count * pl.different_exponent()).sum()
    }

    pub fn genus(&self) -> Result<u64> {
        for pl in &self.places {
            if pl.filtration.first().is_some_and(|&g0| g0 > self.group_order || self.group_order % g0 != 0) {
                return param(format!("inertia order {:?} does not divide |G| = {}", pl.filtration, self.group_order));
            }
            if pl.filtration.windows(2).any(|w| w[1] > w[0] || w[0] % w[1] != 0) {
                return param(format!("filtration {:?} is not a decreasing chain of subgroups", pl.filtration));
            }
        }
        riemann_hurwitz(self.group_order, self.base_genus, self.different_degree())
    }
}

/// g from 2g - 2 = |G| (2 ḡ - 2) + deg(Diff).
pub fn riemann_hurwitz(group_order: u64, base_genus: u64, different_sum: u64) -> Result<u64> {
    let twice = group_order as i128 * (2 * base_genus as i128 - 2) + different_sum as i128 + 2;
    if twice < 0 || twice % 2 != 0 {
        return inconsistency(format!(
            "Riemann-Hurwitz gives 2g = {twice} for |G| = {group_order}, ḡ = {base_genus}, different {different_sum}"
        ));
    }
    Ok((twice / 2) as u64)
}

/// γ = 1 + |G| (γ̄ - 1) + sum (|G| - ℓ_i) for a p-group G.
pub fn deuring_shafarevich(group_order: u64, base_prank: u64, short_orbits: &[u64]) -> Result<u64> {
    if group_order == 0 {
        return param("group order must be positive");
    }
    for &l in short_orbits {
        if l == 0 || group_order % l != 0 {
            return param(format!("short orbit length {l} does not divide |G| = {group_order}"));
        }
    }
    let g = group_order as i128;
    let gamma = 1 + g * (base_prank as i128 - 1) + short_orbits.iter().map(|&l| g - l as i128).sum::<i128>();
    if gamma < 0 {
        return inconsistency(format!("Deuring-Shafarevich gives negative p-rank {gamma}"));
    }
    Ok(gamma as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NakajimaCheck {
    /// |H| for the p-subgroup tested (q^2 for Σ).
    pub subgroup_order: u64,
    pub p: u32,
    pub genus: u64,
    pub holds: bool,
    pub tight: bool,
}

/// For an ordinary curve of genus g >= 2 and a p-subgroup H of Aut:
/// |H| <= p/(p-2) (g-1). Compared as |H| (p-2) <= p (g-1).
pub fn nakajima_check(p: u32, subgroup_order: u64, genus: u64) -> Result<NakajimaCheck> {
    if p <= 2 {
        return param("the bound needs p > 2");
    }
    if genus < 2 {
        return param("the bound needs genus at least 2");
    }
    let lhs = subgroup_order as u128 * (p as u128 - 2);
    let rhs = p as u128 * (genus as u128 - 1);
    Ok(NakajimaCheck { subgroup_order, p, genus, holds: lhs <= rhs, tight: lhs == rhs })
}
