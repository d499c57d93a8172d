use std::collections::BTreeSet;

use serde::Serialize;

use super::{AutGroup, AutMap};
use crate::error::{inconsistency, Result};
use crate::gf::{Fe, FiniteField};

/// Places at infinity. `XEquals(α)` is the pole of y above x = α (α a root
/// of L1); `YEquals(β)` the pole of x above y = β.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceLabel {
    XEquals(Fe),
    YEquals(Fe),
}

impl PlaceLabel {
    fn act(self, f: &FiniteField, g: &AutMap) -> PlaceLabel {
        // only the linear-in-one-variable part of g matters at a pole
        let li = f.inv(g.lambda).expect("λ is nonzero");
        match (self, g.swap) {
            (PlaceLabel::XEquals(a), false) => PlaceLabel::XEquals(f.add(f.mul(g.lambda, a), g.alpha)),
            (PlaceLabel::YEquals(b), false) => PlaceLabel::YEquals(f.add(f.mul(li, b), g.beta)),
            (PlaceLabel::XEquals(a), true) => PlaceLabel::YEquals(f.add(f.mul(li, a), g.beta)),
            (PlaceLabel::YEquals(b), true) => PlaceLabel::XEquals(f.add(f.mul(g.lambda, b), g.alpha)),
        }
    }

    pub fn describe(&self, f: &FiniteField) -> String {
        match self {
            PlaceLabel::XEquals(a) => format!("P(x={:?})", f.coords(a)),
            PlaceLabel::YEquals(b) => format!("P(y={:?})", f.coords(b)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub places: Vec<PlaceLabel>,
    /// Stabilizer in Σ of the first place.
    pub stabilizer: Vec<AutMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitData {
    pub orbit_lengths: Vec<usize>,
    pub stabilizer_orders: Vec<usize>,
    /// M1 = stabilizer of the y-poles (translations in y only) and M2 the
    /// other one; both of order q, distinct, meeting trivially.
    pub stabilizers_distinct: bool,
    pub stabilizers_meet_trivially: bool,
    pub orbit_stabilizer_ok: bool,
}

/// Σ-orbits on the 2q places at infinity, with stabilizers, checked
/// against the expected shape: two orbits of length q.
pub fn sigma_orbits(g: &AutGroup) -> Result<(Vec<Orbit>, OrbitData)> {
    let f = g.field().as_ref();
    let sigma = g.sigma();
    let mut remaining: BTreeSet<PlaceLabel> = g
        .kernel1()
        .iter()
        .map(|&a| PlaceLabel::XEquals(a))
        .chain(g.kernel2().iter().map(|&b| PlaceLabel::YEquals(b)))
        .collect();
    let mut orbits = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let places: BTreeSet<PlaceLabel> = sigma.iter().map(|s| start.act(f, s)).collect();
        for pl in &places {
            if !remaining.remove(pl) {
                return inconsistency(format!("Σ moves {} outside the places at infinity", start.describe(f)));
            }
        }
        let stabilizer: Vec<AutMap> = sigma.iter().copied().filter(|s| start.act(f, s) == start).collect();
        orbits.push(Orbit { places: places.into_iter().collect(), stabilizer });
    }
    let q = g.q() as usize;
    let orbit_lengths: Vec<usize> = orbits.iter().map(|o| o.places.len()).collect();
    let stabilizer_orders: Vec<usize> = orbits.iter().map(|o| o.stabilizer.len()).collect();
    let orbit_stabilizer_ok = orbits.iter().all(|o| o.places.len() * o.stabilizer.len() == sigma.len());
    let (distinct, trivial) = match orbits.as_slice() {
        [a, b] => {
            let shared = a.stabilizer.iter().filter(|s| b.stabilizer.contains(s)).count();
            (a.stabilizer != b.stabilizer, shared == 1)
        }
        _ => (false, false),
    };
    let data = OrbitData {
        orbit_lengths,
        stabilizer_orders,
        stabilizers_distinct: distinct,
        stabilizers_meet_trivially: trivial,
        orbit_stabilizer_ok,
    };
    let shape_ok = data.orbit_lengths == [q, q] && data.stabilizer_orders == [q, q];
    if !(shape_ok && distinct && trivial && orbit_stabilizer_ok) {
        return inconsistency(format!("unexpected Σ-orbit structure at infinity: {data:?}"));
    }
    Ok((orbits, data))
}
