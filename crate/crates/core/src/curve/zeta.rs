//! L-polynomial from point counts, the independent genus / p-rank oracle.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::CountableCurve;
use crate::error::{inconsistency, Error, Result};

/// Counting N_{2g} over GF(Q0^(2g)) is the bottleneck; beyond g = 4 it is
/// out of reach for value tables.
pub const MAX_ZETA_GENUS: u64 = 4;

const WEIL_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct WeilCheck {
    /// max over reciprocal roots of ||z| - sqrt(Q0)|
    pub max_deviation: f64,
    pub distinct_roots: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaData {
    pub q0: u64,
    pub p: u32,
    pub genus: u64,
    /// N_1, ..., N_{2g}
    pub counts: Vec<u64>,
    /// c_0 = 1, ..., c_{2g}
    pub l_poly: Vec<i128>,
    pub p_rank: u64,
    pub weil: WeilCheck,
}

/// Counts N_1..N_{2g}, recovers L(T) = sum c_k T^k by Newton's identities
/// from S_k = Q0^k + 1 - N_k, and checks the functional equation.
pub fn l_polynomial(curve: &dyn CountableCurve) -> Result<ZetaData> {
    let g = curve.genus()?;
    if g > MAX_ZETA_GENUS {
        return Err(Error::DeskScaleLimit(format!(
            "zeta needs counts over degree-{} extensions at genus {g}; refused above genus {MAX_ZETA_GENUS}",
            2 * g
        )));
    }
    let base = curve.base_field();
    let q0 = base.order();
    let p = base.characteristic();
    let two_g = 2 * g as usize;
    let counts: Vec<u64> = (1..=two_g).map(|k| curve.count_places(k)).collect::<Result<_>>()?;
    let l_poly = newton(q0, &counts)?;
    for i in 0..=g as usize {
        let expect = (q0 as i128).pow((g as usize - i) as u32) * l_poly[i];
        if l_poly[two_g - i] != expect {
            return inconsistency(format!(
                "functional equation fails at c_{}: {} != Q0^{} * c_{i} = {expect} (counts {counts:?})",
                two_g - i,
                l_poly[two_g - i],
                g as usize - i
            ));
        }
    }
    let p_rank = l_poly.iter().rposition(|&c| c.rem_euclid(p as i128) != 0).unwrap_or(0) as u64;
    let weil = weil_check(q0, &l_poly);
    Ok(ZetaData { q0, p, genus: g, counts, l_poly, p_rank, weil })
}

/// k c_k = -sum_{i=1..k} S_i c_{k-i}.
fn newton(q0: u64, counts: &[u64]) -> Result<Vec<i128>> {
    let s: Vec<i128> = counts
        .iter()
        .enumerate()
        .map(|(i, &n)| (q0 as i128).pow(i as u32 + 1) + 1 - n as i128)
        .collect();
    let mut c = vec![1i128];
    for k in 1..=counts.len() {
        let acc: i128 = (1..=k).map(|i| s[i - 1] * c[k - i]).sum();
        if acc % k as i128 != 0 {
            return inconsistency(format!("Newton step {k} is not integral (counts {counts:?})"));
        }
        c.push(-acc / k as i128);
    }
    Ok(c)
}

type QPoly = Vec<BigRational>;

fn trim(a: &mut QPoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn qrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / &b[db];
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &c * bj;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn squarefree_part(a: &QPoly) -> QPoly {
    let deriv: QPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let (mut x, mut y) = (a.clone(), deriv);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = qrem(&x, &y);
        x = std::mem::replace(&mut y, r);
    }
    qrem(a, &x).0
}

/// Durand-Kerner on a polynomial with distinct roots.
fn roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Reciprocal roots of L are the roots of T^{2g} L(1/T).
fn weil_check(q0: u64, l_poly: &[i128]) -> WeilCheck {
    let recip: QPoly = l_poly.iter().rev().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    let sf = squarefree_part(&recip);
    if sf.len() <= 1 {
        return WeilCheck { max_deviation: 0.0, distinct_roots: 0, ok: true };
    }
    let lead = sf.last().unwrap().clone();
    let coeffs: Vec<f64> = sf.iter().map(|c| (c / &lead).to_f64().unwrap_or(f64::NAN)).collect();
    let zs = roots(&coeffs);
    let target = (q0 as f64).sqrt();
    let max_deviation = zs.iter().map(|z| (z.norm() - target).abs()).fold(0.0, f64::max);
    WeilCheck { max_deviation, distinct_roots: zs.len(), ok: max_deviation.is_finite() && max_deviation < WEIL_TOLERANCE }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::AMCurve;

    #[test]
    fn newton_on_an_elliptic_curve() {
        // y^2 = x^3 + x + 1 over GF(5): N_1 = 9, a = -3, N_2 = 25 + 1 - (a^2 - 10) = 27
        let c = newton(5, &[9, 27]).unwrap();
        assert_eq!(c, vec![1, 3, 5]);
        let w = weil_check(5, &c);
        assert!(w.ok, "{w:?}");
    }

    #[test]
    fn classical_curve_is_ordinary() {
        let c = AMCurve::classical(3).unwrap();
        let z = l_polynomial(&c).unwrap();
        assert_eq!(z.l_poly.len(), 9);
        assert_eq!(z.l_poly[0], 1);
        assert_eq!(z.p_rank, 4);
        assert!(z.weil.ok, "{:?}", z.weil);
    }

    #[test]
    fn genus_guard() {
        let c = AMCurve::random(3, 1, 2, 0).unwrap();
        assert!(matches!(l_polynomial(&c), Err(Error::DeskScaleLimit(_))));
    }

    #[test]
    fn squarefree_of_a_square() {
        let q = |v: &[i64]| -> QPoly { v.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect() };
        // (T^2 + 3)^2 = T^4 + 6 T^2 + 9
        let sf = squarefree_part(&q(&[9, 0, 6, 0, 1]));
        assert_eq!(sf.len(), 3);
        // L(T) = (1 + 3T^2)^2, reciprocal roots ±i√3 twice
        let w = weil_check(3, &[1, 0, 6, 0, 9]);
        assert!(w.ok && w.distinct_roots == 2, "{w:?}");
    }
}
