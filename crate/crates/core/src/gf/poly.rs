//! Univariate polynomials over a `FiniteField`, lowest degree first. Only
//! root finding is needed (embeddings), via Cantor-Zassenhaus.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Fe, FiniteField};

fn trim(a: &mut Vec<Fe>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn mul(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fe::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

fn divrem(f: &FiniteField, a: &[Fe], m: &[Fe]) -> (Vec<Fe>, Vec<Fe>) {
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]).expect("divisor must be trimmed");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= dm {
        return (Vec::new(), r);
    }
    let mut q = vec![Fe::ZERO; r.len() - dm];
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - dm;
        q[shift] = c;
        for (j, &mj) in m.iter().enumerate() {
            r[shift + j] = f.sub(r[shift + j], f.mul(c, mj));
        }
        trim(&mut r);
    }
    (q, r)
}

fn rem(f: &FiniteField, a: &[Fe], m: &[Fe]) -> Vec<Fe> {
    divrem(f, a, m).1
}

fn powmod(f: &FiniteField, base: &[Fe], mut exp: u64, m: &[Fe]) -> Vec<Fe> {
    let mut result = rem(f, &[f.one()], m);
    let mut b = rem(f, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            result = rem(f, &mul(f, &result, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        exp >>= 1;
    }
    result
}

fn monic(f: &FiniteField, a: &mut [Fe]) {
    if let Some(&lead) = a.last() {
        let li = f.inv(lead).expect("trimmed");
        for c in a.iter_mut() {
            *c = f.mul(*c, li);
        }
    }
}

fn gcd(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &mut x);
    x
}

fn sub(f: &FiniteField, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let n = a.len().max(b.len());
    let mut out: Vec<Fe> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(Fe::ZERO);
            let y = b.get(i).copied().unwrap_or(Fe::ZERO);
            f.sub(x, y)
        })
        .collect();
    trim(&mut out);
    out
}

/// Distinct roots of `poly` lying in `field`, sorted.
pub(crate) fn roots(field: &FiniteField, poly: &[Fe]) -> Vec<Fe> {
    let mut g = poly.to_vec();
    trim(&mut g);
    if g.len() <= 1 {
        return Vec::new();
    }
    monic(field, &mut g);
    // T^Q mod g by d successive p-th powers
    let t = vec![Fe::ZERO, field.one()];
    let mut h = rem(field, &t, &g);
    for _ in 0..field.degree() {
        h = powmod(field, &h, field.characteristic() as u64, &g);
    }
    let split = gcd(field, &g, &sub(field, &h, &t));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    split_linear(field, split, &mut rng, &mut out);
    out.sort();
    out
}

fn split_linear(field: &FiniteField, g: Vec<Fe>, rng: &mut ChaCha8Rng, out: &mut Vec<Fe>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(field.neg(g[0])),
        _ => {
            let exp = (field.order() - 1) / 2;
            loop {
                let r = field.random(rng);
                let w = powmod(field, &[r, field.one()], exp, &g);
                let d = gcd(field, &g, &sub(field, &w, &[field.one()]));
                if d.len() > 1 && d.len() < g.len() {
                    let (other, _) = divrem(field, &g, &d);
                    let mut other = other;
                    monic(field, &mut other);
                    split_linear(field, d, rng, out);
                    split_linear(field, other, rng, out);
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn roots_match_exhaustive_scan() {
        let f = make_field(5, 2, 3).unwrap();
        // (T - a)(T - b)(T^2 + c) with random-ish a, b, c
        let a = f.from_index(7);
        let b = f.from_index(19);
        let c = f.from_index(11);
        let poly = mul(&f, &mul(&f, &[f.neg(a), f.one()], &[f.neg(b), f.one()]), &[c, Fe::ZERO, f.one()]);
        let eval = |x: Fe| poly.iter().rev().fold(Fe::ZERO, |acc, &co| f.add(f.mul(acc, x), co));
        let mut expected: Vec<Fe> = f.enumerate().filter(|&x| eval(x).is_zero()).collect();
        expected.sort();
        assert_eq!(roots(&f, &poly), expected);
    }

    #[test]
    fn no_roots_for_irreducible() {
        let f = make_field(3, 1, 0).unwrap();
        // T^2 + 1 over GF(3)
        assert!(roots(&f, &[f.one(), Fe::ZERO, f.one()]).is_empty());
    }
}
