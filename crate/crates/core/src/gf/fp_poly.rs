//! Dense polynomials over a prime field, coefficients stored lowest degree
//! first. Only what field construction and inversion need.

pub(crate) fn inv_mod_p(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i64) as u32
}

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = (acc[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = acc.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `m`.
pub(crate) fn divrem(a: &[u32], m: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let dm = degree(m).expect("division by zero polynomial");
    let lead_inv = inv_mod_p(m[dm], p) as u64;
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    if r.len() <= dm {
        return (Vec::new(), r);
    }
    let mut q = vec![0u32; r.len() - dm];
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = (r[dr] as u64 * lead_inv % p as u64) as u32;
        let shift = dr - dm;
        q[shift] = c;
        for (j, &mj) in m[..=dm].iter().enumerate() {
            let t = (c as u64 * mj as u64 % p as u64) as u32;
            r[shift + j] = (r[shift + j] + p - t) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    divrem(a, m, p).1
}

pub(crate) fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn powmod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(&result, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        exp >>= 1;
    }
    result
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let li = inv_mod_p(lead, p) as u64;
        for c in x.iter_mut() {
            *c = (*c as u64 * li % p as u64) as u32;
        }
    }
    x
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn inverse_mod(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
    let mut r0 = m.to_vec();
    let mut r1 = rem(a, m, p);
    trim(&mut r0);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; invertible exactly when it is a nonzero constant
    if r0.len() != 1 {
        return None;
    }
    let ci = inv_mod_p(r0[0], p) as u64;
    let mut out: Vec<u32> = s0.iter().map(|&c| (c as u64 * ci % p as u64) as u32).collect();
    out = rem(&out, m, p);
    Some(out)
}

/// Ben-Or style irreducibility test for a monic `f` of degree `d`:
/// gcd(T^(p^k) - T, f) = 1 for every k <= d/2, and T^(p^d) = T mod f.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let t = vec![0, 1];
    let mut h = rem(&t, f, p);
    for k in 1..=d {
        h = powmod(&h, p as u64, f, p);
        if k <= d / 2 {
            let g = gcd(&sub(&h, &t, p), f, p);
            if g.len() > 1 {
                return false;
            }
        }
    }
    h == rem(&t, f, p)
}
