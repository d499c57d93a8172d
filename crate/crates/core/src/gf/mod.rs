//! Exact arithmetic in GF(p^d), polynomial basis over GF(p).
//!
//! Elements are plain coordinate vectors ([`Fe`]); all arithmetic goes
//! through the owning [`FiniteField`], which is immutable after
//! construction and shared as a [`FieldRef`].

mod embed;
pub(crate) mod fp_poly;
mod linalg;
pub(crate) mod poly;

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{param, Error, Result};

pub use embed::{embed, Embedding};
pub use linalg::FpMatrix;

/// Largest extension degree an ambient field may have.
pub const MAX_DEGREE: usize = 32;
/// Coordinates are stored as `u16`, so the characteristic must fit.
pub const MAX_CHARACTERISTIC: u32 = u16::MAX as u32;
/// Largest field order the toolkit will build (p^d must stay below 2^63).
pub const MAX_ORDER: u64 = 1 << 63;

pub type FieldRef = Arc<FiniteField>;

/// A field element as its coordinate vector `[a_0, ..., a_{d-1}]` in the
/// basis `1, T, ..., T^{d-1}`. Coordinates past the field degree are zero.
///
/// The derived ordering is coordinate-lexicographic with `a_0` most
/// significant, matching [`FiniteField::enumerate`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    coords: [u16; MAX_DEGREE],
}

impl Fe {
    pub const ZERO: Fe = Fe { coords: [0; MAX_DEGREE] };

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn coord(&self, i: usize) -> u32 {
        self.coords[i] as u32
    }

    pub fn coords(&self, degree: usize) -> Vec<u32> {
        self.coords[..degree].iter().map(|&c| c as u32).collect()
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.coords.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        f.debug_list().entries(&self.coords[..last]).finish()
    }
}

pub struct FiniteField {
    p: u32,
    degree: usize,
    seed: u64,
    modulus: Vec<u32>,
    order: u64,
    // T^(d+j) mod modulus for j in 0..d-1
    reduction: Vec<Fe>,
    // (T^i)^p mod modulus for i in 0..d
    frobenius: Vec<Fe>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})[{:?}]", self.p, self.degree, self.modulus)
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn check_characteristic(p: u32) -> Result<()> {
    if p == 2 {
        return param("characteristic 2 is not supported (p must be odd)");
    }
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    if p > MAX_CHARACTERISTIC {
        return param(format!("characteristic {p} exceeds {MAX_CHARACTERISTIC}"));
    }
    Ok(())
}

fn check_size(p: u32, d: usize) -> Result<u64> {
    if d == 0 {
        return param("extension degree must be at least 1");
    }
    if d > MAX_DEGREE {
        return param(format!("extension degree {d} exceeds the supported maximum {MAX_DEGREE}"));
    }
    match (p as u64).checked_pow(d as u32) {
        Some(order) if order < MAX_ORDER => Ok(order),
        _ => param(format!("GF({p}^{d}) is too large")),
    }
}

fn rng_for(p: u32, d: usize, seed: u64) -> ChaCha8Rng {
    let mix = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((p as u64) << 32)
        .wrapping_add(d as u64);
    ChaCha8Rng::seed_from_u64(mix)
}

/// Builds GF(p^d). The modulus is the first irreducible candidate drawn from
/// a PRNG seeded by `(p, d, seed)`; degree 1 always uses the modulus `T`.
pub fn make_field(p: u32, d: usize, seed: u64) -> Result<FieldRef> {
    check_characteristic(p)?;
    check_size(p, d)?;
    let modulus = if d == 1 {
        vec![0, 1]
    } else {
        let mut rng = rng_for(p, d, seed);
        let mut found = None;
        for _ in 0..1_000_000 {
            let mut f: Vec<u32> = (0..d).map(|_| rng.gen_range(0..p)).collect();
            if f[0] == 0 {
                continue;
            }
            f.push(1);
            if fp_poly::is_irreducible(&f, p) {
                found = Some(f);
                break;
            }
        }
        match found {
            Some(f) => f,
            None => return Err(Error::Inconsistency(format!("no irreducible polynomial found for GF({p}^{d})"))),
        }
    };
    FiniteField::with_modulus(p, modulus, seed)
}

impl FiniteField {
    /// Builds a field from an explicit monic irreducible modulus.
    pub fn with_modulus(p: u32, modulus: Vec<u32>, seed: u64) -> Result<FieldRef> {
        check_characteristic(p)?;
        if modulus.len() < 2 {
            return param("modulus must have degree at least 1");
        }
        let d = modulus.len() - 1;
        let order = check_size(p, d)?;
        if modulus.iter().any(|&c| c >= p) {
            return param("modulus coefficients must lie in [0, p-1]");
        }
        if modulus[d] != 1 {
            return param("modulus must be monic");
        }
        if !fp_poly::is_irreducible(&modulus, p) {
            return param(format!("modulus {modulus:?} is reducible over GF({p})"));
        }
        let mut field = FiniteField {
            p,
            degree: d,
            seed,
            modulus,
            order,
            reduction: Vec::new(),
            frobenius: Vec::new(),
        };
        // T^d = -(c_0 + ... + c_{d-1} T^{d-1}); then shift and reduce.
        let mut cur: Vec<u32> = field.modulus[..d].iter().map(|&c| (p - c) % p).collect();
        for _ in 0..d.saturating_sub(1) {
            field.reduction.push(field.from_slice_unchecked(&cur));
            let top = cur[d - 1];
            let mut next = vec![0u32; d];
            next[1..d].copy_from_slice(&cur[..d - 1]);
            for (j, nj) in next.iter_mut().enumerate() {
                let t = (top as u64 * ((p - field.modulus[j]) % p) as u64 % p as u64) as u32;
                *nj = (*nj + t) % p;
            }
            cur = next;
        }
        field.reduction.push(field.from_slice_unchecked(&cur));
        let gen = field.generator();
        field.frobenius = (0..d)
            .map(|i| field.pow(field.pow(gen, i as u128), p as u128))
            .collect();
        Ok(Arc::new(field))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Two descriptors denote the same concrete field (same element encoding).
    pub fn same_as(&self, other: &FiniteField) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        let mut x = Fe::ZERO;
        x.coords[0] = n.rem_euclid(self.p as i64) as u16;
        x
    }

    /// The class of `T`; a root of the modulus. For degree 1 this is 0.
    pub fn generator(&self) -> Fe {
        if self.degree == 1 {
            return self.from_int(-(self.modulus[0] as i64));
        }
        let mut x = Fe::ZERO;
        x.coords[1] = 1;
        x
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<Fe> {
        if coords.len() != self.degree {
            return param(format!(
                "element has {} coordinates, field degree is {}",
                coords.len(),
                self.degree
            ));
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= self.p) {
            return param(format!("coordinate {c} is not in [0, {}]", self.p - 1));
        }
        Ok(self.from_slice_unchecked(coords))
    }

    fn from_slice_unchecked(&self, coords: &[u32]) -> Fe {
        let mut x = Fe::ZERO;
        for (i, &c) in coords.iter().take(self.degree).enumerate() {
            x.coords[i] = (c % self.p) as u16;
        }
        x
    }

    /// Whether `x` is a valid element of this field.
    pub fn contains(&self, x: &Fe) -> bool {
        (0..MAX_DEGREE).all(|i| if i < self.degree { x.coord(i) < self.p } else { x.coord(i) == 0 })
    }

    pub fn coords(&self, x: &Fe) -> Vec<u32> {
        x.coords(self.degree)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        let mut out = Fe::ZERO;
        for i in 0..self.degree {
            out.coords[i] = ((a.coords[i] as u32 + b.coords[i] as u32) % p) as u16;
        }
        out
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        let mut out = Fe::ZERO;
        for i in 0..self.degree {
            out.coords[i] = ((a.coords[i] as u32 + p - b.coords[i] as u32) % p) as u16;
        }
        out
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.sub(Fe::ZERO, a)
    }

    /// Multiplication by an integer (an element of the prime field).
    pub fn scale(&self, c: u32, a: Fe) -> Fe {
        let p = self.p as u64;
        let c = c as u64 % p;
        let mut out = Fe::ZERO;
        for i in 0..self.degree {
            out.coords[i] = (a.coords[i] as u64 * c % p) as u16;
        }
        out
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let d = self.degree;
        let p = self.p as u64;
        let mut acc = [0u64; 2 * MAX_DEGREE];
        for i in 0..d {
            let ai = a.coords[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..d {
                acc[i + j] += ai * b.coords[j] as u64;
            }
        }
        for k in (d..2 * d - 1).rev() {
            let ck = acc[k] % p;
            if ck == 0 {
                continue;
            }
            let red = &self.reduction[k - d];
            for j in 0..d {
                acc[j] += ck * red.coords[j] as u64;
            }
        }
        let mut out = Fe::ZERO;
        for j in 0..d {
            out.coords[j] = (acc[j] % p) as u16;
        }
        out
    }

    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// representatives; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let inv = fp_poly::inverse_mod(&a.coords(self.degree), &self.modulus, self.p)?;
        Some(self.from_slice_unchecked(&inv))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, mut exp: u128) -> Fe {
        let mut result = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// x -> x^p, applied as a precomputed GF(p)-linear map.
    pub fn frobenius(&self, a: Fe) -> Fe {
        let d = self.degree;
        let p = self.p as u64;
        let mut acc = [0u64; MAX_DEGREE];
        for i in 0..d {
            let ai = a.coords[i] as u64;
            if ai == 0 {
                continue;
            }
            let img = &self.frobenius[i];
            for j in 0..d {
                acc[j] += ai * img.coords[j] as u64;
            }
        }
        let mut out = Fe::ZERO;
        for j in 0..d {
            out.coords[j] = (acc[j] % p) as u16;
        }
        out
    }

    /// x -> x^(p^k).
    pub fn frobenius_pow(&self, a: Fe, k: usize) -> Fe {
        let k = k % self.degree;
        (0..k).fold(a, |x, _| self.frobenius(x))
    }

    /// Position of `x` in [`enumerate`](Self::enumerate) order.
    pub fn index(&self, x: &Fe) -> u64 {
        let p = self.p as u64;
        x.coords[..self.degree].iter().fold(0u64, |acc, &c| acc * p + c as u64)
    }

    pub fn from_index(&self, mut idx: u64) -> Fe {
        let p = self.p as u64;
        let mut x = Fe::ZERO;
        for i in (0..self.degree).rev() {
            x.coords[i] = (idx % p) as u16;
            idx /= p;
        }
        x
    }

    /// All p^d elements, coordinate-lexicographic, each exactly once.
    pub fn enumerate(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(move |i| self.from_index(i))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        let mut x = Fe::ZERO;
        for i in 0..self.degree {
            x.coords[i] = rng.gen_range(0..self.p) as u16;
        }
        x
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// True when `x` lies in the subfield GF(p^k) (requires k | d).
    pub fn in_subfield(&self, x: Fe, k: usize) -> bool {
        self.frobenius_pow(x, k) == x
    }

    pub fn multiplicative_order(&self, x: Fe) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        let n = self.order - 1;
        let mut ord = n;
        for (prime, _) in factor(n) {
            while ord % prime == 0 && self.pow(x, (ord / prime) as u128) == self.one() {
                ord /= prime;
            }
        }
        Some(ord)
    }

    /// Least element (in enumeration order) generating the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        let n = self.order - 1;
        let primes: Vec<u64> = factor(n).into_iter().map(|(q, _)| q).collect();
        (1..self.order)
            .map(|i| self.from_index(i))
            .find(|&g| primes.iter().all(|&q| self.pow(g, (n / q) as u128) != self.one()))
            .expect("a finite field has a primitive element")
    }

    /// An element of exact multiplicative order `r`, namely g^((p^d-1)/r)
    /// for the least primitive element g.
    pub fn primitive_root_of_unity(&self, r: u64) -> Result<Fe> {
        let n = self.order - 1;
        if r == 0 || n % r != 0 {
            return param(format!("{r} does not divide {n} = |GF({}^{})*|", self.p, self.degree));
        }
        Ok(self.pow(self.primitive_element(), (n / r) as u128))
    }

    /// Matrix of the GF(p)-linear map `x -> f(x)` in the polynomial basis.
    pub fn linear_map_matrix(&self, f: impl Fn(Fe) -> Fe) -> FpMatrix {
        let d = self.degree;
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|j| {
                let mut e = Fe::ZERO;
                e.coords[j] = 1;
                f(e).coords(d)
            })
            .collect();
        FpMatrix::from_columns(self.p, d, &cols)
    }

    /// Applies a d x d matrix over GF(p) to the coordinate vector of `x`.
    pub fn apply_matrix(&self, m: &FpMatrix, x: Fe) -> Fe {
        let d = self.degree;
        let p = self.p as u64;
        let mut out = Fe::ZERO;
        for i in 0..d {
            let row = m.row(i);
            let mut acc = 0u64;
            for j in 0..d {
                acc += row[j] as u64 * x.coords[j] as u64;
            }
            out.coords[i] = (acc % p) as u16;
        }
        out
    }

    pub(crate) fn from_fp_vector(&self, v: &[u32]) -> Fe {
        self.from_slice_unchecked(v)
    }
}

pub(crate) fn factor(n: u64) -> Vec<(u64, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    let mut out: Vec<(u64, usize)> = num_prime::nt_funcs::factorize64(n).into_iter().collect();
    out.sort_unstable();
    out
}
