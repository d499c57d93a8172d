//! q̄-linearized polynomials `L(T) = sum a_i T^(q̄^i)` with q̄ = p^n.
//!
//! Coefficients live in an explicit coefficient field. To work in a bigger
//! field, lift the polynomial along an [`Embedding`] first; all evaluation
//! then happens inside one field.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bipoly::BiPoly;
use crate::error::{inconsistency, param, Error, Result};
use crate::gf::{embed, make_field, Embedding, Fe, FieldRef, FpMatrix, MAX_DEGREE};

#[derive(Clone, Debug)]
pub struct LinearizedPoly {
    n: usize,
    field: FieldRef,
    coeffs: Vec<Fe>,
}

impl PartialEq for LinearizedPoly {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field.same_as(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for LinearizedPoly {}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl LinearizedPoly {
    /// `coeffs[i]` multiplies `T^(q̄^i)`. Trailing zeros are dropped; the
    /// zero polynomial is rejected.
    pub fn new(n: usize, field: FieldRef, mut coeffs: Vec<Fe>) -> Result<Self> {
        if n == 0 {
            return param("q̄ = p^n needs n >= 1");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return param("the zero polynomial is not a valid linearized polynomial");
        }
        let p = field.characteristic() as u128;
        let exp = n * (coeffs.len() - 1);
        if exp >= 64 || p.pow(exp as u32) >= 1u128 << 63 {
            return param(format!("degree p^{exp} is too large"));
        }
        Ok(LinearizedPoly { n, field, coeffs })
    }

    /// Integer coefficients, reduced into the prime subfield of `field`.
    pub fn from_ints(n: usize, field: FieldRef, coeffs: &[i64]) -> Result<Self> {
        let cs = coeffs.iter().map(|&c| field.from_int(c)).collect();
        Self::new(n, field, cs)
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Linearized degree index: the conventional degree is q̄^m.
    pub fn m(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn qbar(&self) -> u64 {
        (self.p() as u64).pow(self.n as u32)
    }

    pub fn degree(&self) -> u64 {
        (self.p() as u64).pow((self.n * self.m()) as u32)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_separable(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        let mut acc = f.zero();
        let mut xp = x;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                xp = f.frobenius_pow(xp, self.n);
            }
            if !a.is_zero() {
                acc = f.add(acc, f.mul(a, xp));
            }
        }
        acc
    }

    /// Largest k with L in the span of T^(q̄^(k j)); the gcd of the indices
    /// of nonzero coefficients. `a_0 T` alone counts as k = 1.
    pub fn classify_linearity(&self) -> usize {
        let k = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0, |g, (i, _)| gcd(g, i));
        k.max(1)
    }

    /// Same polynomial with coefficients pushed through `emb`.
    pub fn lift(&self, emb: &Embedding) -> Result<Self> {
        if !emb.sub().same_as(&self.field) {
            return param("embedding source is not the coefficient field");
        }
        Ok(LinearizedPoly {
            n: self.n,
            field: emb.sup().clone(),
            coeffs: self.coeffs.iter().map(|&c| emb.apply(c)).collect(),
        })
    }

    /// Lifts into `target`, using the canonical embedding of the coefficient field.
    pub fn lift_to(&self, target: &FieldRef) -> Result<Self> {
        self.lift(&embed(&self.field, target)?)
    }

    /// `L(M(T))`: c_k = sum_{i+j=k} a_i b_j^(q̄^i).
    pub fn compose(&self, other: &LinearizedPoly) -> Result<Self> {
        if self.n != other.n || !self.field.same_as(&other.field) {
            return param("compose needs the same q̄ and the same coefficient field");
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.m() + other.m() + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = f.mul(a, f.frobenius_pow(b, self.n * i));
                out[i + j] = f.add(out[i + j], t);
            }
        }
        Self::new(self.n, self.field.clone(), out)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        let f = &self.field;
        let li = f.inv(self.coeffs[self.m()]).expect("leading coefficient is nonzero");
        LinearizedPoly {
            n: self.n,
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.mul(c, li)).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: Fe) -> Result<Self> {
        let f = &self.field;
        Self::new(self.n, self.field.clone(), self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// The same polynomial viewed as p-linearized (T^(q̄^i) = T^(p^(n i))).
    pub fn as_p_linearized(&self) -> Self {
        let f = &self.field;
        let mut out = vec![f.zero(); self.n * self.m() + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[self.n * i] = a;
        }
        LinearizedPoly { n: 1, field: self.field.clone(), coeffs: out }
    }

    /// Matrix of `x -> L(x)` over GF(p) in the polynomial basis of the
    /// coefficient field.
    pub fn fp_matrix(&self) -> FpMatrix {
        self.field.linear_map_matrix(|x| self.eval(x))
    }

    /// GF(p)-basis of the roots of L inside its own coefficient field.
    pub fn roots_basis(&self) -> Vec<Fe> {
        self.fp_matrix().null_space().iter().map(|v| self.field.from_fp_vector(v)).collect()
    }

    /// `L(aX + bY + e)` as a sparse bivariate polynomial.
    pub fn substitute_linear(&self, a: Fe, b: Fe, e: Fe) -> BiPoly {
        let f = &self.field;
        let mut out = BiPoly::zero(f.clone());
        let mut deg = 1u64;
        let qbar = self.qbar();
        let mut constant = f.zero();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                deg *= qbar;
            }
            let k = self.n * i;
            out.add_term(deg, 0, f.mul(c, f.frobenius_pow(a, k)));
            out.add_term(0, deg, f.mul(c, f.frobenius_pow(b, k)));
            constant = f.add(constant, f.mul(c, f.frobenius_pow(e, k)));
        }
        out.add_term(0, 0, constant);
        out
    }

    /// All q̄^m roots, in the smallest admissible ambient field.
    pub fn kernel(&self) -> Result<KernelSpace> {
        if !self.is_separable() {
            return Err(Error::Inseparable("a_0 = 0, so the derivative vanishes and roots repeat".into()));
        }
        let p = self.p();
        let want = self.n * self.m();
        let step = lcm(want.max(1), self.field.degree());
        let mut d = step;
        while d <= MAX_DEGREE {
            let ambient = make_field(p, d, 0)?;
            let emb = embed(&self.field, &ambient)?;
            if let Some(k) = self.kernel_if_split(&emb)? {
                return Ok(k);
            }
            d += step;
        }
        Err(Error::DeskScaleLimit(format!(
            "kernel does not split in GF({p}^D) for any D <= {MAX_DEGREE}"
        )))
    }

    /// The kernel inside `emb.sup()`, which must contain every root.
    pub fn kernel_in(&self, emb: &Embedding) -> Result<KernelSpace> {
        match self.kernel_if_split(emb)? {
            Some(k) => Ok(k),
            None => param(format!(
                "{:?} does not contain all {} roots of the linearized polynomial",
                emb.sup(),
                self.degree()
            )),
        }
    }

    fn kernel_if_split(&self, emb: &Embedding) -> Result<Option<KernelSpace>> {
        if !self.is_separable() {
            return Err(Error::Inseparable("a_0 = 0, so the derivative vanishes and roots repeat".into()));
        }
        let want = self.n * self.m();
        let basis = self.lift(emb)?.roots_basis();
        if basis.len() > want {
            return inconsistency(format!(
                "kernel has GF(p)-dimension {} in {:?}, expected {want}",
                basis.len(),
                emb.sup()
            ));
        }
        Ok((basis.len() == want).then(|| KernelSpace::new(self.clone(), emb.clone(), basis)))
    }

    /// Number of roots of L in the field reached through `emb`.
    pub fn kernel_size_in(&self, emb: &Embedding) -> Result<u64> {
        let lifted = self.lift(emb)?;
        Ok((self.p() as u64).pow(lifted.roots_basis().len() as u32))
    }
}

/// Deterministic seeded draw with a_0, a_m nonzero.
pub fn random_separable(n: usize, field: &FieldRef, m: usize, seed: u64) -> Result<LinearizedPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<Fe> = (0..=m).map(|_| field.random(&mut rng)).collect();
    while coeffs[0].is_zero() {
        coeffs[0] = field.random(&mut rng);
    }
    while coeffs[m].is_zero() {
        coeffs[m] = field.random(&mut rng);
    }
    LinearizedPoly::new(n, field.clone(), coeffs)
}

#[derive(Clone, Debug)]
pub struct KernelSpace {
    poly: LinearizedPoly,
    embedding: Embedding,
    basis: Vec<Fe>,
    roots: Vec<Fe>,
}

impl KernelSpace {
    fn new(poly: LinearizedPoly, embedding: Embedding, basis: Vec<Fe>) -> Self {
        let f = embedding.sup().clone();
        let mut roots = vec![f.zero()];
        for &b in &basis {
            let mut next = Vec::with_capacity(roots.len() * f.characteristic() as usize);
            for c in 0..f.characteristic() {
                let cb = f.scale(c, b);
                next.extend(roots.iter().map(|&r| f.add(r, cb)));
            }
            roots = next;
        }
        roots.sort();
        KernelSpace { poly, embedding, basis, roots }
    }

    pub fn poly(&self) -> &LinearizedPoly {
        &self.poly
    }

    pub fn ambient(&self) -> &FieldRef {
        self.embedding.sup()
    }

    /// Coefficient field -> ambient.
    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn roots(&self) -> &[Fe] {
        &self.roots
    }

    pub fn fp_basis(&self) -> &[Fe] {
        &self.basis
    }

    /// Dimension over F_q̄.
    pub fn dimension(&self) -> usize {
        self.poly.m()
    }

    pub fn contains(&self, x: &Fe) -> bool {
        self.roots.binary_search(x).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn f3() -> FieldRef {
        make_field(3, 1, 0).unwrap()
    }

    #[test]
    fn eval_examples() {
        let l = LinearizedPoly::from_ints(1, f3(), &[-1, 1]).unwrap();
        assert!(l.eval(f3().one()).is_zero());
        let f9 = make_field(3, 2, 0).unwrap();
        let l9 = l.lift_to(&f9).unwrap();
        let g = f9.primitive_element();
        let expect = f9.sub(f9.pow(g, 3), g);
        assert_eq!(l9.eval(g), expect);
        assert!(!expect.is_zero());
        let l2 = LinearizedPoly::from_ints(1, f3(), &[1, 1, 1]).unwrap();
        assert!(l2.eval(Fe::ZERO).is_zero());
    }

    #[test]
    fn linearity_classes() {
        let f = f3();
        assert_eq!(LinearizedPoly::from_ints(1, f.clone(), &[1, 1, 1]).unwrap().classify_linearity(), 1);
        assert_eq!(LinearizedPoly::from_ints(1, f.clone(), &[1, 0, 1]).unwrap().classify_linearity(), 2);
        let l = LinearizedPoly::from_ints(1, f.clone(), &[1, 0, 1, 0, 1]).unwrap();
        assert_eq!(l.classify_linearity(), 2);
        // semilinear over GF(9) inside GF(3^8)
        let big = make_field(3, 8, 0).unwrap();
        let lb = l.lift_to(&big).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f9: Vec<Fe> = big.enumerate().filter(|&c| big.pow(c, 9) == c).collect();
        assert_eq!(f9.len(), 9);
        for _ in 0..50 {
            let x = big.random(&mut rng);
            for &c in &f9 {
                assert_eq!(lb.eval(big.mul(c, x)), big.mul(c, lb.eval(x)));
            }
        }
    }

    #[test]
    fn kernel_examples() {
        let f = f3();
        let k = LinearizedPoly::from_ints(1, f.clone(), &[-1, 1]).unwrap().kernel().unwrap();
        assert_eq!(k.ambient().degree(), 1);
        assert_eq!(k.roots().len(), 3);

        let k = LinearizedPoly::from_ints(1, f.clone(), &[1, 1]).unwrap().kernel().unwrap();
        let a = k.ambient();
        assert_eq!(a.degree(), 2);
        let mut by_scan: Vec<Fe> = a.enumerate().filter(|&x| a.square(x) == a.from_int(-1)).collect();
        by_scan.push(a.zero());
        by_scan.sort();
        assert_eq!(k.roots(), &by_scan[..]);

        let k = LinearizedPoly::from_ints(1, f.clone(), &[-1, 0, 1]).unwrap().kernel().unwrap();
        assert_eq!(k.roots().len(), 9);
        assert_eq!(k.ambient().order(), 9);
    }

    #[test]
    fn inseparable_kernel_is_an_error() {
        let l = LinearizedPoly::from_ints(1, f3(), &[0, 1]).unwrap();
        assert!(matches!(l.kernel(), Err(Error::Inseparable(_))));
    }

    #[test]
    fn compose_examples() {
        let f = f3();
        let l = LinearizedPoly::from_ints(1, f.clone(), &[-1, 1]).unwrap();
        let t = LinearizedPoly::from_ints(1, f.clone(), &[1]).unwrap();
        assert_eq!(t.compose(&l).unwrap(), l);
        let ll = l.compose(&l).unwrap();
        assert_eq!(ll, LinearizedPoly::from_ints(1, f.clone(), &[1, 1, 1]).unwrap());
        let big = make_field(3, 5, 0).unwrap();
        let (lb, llb) = (l.lift_to(&big).unwrap(), ll.lift_to(&big).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let x = big.random(&mut rng);
            assert_eq!(llb.eval(x), lb.eval(lb.eval(x)));
        }
    }

    #[test]
    fn random_separable_is_deterministic() {
        let f = f3();
        let a = random_separable(1, &f, 1, 7).unwrap();
        let b = random_separable(1, &f, 1, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.is_separable());
        assert!(!a.coeffs()[1].is_zero());
        assert_eq!(a.kernel().unwrap().roots().len(), 3);
    }

    #[test]
    fn substitution_matches_evaluation() {
        let f = make_field(3, 2, 0).unwrap();
        let l = random_separable(1, &f, 2, 11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (a, b, e) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        let s = l.substitute_linear(a, b, e);
        for _ in 0..30 {
            let (x, y) = (f.random(&mut rng), f.random(&mut rng));
            let direct = l.eval(f.add(f.add(f.mul(a, x), f.mul(b, y)), e));
            assert_eq!(s.eval(x, y), direct);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn kernel_is_an_fqbar_subspace(seed in 0u64..1000, shape in 0usize..3) {
            // q̄^m in {3, 9, 9}; larger m over GF(9) can need splitting
            // degrees past the ambient cap
            let (n, m) = [(1, 1), (1, 2), (2, 1)][shape];
            let cf = make_field(3, n * m, 0).unwrap();
            let l = random_separable(n, &cf, m, seed).unwrap();
            let k = l.kernel().unwrap();
            let a = k.ambient().clone();
            prop_assert_eq!(k.roots().len() as u64, l.degree());
            let set: HashSet<Fe> = k.roots().iter().copied().collect();
            prop_assert!(set.contains(&a.zero()));
            let lifted = l.lift(k.embedding()).unwrap();
            for &x in k.roots() {
                prop_assert!(lifted.eval(x).is_zero());
            }
            let fq = make_field(3, n, 0).unwrap();
            let to_a = crate::gf::embed(&fq, &a).unwrap();
            let scalars: Vec<Fe> = fq.enumerate().map(|c| to_a.apply(c)).collect();
            for &x in k.roots().iter().take(9) {
                for &y in k.roots() {
                    prop_assert!(set.contains(&a.add(x, y)));
                }
                for &c in &scalars {
                    prop_assert!(set.contains(&a.mul(c, x)));
                }
            }
        }

        #[test]
        fn additive_and_qbar_linear(seed in 0u64..1000) {
            let cf = make_field(5, 2, 0).unwrap();
            let l = random_separable(1, &cf, 2, seed).unwrap();
            let big = make_field(5, 4, 0).unwrap();
            let lb = l.lift_to(&big).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..500 {
                let (x, y) = (big.random(&mut rng), big.random(&mut rng));
                prop_assert_eq!(lb.eval(big.add(x, y)), big.add(lb.eval(x), lb.eval(y)));
            }
            for c in 0..5 {
                let x = big.random(&mut rng);
                let c = big.from_int(c);
                prop_assert_eq!(lb.eval(big.mul(c, x)), big.mul(c, lb.eval(x)));
            }
        }

        #[test]
        fn composing_never_lowers_linearity(seed in 0u64..1000, sparse in proptest::bool::ANY) {
            let cf = make_field(3, 2, 0).unwrap();
            let mut l = random_separable(1, &cf, 2, seed).unwrap();
            if sparse {
                let mut c = l.coeffs().to_vec();
                c[1] = cf.zero();
                l = LinearizedPoly::new(1, cf.clone(), c).unwrap();
            }
            let ll = l.compose(&l).unwrap();
            prop_assert!(ll.classify_linearity() >= l.classify_linearity());
        }
    }
}
