use super::{poly, Fe, FieldRef, FiniteField, FpMatrix};
use crate::error::{inconsistency, param, Result};

/// A field homomorphism `sub -> sup`, fixed by where it sends the class of `T`.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: FieldRef,
    sup: FieldRef,
    image_of_generator: Fe,
    // sup.degree() x sub.degree(); column j is the image of T^j
    matrix: FpMatrix,
}

/// Embeds `sub` into `sup`, sending the generator to the least root of
/// `sub`'s modulus in `sup`. Identical moduli give the identity map.
pub fn embed(sub: &FieldRef, sup: &FieldRef) -> Result<Embedding> {
    if sub.characteristic() != sup.characteristic() {
        return param(format!(
            "cannot embed characteristic {} into characteristic {}",
            sub.characteristic(),
            sup.characteristic()
        ));
    }
    if sup.degree() % sub.degree() != 0 {
        return param(format!(
            "GF({p}^{}) does not embed in GF({p}^{}): {} does not divide {}",
            sub.degree(),
            sup.degree(),
            sub.degree(),
            sup.degree(),
            p = sub.characteristic()
        ));
    }
    let image = if sub.same_as(sup) {
        sup.generator()
    } else {
        let lifted: Vec<Fe> = sub.modulus().iter().map(|&c| sup.from_int(c as i64)).collect();
        match poly::roots(sup, &lifted).first() {
            Some(&r) => r,
            None => return inconsistency(format!("modulus of {sub:?} has no root in {sup:?}")),
        }
    };
    Ok(Embedding::from_image(sub.clone(), sup.clone(), image))
}

impl Embedding {
    fn from_image(sub: FieldRef, sup: FieldRef, image_of_generator: Fe) -> Self {
        let mut cols = Vec::with_capacity(sub.degree());
        let mut pw = sup.one();
        for _ in 0..sub.degree() {
            cols.push(sup.coords(&pw));
            pw = sup.mul(pw, image_of_generator);
        }
        let matrix = FpMatrix::from_columns(sup.characteristic(), sup.degree(), &cols);
        Embedding { sub, sup, image_of_generator, matrix }
    }

    pub fn identity(field: &FieldRef) -> Self {
        Embedding::from_image(field.clone(), field.clone(), field.generator())
    }

    pub fn sub(&self) -> &FieldRef {
        &self.sub
    }

    pub fn sup(&self) -> &FieldRef {
        &self.sup
    }

    pub fn image_of_generator(&self) -> Fe {
        self.image_of_generator
    }

    pub fn apply(&self, x: Fe) -> Fe {
        let v = self.matrix.mul_vec(&self.sub.coords(&x));
        self.sup.from_fp_vector(&v)
    }

    /// The unique `x` in `sub` with `apply(x) == y`, if `y` is in the image.
    pub fn preimage(&self, y: Fe) -> Option<Fe> {
        let v = self.matrix.solve(&self.sup.coords(&y))?;
        let x = self.sub.from_fp_vector(&v);
        (self.apply(x) == y).then_some(x)
    }

    /// `self` followed by `next` (sub -> self.sup = next.sub -> next.sup).
    pub fn then(&self, next: &Embedding) -> Result<Embedding> {
        if !self.sup.same_as(&next.sub) {
            return param("embeddings do not compose: middle fields differ");
        }
        Ok(Embedding::from_image(
            self.sub.clone(),
            next.sup.clone(),
            next.apply(self.image_of_generator),
        ))
    }
}

impl FiniteField {
    /// Smallest `k` with `x` in GF(p^k), i.e. the degree of `x` over GF(p).
    pub fn element_degree(&self, x: Fe) -> usize {
        (1..=self.degree())
            .filter(|k| self.degree() % k == 0)
            .find(|&k| self.frobenius_pow(x, k) == x)
            .unwrap_or(self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_embeds_as_identity_on_representatives() {
        let f3 = make_field(3, 1, 0).unwrap();
        let f9 = make_field(3, 2, 0).unwrap();
        let e = embed(&f3, &f9).unwrap();
        assert_eq!(e.apply(f3.from_int(2)), f9.from_int(2));
        assert_eq!(e.apply(f3.one()), f9.one());
    }

    #[test]
    fn gf9_lands_in_fixed_field_of_gf81() {
        let f9 = make_field(3, 2, 0).unwrap();
        let f81 = make_field(3, 4, 0).unwrap();
        let e = embed(&f9, &f81).unwrap();
        let images: std::collections::HashSet<Fe> = f9.enumerate().map(|x| e.apply(x)).collect();
        assert_eq!(images.len(), 9);
        for &y in &images {
            assert_eq!(f81.pow(y, 9), y);
        }
        let fixed = f81.enumerate().filter(|&y| f81.pow(y, 9) == y).count();
        assert_eq!(fixed, 9);
    }

    #[test]
    fn indivisible_degree_is_rejected() {
        let f9 = make_field(3, 2, 0).unwrap();
        let f27 = make_field(3, 3, 0).unwrap();
        assert!(matches!(embed(&f9, &f27), Err(crate::Error::Parameter(_))));
    }

    #[test]
    fn homomorphism_and_preimage() {
        let sub = make_field(5, 2, 1).unwrap();
        let sup = make_field(5, 6, 2).unwrap();
        let e = embed(&sub, &sup).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let x = sub.random(&mut rng);
            let y = sub.random(&mut rng);
            assert_eq!(e.apply(sub.add(x, y)), sup.add(e.apply(x), e.apply(y)));
            assert_eq!(e.apply(sub.mul(x, y)), sup.mul(e.apply(x), e.apply(y)));
            assert_eq!(e.preimage(e.apply(x)), Some(x));
        }
        let outside = sup.generator();
        assert!(e.preimage(outside).is_none());
    }

    #[test]
    fn composition_agrees_with_stepwise_application() {
        let a = make_field(3, 1, 0).unwrap();
        let b = make_field(3, 2, 0).unwrap();
        let c = make_field(3, 4, 0).unwrap();
        let ab = embed(&a, &b).unwrap();
        let bc = embed(&b, &c).unwrap();
        let ac = ab.then(&bc).unwrap();
        for x in a.enumerate() {
            assert_eq!(ac.apply(x), bc.apply(ab.apply(x)));
        }
    }
}
