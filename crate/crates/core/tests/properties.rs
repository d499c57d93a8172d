use amc_core::curve::{AMCurve, CountableCurve};
use amc_core::gf::{embed, make_field, Fe, FieldRef};
use amc_core::linpoly::LinearizedPoly;
use proptest::prelude::*;

fn fields() -> Vec<FieldRef> {
    [(3, 1), (3, 3), (5, 2), (7, 1), (3, 5), (11, 2)].iter().map(|&(p, d)| make_field(p, d, 0).unwrap()).collect()
}

fn elt(f: &FieldRef, i: u64) -> Fe {
    f.from_index(i % f.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(which in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &fields()[which];
        let (a, b, c) = (elt(f, a), elt(f, b), elt(f, c));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        prop_assert_eq!(f.mul(a, f.one()), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, (f.order() - 1) as u128), f.one());
        }
    }

    #[test]
    fn frobenius_is_the_p_th_power(which in 0usize..6, a in any::<u64>(), b in any::<u64>()) {
        let f = &fields()[which];
        let (a, b) = (elt(f, a), elt(f, b));
        let p = f.characteristic() as u128;
        prop_assert_eq!(f.frobenius(a), f.pow(a, p));
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.frobenius_pow(a, f.degree()), a);
    }

    #[test]
    fn embedding_is_a_ring_map(a in any::<u64>(), b in any::<u64>()) {
        let sub = make_field(3, 2, 0).unwrap();
        let sup = make_field(3, 6, 0).unwrap();
        let e = embed(&sub, &sup).unwrap();
        let (a, b) = (elt(&sub, a), elt(&sub, b));
        prop_assert_eq!(e.apply(sub.add(a, b)), sup.add(e.apply(a), e.apply(b)));
        prop_assert_eq!(e.apply(sub.mul(a, b)), sup.mul(e.apply(a), e.apply(b)));
    }
}

/// Independent count: double loop over affine points plus one place over
/// each rational kernel root.
fn brute_count(c: &AMCurve, k: usize) -> u64 {
    let base = c.coeff_field();
    let f = make_field(base.characteristic(), base.degree() * k, 3).unwrap();
    let l1 = c.l1().lift_to(&f).unwrap();
    let l2 = c.l2().lift_to(&f).unwrap();
    let v1: Vec<Fe> = f.enumerate().map(|x| l1.eval(x)).collect();
    let v2: Vec<Fe> = f.enumerate().map(|y| l2.eval(y)).collect();
    let one = f.one();
    let mut n = 0;
    for a in &v1 {
        for b in &v2 {
            if f.mul(*a, *b) == one {
                n += 1;
            }
        }
    }
    n + v1.iter().filter(|v| v.is_zero()).count() as u64 + v2.iter().filter(|v| v.is_zero()).count() as u64
}

#[test]
fn table_count_matches_double_loop() {
    let c = AMCurve::classical(3).unwrap();
    for k in 1..=3 {
        assert_eq!(c.count_places(k).unwrap(), brute_count(&c, k), "classical, k = {k}");
    }
    for (p, n, m, seed) in [(3, 1, 2, 1), (3, 2, 1, 4), (5, 1, 1, 2)] {
        let c = AMCurve::random(p, n, m, seed).unwrap();
        let kmax = if c.coeff_field().order() > 9 { 1 } else { 2 };
        for k in 1..=kmax {
            assert_eq!(c.count_places(k).unwrap(), brute_count(&c, k), "({p},{n},{m}) seed {seed}, k = {k}");
        }
    }
}

#[test]
fn counts_respect_hasse_weil() {
    for (p, n, m, seed) in [(3, 1, 1, 0), (3, 1, 2, 5), (5, 1, 1, 7), (7, 1, 1, 1)] {
        let c = AMCurve::random(p, n, m, seed).unwrap();
        let g = c.genus().unwrap() as f64;
        let qk = c.coeff_field().order() as f64;
        let n1 = c.count_places(1).unwrap() as f64;
        assert!((n1 - qk - 1.0).abs() <= 2.0 * g * qk.sqrt(), "({p},{n},{m}) N1 = {n1}");
    }
}

#[test]
fn curve_is_symmetric_under_swapping_polynomials() {
    let c = AMCurve::random(3, 1, 2, 9).unwrap();
    let d = AMCurve::new(c.l2().clone(), c.l1().clone()).unwrap();
    for k in 1..=2 {
        assert_eq!(c.count_places(k).unwrap(), d.count_places(k).unwrap());
    }
}

#[test]
fn linearized_polys_are_additive() {
    let f = make_field(3, 4, 0).unwrap();
    let l = LinearizedPoly::from_ints(1, f.clone(), &[1, 2, 0, 1]).unwrap();
    for a in f.enumerate().step_by(7) {
        for b in f.enumerate().step_by(11) {
            assert_eq!(l.eval(f.add(a, b)), f.add(l.eval(a), l.eval(b)));
        }
    }
}
