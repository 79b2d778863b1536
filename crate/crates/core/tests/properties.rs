//! Algebraic invariants checked on random inputs.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use groupdet::detlab;
use groupdet::reps::fourier_transform;
use groupdet::ring::Ring;
use groupdet::{AlgebraElement, CycloField, CycloNumber, GroupContext, Monomial, Poly};

const GROUPS: &[&str] = &["C5", "C2xC3", "C2xC2xC2", "D3", "D4", "D5", "Q2", "Q3"];

fn ctx(i: usize) -> GroupContext {
    GroupContext::parse(GROUPS[i % GROUPS.len()]).unwrap()
}

fn field12() -> Arc<CycloField> {
    CycloField::new(12)
}

fn cyclo(field: &Arc<CycloField>, coords: &[(i64, i64)]) -> CycloNumber {
    let coeffs = coords
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect();
    CycloNumber::from_coeffs(field, coeffs)
}

fn coords() -> impl Strategy<Value = Vec<(i64, i64)>> {
    // Q(ζ₁₂) has degree φ(12) = 4.
    prop::collection::vec((-9i64..=9, 1i64..=4), 4)
}

/// Polynomials in three variables with small integer coefficients.
fn poly_strategy() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
    prop::collection::vec((-5i64..=5, [0u32..3, 0u32..3, 0u32..3]), 0..5)
}

fn build_poly(field: &Arc<CycloField>, terms: &[(i64, [u32; 3])]) -> Poly {
    terms.iter().fold(Poly::zero(field), |acc, (c, e)| {
        let m = Monomial::from_pairs(e.iter().enumerate().map(|(v, &k)| (v, k)));
        acc.add(&Poly::term(m, field.int(*c)))
    })
}

fn element(c: &GroupContext, values: &[i64]) -> AlgebraElement<CycloNumber> {
    let vals: Vec<i64> = (0..c.order()).map(|g| values[g % values.len()]).collect();
    AlgebraElement::from_coeffs(&c.group, c.point(&vals)).unwrap()
}

fn ints() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 1..24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in coords(), y in coords(), z in coords()) {
        let f = field12();
        let (x, y, z) = (cyclo(&f, &x), cyclo(&f, &y), cyclo(&f, &z));
        prop_assert_eq!(x.mul(&y.mul(&z)), x.mul(&y).mul(&z));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert!(x.sub(&x).is_zero());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inverse().unwrap()).is_one());
        }
        prop_assert_eq!(x.mul(&y).conjugate(), x.conjugate().mul(&y.conjugate()));
    }

    #[test]
    fn roots_of_unity(k in -30i64..30) {
        let f = field12();
        let z = f.root_of_unity(k);
        prop_assert!(z.pow(12).is_one());
        prop_assert!(z.mul(&z.conjugate()).is_one());
        prop_assert_eq!(z.mul(&f.root_of_unity(-k)), f.one());
    }

    #[test]
    fn polynomial_ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        let f = field12();
        let (p, q, r) = (build_poly(&f, &p), build_poly(&f, &q), build_poly(&f, &r));
        prop_assert_eq!(p.mul(&q.mul(&r)), p.mul(&q).mul(&r));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in poly_strategy(), q in poly_strategy(), at in prop::collection::vec(coords(), 3)
    ) {
        let f = field12();
        let (p, q) = (build_poly(&f, &p), build_poly(&f, &q));
        let point: Vec<CycloNumber> = at.iter().map(|c| cyclo(&f, c)).collect();
        let ev = |x: &Poly| x.evaluate(&point).unwrap();
        prop_assert_eq!(ev(&p.mul(&q)), ev(&p).mul(&ev(&q)));
        prop_assert_eq!(ev(&p.add(&q)), ev(&p).add(&ev(&q)));
    }

    #[test]
    fn substitution_then_evaluation(
        p in poly_strategy(),
        images in prop::collection::vec(poly_strategy(), 3),
        at in prop::collection::vec(-6i64..=6, 3),
    ) {
        let f = field12();
        let p = build_poly(&f, &p);
        let map: Vec<Poly> = images.iter().map(|t| build_poly(&f, t)).collect();
        let point: Vec<CycloNumber> = at.iter().map(|&v| f.int(v)).collect();
        let inner: Vec<CycloNumber> = map.iter().map(|m| m.evaluate(&point).unwrap()).collect();
        prop_assert_eq!(
            p.substitute(&map).unwrap().evaluate(&point).unwrap(),
            p.evaluate(&inner).unwrap()
        );
    }

    #[test]
    fn group_axioms(gi in 0usize..8, x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let c = ctx(gi);
        let g = &c.group;
        let n = g.order();
        let (x, y, z) = (x % n, y % n, z % n);
        prop_assert_eq!(g.mul_idx(g.mul_idx(x, y), z), g.mul_idx(x, g.mul_idx(y, z)));
        prop_assert_eq!(g.mul_idx(x, g.inv_idx(x)), g.identity());
        prop_assert_eq!(g.mul_idx(g.identity(), x), x);
        prop_assert_eq!(g.index_by_name(g.name(x)).unwrap(), x);
    }

    #[test]
    fn representations_are_homomorphisms(gi in 0usize..8, x in 0usize..64, y in 0usize..64) {
        let c = ctx(gi);
        let n = c.order();
        let (x, y) = (x % n, y % n);
        let xy = c.group.mul_idx(x, y);
        for rep in c.reps.reps() {
            prop_assert_eq!(rep.matrix(xy), rep.matrix(x).mul(&rep.matrix(y)), "{}", rep.name());
        }
    }

    #[test]
    fn convolution_is_associative_with_unit(
        gi in 0usize..8, f in ints(), h in ints(), k in ints()
    ) {
        let c = ctx(gi);
        let (f, h, k) = (element(&c, &f), element(&c, &h), element(&c, &k));
        let lhs = f.convolve(&h).unwrap().convolve(&k).unwrap();
        let rhs = f.convolve(&h.convolve(&k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let e = AlgebraElement::basis(&c.group, &c.field, c.group.identity());
        prop_assert_eq!(f.convolve(&e).unwrap(), f.clone());
        prop_assert_eq!(f.convolve(&h).unwrap().augment(), f.augment().mul(&h.augment()));
    }

    #[test]
    fn fourier_transform_is_multiplicative(gi in 0usize..8, f in ints(), h in ints()) {
        let c = ctx(gi);
        let (f, h) = (element(&c, &f), element(&c, &h));
        let lhs = fourier_transform(&c.reps, &f.convolve(&h).unwrap()).unwrap();
        let rhs = fourier_transform(&c.reps, &f).unwrap().mul(&fourier_transform(&c.reps, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_routes_agree(gi in 0usize..8, v in ints()) {
        let c = ctx(gi);
        let point = element(&c, &v).into_coeffs();
        let theta = detlab::numeric_det_at(&c, &point);
        prop_assert_eq!(detlab::frobenius_theta(&c, &point), theta.clone());
        if !c.group.is_abelian_family() {
            prop_assert_eq!(detlab::circulant_theta(&c, &point).unwrap(), theta);
        }
    }

    #[test]
    fn inverse_is_two_sided(gi in 0usize..8, v in ints()) {
        let c = ctx(gi);
        let f = element(&c, &v);
        match detlab::inverse_element(&c, f.coeffs()) {
            Ok(inv) => {
                let e = AlgebraElement::basis(&c.group, &c.field, c.group.identity());
                prop_assert_eq!(f.convolve(&inv).unwrap(), e.clone());
                prop_assert_eq!(inv.convolve(&f).unwrap(), e);
            }
            Err(_) => prop_assert!(detlab::numeric_det_at(&c, f.coeffs()).is_zero()),
        }
    }

    #[test]
    fn theta_is_multiplicative(gi in 0usize..8, f in ints(), h in ints()) {
        let c = ctx(gi);
        let (f, h) = (element(&c, &f), element(&c, &h));
        let fh = f.convolve(&h).unwrap();
        prop_assert_eq!(
            detlab::numeric_det_at(&c, fh.coeffs()),
            detlab::numeric_det_at(&c, f.coeffs()).mul(&detlab::numeric_det_at(&c, h.coeffs()))
        );
    }
}
