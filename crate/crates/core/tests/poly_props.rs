mod common;

use common::*;
use lecalc_core::poly::{multivariate_gcd, parse_polynomial, Polynomial};
use lecalc_core::singularity::{check_polar_ratio_lemma, detect_weights, WeightSystem};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in polynomial_in(ring3t(), 4, 3), b in polynomial_in(ring3t(), 4, 3), c in polynomial_in(ring3t(), 4, 3)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn parse_print_round_trip(p in polynomial_with(ring3t(), 6, 5, false)) {
        let text = p.to_string();
        prop_assert_eq!(parse_polynomial(&text, p.ring()).unwrap(), p);
    }

    #[test]
    fn leibniz_rule(a in polynomial_in(ring3t(), 4, 3), b in polynomial_in(ring3t(), 4, 3), i in 0usize..3) {
        let lhs = a.mul(&b).unwrap().derivative(i);
        let rhs = a.derivative(i).mul(&b).unwrap().add(&a.mul(&b.derivative(i)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(
        a in polynomial_in(ring3t(), 4, 3),
        b in polynomial_in(ring3t(), 4, 3),
        images in prop::collection::vec(polynomial_with(ring3t(), 2, 2, false), 3),
    ) {
        let ring = a.ring().clone();
        let s = |p: &Polynomial| p.substitute(&images, &ring).unwrap();
        prop_assert_eq!(s(&a.mul(&b).unwrap()), s(&a).mul(&s(&b)).unwrap());
        prop_assert_eq!(s(&a.add(&b).unwrap()), s(&a).add(&s(&b)).unwrap());
    }

    #[test]
    fn gcd_divides_and_absorbs_common_factor(
        a in polynomial_in(ring3(), 3, 2),
        b in polynomial_in(ring3(), 3, 2),
        c in polynomial_in(ring3(), 3, 2),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (ac, bc) = (a.mul(&c).unwrap(), b.mul(&c).unwrap());
        let g = multivariate_gcd(&ac, &bc).unwrap();
        prop_assert!(ac.div_exact(&g).unwrap().is_some());
        prop_assert!(bc.div_exact(&g).unwrap().is_some());
        prop_assert!(g.div_exact(&c).unwrap().is_some());
    }

    #[test]
    fn weighted_substitution_identity((f, w, d) in weighted_homogeneous()) {
        let ws = WeightSystem::new(w, d).unwrap();
        prop_assert!(ws.is_homogeneous(&f));
        prop_assert!(check_polar_ratio_lemma(&f, &ws, None).unwrap().substitution_identity);
        // detected weights also pass the identity on their own output
        if let Some(found) = detect_weights(&f).unwrap() {
            prop_assert!(check_polar_ratio_lemma(&f, &found, None).unwrap().substitution_identity);
        }
    }
}
