mod common;

use common::*;
use lecalc_core::family::{is_upper, Family};
use lecalc_core::poly::{parse_polynomial, Polynomial, RatFunc};
use lecalc_core::singularity::*;
use lecalc_core::Config;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn order_bound_for_weighted_homogeneous((f, _w, _d) in weighted_homogeneous()) {
        let Some(ws) = detect_weights(&f).unwrap() else { return Ok(()) };
        prop_assume!(!ws.is_ambiguous());
        let ord = order_at_origin(&f).unwrap() as u64;
        prop_assert!(ord * ws.w_i0() <= ws.degree(), "{} with {}", f, ws);
        prop_assert!(check_polar_ratio_lemma(&f, &ws, None).unwrap().substitution_identity);
    }

    #[test]
    fn order_is_invariant_under_linear_change(f in germ_in(ring3(), 5, 4), m in invertible_matrix()) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(order_at_origin(&linear_change(&f, &m)).unwrap(), order_at_origin(&f).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn cycle_lambda0_equals_milnor_for_isolated(
        a in 2u32..=5,
        b in 2u32..=5,
        c in 2u32..=4,
        mix in -2i64..=2,
    ) {
        // z1^a + z2^b + z3^c with a mixed term of higher order
        let ring = ring3();
        let text = format!("z1^{a} + z2^{b} + z3^{c} + ({mix})*z1*z2*z3");
        let f = parse_polynomial(&text, &ring).unwrap();
        let cfg = Config::default();
        let mu = milnor_number(&f, &[0, 1, 2], &cfg).unwrap();
        prop_assert_eq!(lambda0_isolated(&f, &cfg).unwrap(), mu);
    }

    #[test]
    fn adding_high_weighted_degree_terms_keeps_family_upper(
        picks in prop::collection::vec((exponents(8), nonzero_rational()), 1..4),
    ) {
        let ring = ring3t();
        let f0 = parse_polynomial("z1^2*z2^2 + z2^5 + z3^4", &ring).unwrap();
        let w = [6u64, 4, 5];
        let t = Polynomial::param(&ring, "t").unwrap();
        let mut f = f0;
        let mut added = false;
        for (e, c) in picks {
            let wd: u64 = e.iter().zip(w).map(|(&x, wi)| x as u64 * wi).sum();
            if wd >= 20 {
                let term = Polynomial::monomial(&ring, &e, RatFunc::from_rational(c));
                f = f.add(&t.mul(&term).unwrap()).unwrap();
                added = true;
            }
        }
        prop_assume!(added);
        let fam = match Family::new(&f, "t", &Config::default()) {
            Ok(fam) => fam,
            // an accidental repeated factor is rejected before the upper test
            Err(e) if e.is_refusal() => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let ws = WeightSystem::new(w.to_vec(), 20).unwrap();
        prop_assert!(is_upper(&fam, &ws).unwrap().upper);
    }
}
