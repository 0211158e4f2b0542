mod common;

use common::*;
use lecalc_core::ideal::*;
use lecalc_core::poly::{Monomial, Polynomial, RatFunc, Rational};
use lecalc_core::Config;
use proptest::prelude::*;

fn cfg() -> Config {
    Config::default()
}

fn monomial_ideal(exps: &[Vec<u32>]) -> Ideal {
    let ring = ring3();
    let gens = exps
        .iter()
        .map(|e| Polynomial::monomial(&ring, e, RatFunc::from_rational(Rational::from_integer(1))))
        .collect();
    Ideal::new(&ring, gens).unwrap()
}

/// Lattice points outside the monomial ideal, counted by brute force in a box.
fn lattice_count(exps: &[Vec<u32>], bound: u32) -> usize {
    let mut n = 0;
    for a in 0..bound {
        for b in 0..bound {
            for c in 0..bound {
                let m = Monomial::from_exponents(&[a, b, c]);
                if !exps.iter().any(|e| Monomial::from_exponents(e).divides(&m)) {
                    n += 1;
                }
            }
        }
    }
    n
}

fn check_bases(gens: Vec<Polynomial>) -> Result<(), TestCaseError> {
    let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    prop_assume!(!gens.is_empty());
    let ring = gens[0].ring().clone();
    let i = Ideal::new(&ring, gens).unwrap();
    for ord in [MonomialOrder::Global, MonomialOrder::Local, MonomialOrder::elimination(&[0])] {
        let sb = standard_basis(&i, &ord, &cfg()).unwrap();
        prop_assert!(verify_buchberger(&sb).unwrap());
        for g in i.generators() {
            prop_assert!(contains(&sb, g).unwrap());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn local_colength_matches_truncation_oracle(gens in zero_dim_generators()) {
        let i = Ideal::new(&ring3(), gens).unwrap();
        let local = colength_at_origin(&i, &cfg()).unwrap();
        let oracle = truncation_colength(&i, &cfg()).unwrap();
        prop_assert!(local.is_finite());
        prop_assert_eq!(local.value(), oracle.value());
    }

    #[test]
    fn colength_ignores_generator_order_and_linear_mixing(gens in zero_dim_generators(), perm_seed in any::<u64>(), c in -3i64..=3) {
        let ring = ring3();
        let base = colength_at_origin(&Ideal::new(&ring, gens.clone()).unwrap(), &cfg()).unwrap().value();
        let mut shuffled = gens.clone();
        let k = shuffled.len();
        shuffled.rotate_left((perm_seed as usize) % k);
        shuffled.swap(0, k - 1);
        prop_assert_eq!(colength_at_origin(&Ideal::new(&ring, shuffled).unwrap(), &cfg()).unwrap().value(), base);
        let mut mixed = gens;
        mixed[2] = mixed[2].add(&mixed[0].mul(&Polynomial::from_i64(&ring, c)).unwrap()).unwrap();
        prop_assert_eq!(colength_at_origin(&Ideal::new(&ring, mixed).unwrap(), &cfg()).unwrap().value(), base);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn monomial_colength_matches_staircase_count(
        powers in prop::collection::vec(1u32..=5, 3),
        mixed in prop::collection::vec(exponents(5), 0..4),
    ) {
        let mut exps = mixed;
        for (i, a) in powers.iter().enumerate() {
            let mut e = vec![0; 3];
            e[i] = *a;
            exps.push(e);
        }
        exps.retain(|e| e.iter().any(|&x| x > 0));
        let i = monomial_ideal(&exps);
        let c = colength_at_origin(&i, &cfg()).unwrap();
        prop_assert_eq!(c.value(), Some(lattice_count(&exps, 6)));
        prop_assert_eq!(vector_space_dimension(&i, &cfg()).unwrap().value(), c.value());
    }

    #[test]
    fn emitted_bases_satisfy_buchberger(gens in prop::collection::vec(germ_in(ring3(), 3, 3), 1..4)) {
        check_bases(gens)?;
    }

    #[test]
    fn emitted_bases_satisfy_buchberger_over_parameter_field(gens in prop::collection::vec(germ_in(ring3t(), 2, 2), 1..3)) {
        check_bases(gens)?;
    }


    #[test]
    fn reduced_basis_is_independent_of_generator_order(gens in prop::collection::vec(germ_in(ring3(), 3, 3), 2..4)) {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(gens.len() >= 2);
        let ring = ring3();
        let a = standard_basis(&Ideal::new(&ring, gens.clone()).unwrap(), &MonomialOrder::Global, &cfg()).unwrap();
        let mut rev = gens;
        rev.reverse();
        let b = standard_basis(&Ideal::new(&ring, rev).unwrap(), &MonomialOrder::Global, &cfg()).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn saturation_is_idempotent_and_contains_the_ideal(
        gens in prop::collection::vec(germ_in(ring3(), 2, 3), 1..3),
        k in 0usize..3,
    ) {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ring = ring3();
        let i = Ideal::new(&ring, gens).unwrap();
        let kk = Ideal::of_vars(&ring, &[k]).unwrap();
        let s = saturate(&i, &kk, &cfg()).unwrap();
        prop_assert!(is_subideal(&i, &s, &cfg()).unwrap());
        let s2 = saturate(&s, &kk, &cfg()).unwrap();
        prop_assert!(ideals_equal(&s, &s2, &cfg()).unwrap());
        prop_assert!(ideals_equal(&s2, &s, &cfg()).unwrap());
    }
}
