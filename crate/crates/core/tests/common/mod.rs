#![allow(dead_code)]

use std::sync::Arc;

use lecalc_core::poly::{Monomial, Polynomial, RatFunc, Rational, Ring, SparsePoly};
use proptest::prelude::*;

pub fn ring3() -> Arc<Ring> {
    Ring::new(&["z1", "z2", "z3"], &[]).unwrap()
}

pub fn ring3t() -> Arc<Ring> {
    Ring::new(&["z1", "z2", "z3"], &["t"]).unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| Rational::new(a, b))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| r.to_i64() != Some(0))
}

/// Coefficient in Q(t): `c t^k`, optionally over `1 + t`.
pub fn coefficient(with_t: bool) -> BoxedStrategy<RatFunc> {
    coefficient_with(with_t, true)
}

pub fn coefficient_with(with_t: bool, fractions: bool) -> BoxedStrategy<RatFunc> {
    if !with_t {
        return nonzero_rational().prop_map(RatFunc::from_rational).boxed();
    }
    (nonzero_rational(), 0u32..3, any::<bool>())
        .prop_map(move |(c, k, frac)| {
            let num = SparsePoly::from_terms([(Monomial::var(0, k), c)]);
            if frac && fractions {
                let den = SparsePoly::from_terms([
                    (Monomial::one(), Rational::from_integer(1)),
                    (Monomial::var(0, 1), Rational::from_integer(1)),
                ]);
                RatFunc::from_fraction(num, den)
            } else {
                RatFunc::from_poly(num)
            }
        })
        .boxed()
}

pub fn exponents(max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_deg, 3).prop_filter("bounded degree", move |e| e.iter().sum::<u32>() <= max_deg)
}

pub fn polynomial_in(ring: Arc<Ring>, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    polynomial_with(ring, max_terms, max_deg, true)
}

/// Without `fractions` every coefficient is a polynomial in the parameters,
/// which is what the expression grammar can write down.
pub fn polynomial_with(ring: Arc<Ring>, max_terms: usize, max_deg: u32, fractions: bool) -> impl Strategy<Value = Polynomial> {
    let with_t = ring.nparams() > 0;
    prop::collection::vec((exponents(max_deg), coefficient_with(with_t, fractions)), 0..=max_terms).prop_map(move |terms| {
        let mut p = Polynomial::zero(&ring);
        for (e, c) in terms {
            p = p.add(&Polynomial::monomial(&ring, &e, c)).unwrap();
        }
        p
    })
}

/// Polynomial with no constant term.
pub fn germ_in(ring: Arc<Ring>, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let r = ring.clone();
    polynomial_in(ring, max_terms, max_deg).prop_map(move |p| p.sub(&Polynomial::constant(&r, p.constant_term())).unwrap())
}

/// Generators `z_i^{a_i} + (terms of degree > a_i)`, plus optional extra
/// germs, mixed by a unimodular integer matrix. The local leading ideal
/// contains a power of every variable, so the colength is finite.
pub fn zero_dim_generators() -> impl Strategy<Value = Vec<Polynomial>> {
    let ring = ring3();
    (
        prop::collection::vec(1u32..=4, 3),
        prop::collection::vec(polynomial_in(ring.clone(), 2, 5), 3),
        prop::collection::vec(germ_in(ring.clone(), 2, 3), 0..=1),
        -2i64..=2,
        -2i64..=2,
    )
        .prop_map(move |(powers, tails, extra, s, u)| {
            let mut gens = Vec::new();
            for (i, (a, tail)) in powers.iter().zip(tails).enumerate() {
                let high: Polynomial = Polynomial::from_sparse(
                    &ring,
                    SparsePoly::from_terms(
                        tail.terms().iter().filter(|(m, _)| m.degree() > *a).map(|(m, c)| (m.clone(), c.clone())),
                    ),
                );
                let mut e = vec![0; 3];
                e[i] = *a;
                gens.push(Polynomial::monomial(&ring, &e, RatFunc::from_rational(Rational::from_integer(1))).add(&high).unwrap());
            }
            // unimodular mix: g0 += s*g1, g1 += u*g2
            let s = Polynomial::from_i64(&ring, s);
            let u = Polynomial::from_i64(&ring, u);
            gens[0] = gens[0].add(&s.mul(&gens[1]).unwrap()).unwrap();
            gens[1] = gens[1].add(&u.mul(&gens[2]).unwrap()).unwrap();
            gens.extend(extra.into_iter().filter(|g| !g.is_zero()));
            gens
        })
}

/// Invertible integer 3x3 matrix as a product of a permutation and unit
/// lower and upper triangular factors.
pub fn invertible_matrix() -> impl Strategy<Value = [[i64; 3]; 3]> {
    (Just([0usize, 1, 2]).prop_shuffle(), prop::array::uniform3(-2i64..=2), prop::array::uniform3(-2i64..=2)).prop_map(
        |(perm, l, u)| {
            let lower = [[1, 0, 0], [l[0], 1, 0], [l[1], l[2], 1]];
            let upper = [[1, u[0], u[1]], [0, 1, u[2]], [0, 0, 1]];
            let mut m = [[0i64; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    m[perm[i]][j] = (0..3).map(|k| lower[i][k] * upper[k][j]).sum();
                }
            }
            m
        },
    )
}

/// `f(M z)` for a linear change of coordinates.
pub fn linear_change(f: &Polynomial, m: &[[i64; 3]; 3]) -> Polynomial {
    let ring = f.ring();
    let images: Vec<Polynomial> = m
        .iter()
        .map(|row| {
            let mut p = Polynomial::zero(ring);
            for (j, &c) in row.iter().enumerate() {
                p = p.add(&Polynomial::var(ring, j).mul(&Polynomial::from_i64(ring, c)).unwrap()).unwrap();
            }
            p
        })
        .collect();
    f.substitute(&images, ring).unwrap()
}

/// All exponent vectors of weighted degree `d` for `w`.
pub fn weighted_monomials(w: &[u64], d: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for a in 0..=d / w[0] {
        for b in 0..=(d - a * w[0]) / w[1] {
            let rest = d - a * w[0] - b * w[1];
            if rest.is_multiple_of(w[2]) {
                out.push(vec![a as u32, b as u32, (rest / w[2]) as u32]);
            }
        }
    }
    out
}

/// Weighted homogeneous polynomial for random weights in 1..=4 and a degree
/// that is a multiple of their lcm, with at least three terms.
pub fn weighted_homogeneous() -> impl Strategy<Value = (Polynomial, Vec<u64>, u64)> {
    (prop::collection::vec(1u64..=4, 3), 1u64..=2, any::<u64>(), prop::collection::vec(nonzero_rational(), 12))
        .prop_map(|(w, k, pick, coeffs)| {
            let l = w.iter().fold(1u64, |acc, &x| num_lcm(acc, x));
            let d = l * k;
            let mons = weighted_monomials(&w, d);
            let ring = ring3();
            let mut p = Polynomial::zero(&ring);
            let mut used = 0;
            for (idx, e) in mons.iter().enumerate() {
                // keep the pure powers of z2 and z3 and a random subset of the rest
                let pure = e.iter().filter(|&&x| x > 0).count() == 1 && e[0] == 0;
                if pure || (pick >> (idx % 64)) & 1 == 1 {
                    let c = coeffs[used % coeffs.len()].clone();
                    used += 1;
                    p = p.add(&Polynomial::monomial(&ring, e, RatFunc::from_rational(c))).unwrap();
                }
            }
            (p, w, d)
        })
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}
