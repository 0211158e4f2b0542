//! Exact sparse polynomial arithmetic over `Q` and over parametric fraction
//! fields `Q(p_1, ..., p_k)`, with an expression parser and printer.

mod field;
mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod ratfunc;
mod rational;
mod ring;
mod sparse;

pub use field::Field;
pub use gcd::{content as sparse_content, gcd as sparse_gcd, gcd_all as sparse_gcd_all};
pub use monomial::{cmp_degrevlex, cmp_revlex_tail, Monomial};
pub use parse::{identifiers, parse_polynomial};
pub use polynomial::Polynomial;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use ring::Ring;
pub use sparse::SparsePoly;

use crate::error::{Error, Result};

/// Gcd of two polynomials in the same ring, monic under degrevlex.
pub fn multivariate_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.ring() != q.ring() {
        return Err(Error::ContextMismatch(format!("{} vs {}", p.ring(), q.ring())));
    }
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroInput("gcd of two zero polynomials"));
    }
    Ok(Polynomial::from_sparse(p.ring(), gcd::gcd(p.sparse(), q.sparse())))
}

/// The gcd of `f` with all its first partials. Constant exactly when `f` is
/// squarefree.
pub fn square_factor_witness(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroInput("reducedness of the zero polynomial"));
    }
    if proved_squarefree(f.sparse(), f.ring().nparams()) {
        return Ok(Polynomial::one(f.ring()));
    }
    let grads = f.gradient();
    let g = gcd::gcd_all(std::iter::once(f.sparse()).chain(grads.iter().map(Polynomial::sparse)));
    Ok(Polynomial::from_sparse(f.ring(), g))
}

/// Evaluation points tried for the univariate images.
const IMAGE_POINTS: [(i64, i64); 4] = [(3, 1), (-5, 2), (7, 3), (-11, 5)];

/// Exact squarefreeness proof through univariate images in the first
/// variable `v` of `f`: if `f(z_v; a)` is squarefree and the leading
/// coefficient in `z_v` survives at `a`, no square factor of `f` involves
/// `z_v`. What is left is a square factor of the content in `z_v`, handled
/// recursively. `false` only means that no proof was found.
fn proved_squarefree(f: &SparsePoly<RatFunc>, nparams: usize) -> bool {
    if f.is_constant() {
        return true;
    }
    let v = (0..f.support_len()).find(|&i| f.involves(i)).expect("non-constant");
    let parts = f.split_var(v);
    let image_ok = IMAGE_POINTS.iter().enumerate().any(|(k, _)| univariate_image_squarefree(&parts, nparams, k));
    image_ok && proved_squarefree(&gcd::content(f, v), nparams)
}

fn univariate_image_squarefree(parts: &[SparsePoly<RatFunc>], nparams: usize, shift: usize) -> bool {
    let point = |i: usize| {
        let (a, b) = IMAGE_POINTS[(i + shift) % IMAGE_POINTS.len()];
        Rational::new(a + i as i64, b)
    };
    let eval = |p: &SparsePoly<RatFunc>| -> Option<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in p.terms() {
            let mut c = c.clone();
            for j in 0..nparams {
                c = c.eval_param(j, &point(j + 7))?;
            }
            let mut term = c.as_rational()?;
            for (i, &e) in m.exponents().iter().enumerate() {
                let x = point(i);
                for _ in 0..e {
                    term = term.mul(&x);
                }
            }
            acc = acc.add(&term);
        }
        Some(acc)
    };
    let mut u: Vec<Rational> = Vec::with_capacity(parts.len());
    for p in parts {
        match eval(p) {
            Some(c) => u.push(c),
            None => return false,
        }
    }
    if u.last().is_none_or(Field::is_zero) {
        return false;
    }
    let du: Vec<Rational> = u.iter().enumerate().skip(1).map(|(k, c)| c.mul(&Rational::from_integer(k as i64))).collect();
    univariate_gcd_degree(u, du) == 0
}

/// Degree of the gcd of two dense univariate polynomials over Q.
fn univariate_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Field::is_zero) {
            p.pop();
        }
    }
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lb = b.last().expect("nonempty").inv();
        while a.len() >= b.len() {
            let q = a.last().expect("nonempty").mul(&lb);
            let off = a.len() - b.len();
            for (k, c) in b.iter().enumerate() {
                a[off + k] = a[off + k].sub(&q.mul(c));
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Squarefree test: in characteristic zero `f` is reduced iff the gcd of
/// `f` and its partials is a nonzero constant.
pub fn is_reduced(f: &Polynomial) -> Result<bool> {
    Ok(square_factor_witness(f)?.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> std::sync::Arc<Ring> {
        Ring::new(&["z1", "z2", "z3"], &[]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &ring()).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(multivariate_gcd(&p("z1^2*z2"), &p("z1*z2^2")).unwrap(), p("z1*z2"));
        assert_eq!(multivariate_gcd(&p("z1^3 + z2"), &p("1")).unwrap(), p("1"));
        assert_eq!(multivariate_gcd(&p("z1^2*(1+z1)"), &p("2*z1 + 3*z1^2")).unwrap(), p("z1"));
        assert!(matches!(multivariate_gcd(&p("0"), &p("0")), Err(Error::ZeroInput(_))));
    }

    #[test]
    fn reducedness_examples() {
        assert!(is_reduced(&p("z1^2*z2^2 + z2^5 + z3^4")).unwrap());
        assert!(!is_reduced(&p("z1^2*z2")).unwrap());
        assert!(is_reduced(&p("z1*z2*z3")).unwrap());
        assert_eq!(square_factor_witness(&p("z1^2*z2")).unwrap(), p("z1"));
        assert!(is_reduced(&p("0")).is_err());
        // square factors hidden in the content with respect to z1
        assert!(!is_reduced(&p("z2^2*z1 + z2^2*z3")).unwrap());
        assert!(is_reduced(&p("z2*z3*(z1^2 + z3)")).unwrap());
        assert_eq!(square_factor_witness(&p("(z2 + z3)^2*(z1 + 1)")).unwrap(), p("z2 + z3"));
    }

    #[test]
    fn reducedness_over_parameter_field() {
        let r = Ring::new(&["z1", "z2"], &["t"]).unwrap();
        let f = parse_polynomial("(z1 + t*z2)^2*z2", &r).unwrap();
        let w = square_factor_witness(&f).unwrap();
        assert_eq!(w, parse_polynomial("z1 + t*z2", &r).unwrap().monic());
        assert!(!is_reduced(&f).unwrap());
    }
}
