//! Multivariate gcd over a field by the recursive primitive-PRS method.
//!
//! A polynomial is viewed as univariate in its highest variable with
//! coefficients in the polynomial ring of the remaining ones; contents are
//! computed recursively and the primitive parts are run through a
//! pseudo-remainder sequence.

use super::field::Field;
use super::monomial::Monomial;
use super::sparse::SparsePoly;

/// Greatest common divisor, normalized to a monic polynomial under
/// degrevlex. `gcd(0, 0)` is zero.
pub fn gcd<F: Field>(a: &SparsePoly<F>, b: &SparsePoly<F>) -> SparsePoly<F> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return SparsePoly::one();
    }
    if a == b {
        return a.monic();
    }
    let n = a.support_len().max(b.support_len());
    let v = (0..n)
        .rev()
        .find(|&i| a.involves(i) || b.involves(i))
        .expect("non-constant input has a variable");
    if !a.involves(v) {
        return gcd(a, &content(b, v));
    }
    if !b.involves(v) {
        return gcd(&content(a, v), b);
    }

    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_remainder(&p, &q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            q = SparsePoly::one();
            break;
        }
        p = q;
        // scaling by a field unit keeps coefficient sizes down
        q = primitive_part(&r, v).monic();
    }
    let g = primitive_part(&q, v);
    c.mul(&g).expect("gcd degree bounded by inputs").monic()
}

/// Gcd of every polynomial in the list.
pub fn gcd_all<'a, F: Field>(polys: impl IntoIterator<Item = &'a SparsePoly<F>>) -> SparsePoly<F> {
    let mut acc = SparsePoly::zero();
    for p in polys {
        acc = gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Content with respect to `x_v`: the gcd of the coefficients of the powers
/// of `x_v`.
pub fn content<F: Field>(a: &SparsePoly<F>, v: usize) -> SparsePoly<F> {
    let parts = a.split_var(v);
    gcd_all(parts.iter().filter(|p| !p.is_zero()))
}

pub fn primitive_part<F: Field>(a: &SparsePoly<F>, v: usize) -> SparsePoly<F> {
    if a.is_zero() {
        return SparsePoly::zero();
    }
    let c = content(a, v);
    a.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `p` by `q` as polynomials in `x_v`.
pub fn pseudo_remainder<F: Field>(p: &SparsePoly<F>, q: &SparsePoly<F>, v: usize) -> SparsePoly<F> {
    let dq = q.degree_in(v);
    let lcq = q.split_var(v).pop().expect("nonzero divisor");
    let mut r = p.clone();
    while !r.is_zero() && r.degree_in(v) >= dq {
        let dr = r.degree_in(v);
        let lcr = r.split_var(v).pop().expect("nonzero");
        let shift = lcr
            .mul_term(&Monomial::var(v, dr - dq), &F::one())
            .and_then(|s| s.mul(q))
            .expect("degrees bounded");
        r = lcq.mul(&r).expect("degrees bounded").sub(&shift);
    }
    r
}
