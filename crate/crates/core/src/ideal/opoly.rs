//! Term lists kept sorted by a monomial order, for the reduction kernels.

use std::cmp::Ordering;

use super::order::MonomialOrder;
use crate::poly::{Field, Monomial, RatFunc, Rational, SparsePoly};

/// Coefficient fields the engine runs over: plain rationals when no
/// parameter occurs, parametric fractions otherwise.
pub(crate) trait Coeff: Field {
    fn from_ratfunc(c: &RatFunc) -> Option<Self>;
    fn to_ratfunc(&self) -> RatFunc;
}

impl Coeff for Rational {
    fn from_ratfunc(c: &RatFunc) -> Option<Self> {
        c.as_rational()
    }
    fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from_rational(self.clone())
    }
}

impl Coeff for RatFunc {
    fn from_ratfunc(c: &RatFunc) -> Option<Self> {
        Some(c.clone())
    }
    fn to_ratfunc(&self) -> RatFunc {
        self.clone()
    }
}

/// Polynomial as a term vector, leading term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OPoly<F> {
    pub terms: Vec<(Monomial, F)>,
}

impl<F: Coeff> OPoly<F> {
    pub fn zero() -> Self {
        OPoly { terms: Vec::new() }
    }

    pub fn from_sparse(p: &SparsePoly<RatFunc>, ord: &MonomialOrder) -> Option<Self> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            terms.push((m.clone(), F::from_ratfunc(c)?));
        }
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Some(OPoly { terms })
    }

    pub fn to_sparse(&self) -> SparsePoly<RatFunc> {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.to_ratfunc())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &F {
        &self.terms[0].1
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// `deg(p) - deg(LM(p))`; zero for global orders' homogeneous input.
    pub fn ecart(&self) -> u32 {
        self.max_degree() - self.lm().degree()
    }

    pub fn monic(mut self) -> Self {
        if self.is_zero() || self.lc().is_one() {
            return self;
        }
        let inv = self.lc().inv();
        for t in &mut self.terms {
            t.1 = t.1.mul(&inv);
        }
        self
    }

    /// `self - c * m * g`, merging in order.
    pub fn sub_scaled(&self, c: &F, m: &Monomial, g: &OPoly<F>, ord: &MonomialOrder) -> OPoly<F> {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul_unchecked(m), gc)).peekable();
        loop {
            let which = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            };
            match which {
                Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                Ordering::Less => {
                    let (bm, bc) = b.next().expect("peeked");
                    out.push((bm, bc.mul(c).neg()));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().expect("peeked");
                    let (_, bc) = b.next().expect("peeked");
                    let v = ac.sub(&bc.mul(c));
                    if !v.is_zero() {
                        out.push((am.clone(), v));
                    }
                }
            }
        }
        OPoly { terms: out }
    }

    /// Cancels the leading term of `self` against `g`, whose leading monomial
    /// must divide it.
    pub fn reduce_lead(&self, g: &OPoly<F>, ord: &MonomialOrder) -> OPoly<F> {
        let m = g.lm().quotient_of(self.lm()).expect("reducer divides");
        let c = self.lc().div(g.lc());
        self.sub_scaled(&c, &m, g, ord)
    }

    pub fn spoly(f: &OPoly<F>, g: &OPoly<F>, ord: &MonomialOrder) -> OPoly<F> {
        let l = f.lm().lcm(g.lm());
        let mf = f.lm().quotient_of(&l).expect("lcm");
        let mg = g.lm().quotient_of(&l).expect("lcm");
        let fi = f.lc().inv();
        let scaled = OPoly { terms: f.terms.iter().map(|(m, c)| (m.mul_unchecked(&mf), c.mul(&fi))).collect() };
        scaled.sub_scaled(&g.lc().inv(), &mg, g, ord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(terms: &[(&[u32], i64)], ord: &MonomialOrder) -> OPoly<Rational> {
        let sp = SparsePoly::from_terms(
            terms.iter().map(|(e, c)| (Monomial::from_exponents(e), RatFunc::from_rational(Rational::from_integer(*c)))),
        );
        OPoly::from_sparse(&sp, ord).unwrap()
    }

    #[test]
    fn spoly_of_textbook_pair() {
        // local order: S(2x^2 + 5y^3, 2xy^2) = 5/2 y^5 after normalization
        let ord = MonomialOrder::Local;
        let f = op(&[(&[2], 2), (&[0, 3], 5)], &ord);
        let g = op(&[(&[1, 2], 2)], &ord);
        let s = OPoly::spoly(&f, &g, &ord);
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.lm(), &Monomial::from_exponents(&[0, 5]));
        assert_eq!(s.lc(), &Rational::new(5, 2));
    }

    #[test]
    fn sorted_by_order() {
        let g = op(&[(&[], 1), (&[3], 1), (&[1], 1)], &MonomialOrder::Global);
        assert_eq!(g.lm(), &Monomial::from_exponents(&[3]));
        let l = op(&[(&[], 1), (&[3], 1), (&[1], 1)], &MonomialOrder::Local);
        assert!(l.lm().is_one());
        assert_eq!(l.ecart(), 3);
    }
}
