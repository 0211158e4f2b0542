use std::collections::BTreeMap;

use super::field::Field;
use super::monomial::{cmp_degrevlex, Monomial};
use crate::error::Result;

/// Sparse multivariate polynomial with coefficients in a field `F`.
///
/// Variables are addressed by index only; names live in
/// [`Ring`](super::Ring). No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Default for SparsePoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> std::fmt::Debug for SparsePoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> SparsePoly<F> {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index, 1), F::one())
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, F> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, F> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Coefficient of the monomial `1`.
    pub fn constant_term(&self) -> F {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// One plus the largest variable index appearing in the polynomial.
    pub fn support_len(&self) -> usize {
        self.terms.keys().map(Monomial::support_len).max().unwrap_or(0)
    }

    pub fn involves(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exp(index) > 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term (the order at the origin).
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(index)).max().unwrap_or(0)
    }

    /// Leading term under degree reverse lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().max_by(|a, b| cmp_degrevlex(a.0, b.0))
    }

    pub fn leading_coeff(&self) -> F {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(F::zero)
    }

    /// Scaled so the degrevlex leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
        }
    }

    pub fn neg(&self) -> Self {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero());
        }
        let mut terms = BTreeMap::new();
        for (k, a) in &self.terms {
            terms.insert(k.mul(m)?, a.mul(c));
        }
        Ok(SparsePoly { terms })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                out.add_term(m1.mul(m2)?, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn derivative(&self, index: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(index);
            if e == 0 {
                continue;
            }
            let mut exps = m.dense(m.support_len().max(index + 1));
            exps[index] -= 1;
            out.add_term(Monomial::from_exponents(&exps), c.mul(&F::from_i64(e as i64)));
        }
        out
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> SparsePoly<G> {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Coefficients of `x_index^k` for `k = 0..=deg`, each with `x_index`
    /// removed from its monomials (the index slot is kept, set to zero).
    pub fn split_var(&self, index: usize) -> Vec<SparsePoly<F>> {
        let deg = self.degree_in(index) as usize;
        let mut parts = vec![Self::zero(); deg + 1];
        for (m, c) in &self.terms {
            parts[m.exp(index) as usize].add_term(m.without_var(index), c.clone());
        }
        parts
    }

    /// Inverse of [`split_var`](Self::split_var).
    pub fn join_var(index: usize, parts: &[SparsePoly<F>]) -> Result<Self> {
        let mut out = Self::zero();
        for (k, p) in parts.iter().enumerate() {
            let xk = Monomial::var(index, k as u32);
            for (m, c) in &p.terms {
                out.add_term(m.mul(&xk)?, c.clone());
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc_inv) = (lm.clone(), lc.inv());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = lm.quotient_of(m)?;
            let qc = c.mul(&lc_inv);
            let step = divisor.mul_term(&qm, &qc).ok()?;
            rem = rem.sub(&step);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Substitute `x_index = value` (a constant).
    pub fn eval_var(&self, index: usize, value: &F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(index);
            let mut f = c.clone();
            for _ in 0..e {
                f = f.mul(value);
            }
            out.add_term(m.without_var(index), f);
        }
        out
    }

    /// Rename variable indices: `map[i]` is the new index of variable `i`.
    pub fn reindex(&self, map: &[usize]) -> Self {
        let width = map.iter().copied().max().map(|m| m + 1).unwrap_or(0);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; width];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[map[i]] += e;
                }
            }
            out.add_term(Monomial::from_exponents(&exps), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rational;

    type P = SparsePoly<Rational>;

    fn x(i: usize) -> P {
        P::var(i)
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let a = x(0).add(&x(1));
        let sq = a.mul(&a).unwrap();
        let expected = x(0)
            .mul(&x(0))
            .unwrap()
            .add(&x(0).mul(&x(1)).unwrap().scale(&Rational::from_integer(2)))
            .add(&x(1).mul(&x(1)).unwrap());
        assert_eq!(sq, expected);
        assert!(sq.sub(&expected).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = x(0).add(&P::one());
        let b = x(1).sub(&x(0));
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.add(&P::one()).div_exact(&a), None);
    }

    #[test]
    fn split_and_join_roundtrip() {
        let p = x(0).pow(3).unwrap().add(&x(0).mul(&x(1)).unwrap()).add(&x(2));
        let parts = p.split_var(0);
        assert_eq!(parts.len(), 4);
        assert_eq!(P::join_var(0, &parts).unwrap(), p);
    }

    #[test]
    fn derivative_rule() {
        // d/dx0 (x0^3 x1) = 3 x0^2 x1
        let p = x(0).pow(3).unwrap().mul(&x(1)).unwrap();
        let d = p.derivative(0);
        assert_eq!(d, x(0).pow(2).unwrap().mul(&x(1)).unwrap().scale(&Rational::from_integer(3)));
        assert!(x(1).derivative(0).is_zero());
    }
}
