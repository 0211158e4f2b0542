use super::field::Field;
use super::gcd::gcd;
use super::rational::Rational;
use super::sparse::SparsePoly;

/// Element of `Q(p_1, ..., p_k)`: a reduced fraction of rational
/// polynomials in the parameter variables.
///
/// Invariants: `num` and `den` are coprime, `den` is nonzero with degrevlex
/// leading coefficient one, and zero is stored as `0/1`. With no parameters
/// in play this is just a rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: SparsePoly<Rational>,
    den: SparsePoly<Rational>,
}

impl RatFunc {
    pub fn from_rational(r: Rational) -> Self {
        RatFunc { num: SparsePoly::constant(r), den: SparsePoly::one() }
    }

    pub fn from_poly(p: SparsePoly<Rational>) -> Self {
        RatFunc { num: p, den: SparsePoly::one() }
    }

    /// Builds `num/den`, reducing the fraction. Panics if `den` is zero.
    pub fn from_fraction(num: SparsePoly<Rational>, den: SparsePoly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.constant_term().inv();
            return RatFunc { num: num.scale(&c), den: SparsePoly::one() };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &SparsePoly<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &SparsePoly<Rational> {
        &self.den
    }

    /// True when the value is a polynomial in the parameters.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is a rational constant.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    /// Value at the origin of parameter space, if the denominator does not
    /// vanish there.
    pub fn constant_term(&self) -> Option<Rational> {
        let d = self.den.constant_term();
        if d.is_zero() {
            None
        } else {
            Some(self.num.constant_term().div(&d))
        }
    }

    /// Highest parameter index used, plus one.
    pub fn param_support(&self) -> usize {
        self.num.support_len().max(self.den.support_len())
    }

    /// Substitute parameter `index = value`. Returns `None` when the
    /// denominator vanishes at the value.
    pub fn eval_param(&self, index: usize, value: &Rational) -> Option<RatFunc> {
        let den = self.den.eval_var(index, value);
        if den.is_zero() {
            return None;
        }
        Some(RatFunc::from_fraction(self.num.eval_var(index, value), den))
    }

    pub fn reindex_params(&self, map: &[usize]) -> RatFunc {
        RatFunc::from_fraction(self.num.reindex(map), self.den.reindex(map))
    }

    #[inline]
    fn both_polynomial(&self, other: &Self) -> bool {
        self.den.is_one() && other.den.is_one()
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc { num: SparsePoly::zero(), den: SparsePoly::one() }
    }
    fn one() -> Self {
        RatFunc { num: SparsePoly::one(), den: SparsePoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        if self.both_polynomial(other) {
            return RatFunc { num: self.num.add(&other.num), den: SparsePoly::one() };
        }
        if self.den == other.den {
            return RatFunc::from_fraction(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).and_then(|a| other.num.mul(&self.den).map(|b| a.add(&b)));
        let den = self.den.mul(&other.den);
        RatFunc::from_fraction(num.expect("parameter degree overflow"), den.expect("parameter degree overflow"))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.both_polynomial(other) {
            let num = self.num.mul(&other.num).expect("parameter degree overflow");
            return RatFunc { num, den: SparsePoly::one() };
        }
        if other.is_constant() {
            return RatFunc { num: self.num.scale(&other.num.constant_term()), den: self.den.clone() };
        }
        if self.is_constant() {
            return RatFunc { num: other.num.scale(&self.num.constant_term()), den: other.den.clone() };
        }
        let num = self.num.mul(&other.num).expect("parameter degree overflow");
        let den = self.den.mul(&other.den).expect("parameter degree overflow");
        RatFunc::from_fraction(num, den)
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::from_fraction(self.den.clone(), self.num.clone())
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::from_rational(Rational::from_integer(v))
    }
}

impl std::fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn t() -> SparsePoly<Rational> {
        SparsePoly::var(0)
    }

    fn c(v: i64) -> SparsePoly<Rational> {
        SparsePoly::constant(Rational::from_integer(v))
    }

    #[test]
    fn fraction_is_reduced() {
        // (t^2 - 1) / (2t - 2) = (t + 1) / 2
        let num = t().mul(&t()).unwrap().sub(&c(1));
        let den = t().scale(&Rational::from_integer(2)).sub(&c(2));
        let r = RatFunc::from_fraction(num, den);
        assert!(r.is_polynomial());
        assert_eq!(r.numer(), &t().add(&c(1)).scale(&Rational::new(1, 2)));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = RatFunc::from_poly(t().add(&c(3)));
        let b = a.inv();
        assert!(a.mul(&b).is_one());
        assert!(b.add(&b.neg()).is_zero());
    }

    #[test]
    fn eval_detects_pole() {
        let a = RatFunc::from_poly(t()).inv();
        assert!(a.eval_param(0, &Rational::from_integer(0)).is_none());
        let v = a.eval_param(0, &Rational::from_integer(4)).unwrap();
        assert_eq!(v.as_rational(), Some(Rational::new(1, 4)));
        let _ = Monomial::one();
    }
}
