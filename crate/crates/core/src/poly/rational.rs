use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rational(self.0.recip())
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl FromStr for Rational {
    type Err = String;

    /// Accepts `p` or `p/q` with optional leading sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| format!("bad rational `{s}`"))?;
        let den: BigInt = den.parse().map_err(|_| format!("bad rational `{s}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        Ok(Rational::new(num, den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn parse_and_print() {
        let r: Rational = "10/3".parse().unwrap();
        assert_eq!(r.to_string(), "10/3");
        let r: Rational = "-12".parse().unwrap();
        assert_eq!(r.to_i64(), Some(-12));
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn field_ops() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 6);
        assert_eq!(a.add(&b), Rational::new(1, 2));
        assert_eq!(a.div(&b), Rational::from_integer(2));
    }
}
