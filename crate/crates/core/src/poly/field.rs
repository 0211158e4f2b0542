use std::fmt::Debug;

/// Exact coefficient field.
///
/// Implemented by [`Rational`](super::Rational) and by the parametric
/// fraction field [`RatFunc`](super::RatFunc). Constants need no context,
/// so `zero`/`one` are plain associated functions.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}
