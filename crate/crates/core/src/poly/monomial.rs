use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
///
/// Stored without trailing zeros, so the same monomial has one
/// representation whatever the ambient variable count; index `i` beyond the
/// stored length has exponent zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v: SmallVec<[u32; 4]> = SmallVec::from_slice(exps);
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    /// `x_index^exp`.
    pub fn var(index: usize, exp: u32) -> Self {
        let mut v: SmallVec<[u32; 4]> = SmallVec::from_elem(0, index + 1);
        v[index] = exp;
        Monomial::from_exponents(&v)
    }

    #[inline]
    pub fn exp(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    /// Stored exponents (no trailing zeros).
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponents padded or truncated to exactly `n` entries.
    pub fn dense(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    /// Largest variable index with nonzero exponent plus one.
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let n = self.0.len().max(other.0.len());
        let mut v: SmallVec<[u32; 4]> = SmallVec::with_capacity(n);
        for i in 0..n {
            v.push(
                self.exp(i)
                    .checked_add(other.exp(i))
                    .ok_or(Error::ExponentOverflow)?,
            );
        }
        Ok(Monomial(v))
    }

    /// Multiplication for exponents already known to be small.
    #[inline]
    pub fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut v: SmallVec<[u32; 4]> = SmallVec::with_capacity(n);
        for i in 0..n {
            v.push(self.exp(i) + other.exp(i));
        }
        Monomial(v)
    }

    pub fn pow(&self, e: u32) -> Result<Monomial> {
        let mut v: SmallVec<[u32; 4]> = SmallVec::with_capacity(self.0.len());
        for &x in &self.0 {
            v.push(x.checked_mul(e).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial::from_exponents(&v))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let v: SmallVec<[u32; 4]> = (0..other.0.len()).map(|i| other.exp(i) - self.exp(i)).collect();
        Some(Monomial::from_exponents(&v))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let v: SmallVec<[u32; 4]> = (0..n).map(|i| self.exp(i).max(other.exp(i))).collect();
        Monomial(v)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().min(other.0.len());
        let v: SmallVec<[u32; 4]> = (0..n).map(|i| self.exp(i).min(other.exp(i))).collect();
        Monomial::from_exponents(&v)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent of `index` removed; later variables shift down by one.
    pub fn remove_var(&self, index: usize) -> Monomial {
        let mut v: SmallVec<[u32; 4]> = self.0.clone();
        if index < v.len() {
            v.remove(index);
        }
        Monomial::from_exponents(&v)
    }

    /// Same monomial with `index` set to zero.
    pub fn without_var(&self, index: usize) -> Monomial {
        let mut v: SmallVec<[u32; 4]> = self.0.clone();
        if index < v.len() {
            v[index] = 0;
        }
        Monomial::from_exponents(&v)
    }

    /// Weighted degree `sum exp_i * weights[i]`.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| e as u64 * weights.get(i).copied().unwrap_or(0))
            .sum()
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Degree reverse lexicographic comparison; `Greater` means `a` leads.
#[inline]
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => cmp_revlex_tail(a, b),
        ord => ord,
    }
}

/// Tie-break shared by the global and local degree orders: the monomial with
/// the smaller exponent in the last differing variable is larger.
#[inline]
pub fn cmp_revlex_tail(a: &Monomial, b: &Monomial) -> Ordering {
    let n = a.0.len().max(b.0.len());
    for i in (0..n).rev() {
        let (x, y) = (a.exp(i), b.exp(i));
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}
