use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, Polynomial, Rational};

/// Positive integer weights and a weighted degree, normalized so that
/// `gcd(w_1, ..., w_n, d) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<u64>,
    degree: u64,
    free: Vec<bool>,
    ambiguous: bool,
}

impl WeightSystem {
    /// A user-supplied system; `free` marks weights not pinned by the
    /// polynomial.
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<WeightSystem> {
        if weights.is_empty() || weights.contains(&0) || degree == 0 {
            return Err(Error::WeightMismatch("weights and degree must be positive".into()));
        }
        let free = vec![false; weights.len()];
        Ok(WeightSystem { weights, degree, free, ambiguous: false })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// True for a variable absent from the polynomial, whose weight was
    /// chosen rather than determined.
    pub fn is_free(&self, i: usize) -> bool {
        self.free[i]
    }

    pub fn free_flags(&self) -> &[bool] {
        &self.free
    }

    /// True when the determined block admitted several independent weight
    /// vectors and one positive solution was picked.
    pub fn is_ambiguous(&self) -> bool {
        self.ambiguous
    }

    /// Index of the smallest weight among the non-free variables (first one
    /// on ties).
    pub fn i0(&self) -> usize {
        (0..self.weights.len())
            .filter(|&i| !self.free[i])
            .min_by_key(|&i| (self.weights[i], i))
            .expect("at least one determined weight")
    }

    pub fn w_i0(&self) -> u64 {
        self.weights[self.i0()]
    }

    /// `w_{i0} | d`.
    pub fn smallest_divides_degree(&self) -> bool {
        self.degree.is_multiple_of(self.w_i0())
    }

    /// `d / w_i` as an exact rational.
    pub fn ratio(&self, i: usize) -> Rational {
        Rational::new(self.degree, self.weights[i])
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.weights)
    }

    /// True when every monomial of `f` has weighted degree `d`.
    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        f.ring().nvars() == self.weights.len()
            && !f.is_zero()
            && f.terms().keys().all(|m| self.weighted_degree(m) == self.degree)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, w) in self.weights.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
            if self.free[k] {
                write!(f, "*")?;
            }
        }
        write!(f, "), d={}", self.degree)
    }
}

/// Basis of the nullspace of a rational matrix (rows of equal length).
pub(crate) fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = m[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Scales a positive rational vector to coprime positive integers.
fn to_coprime_integers(v: &[Rational]) -> Option<Vec<u64>> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    ints.iter().map(|x| (x / &g).abs().to_u64()).collect()
}

/// Candidate integer combinations of nullspace vectors tried when the
/// solution space has dimension above one.
const COMBINATION_RANGE: i64 = 4;

/// Detects a weight system making `f` weighted homogeneous.
///
/// Variables absent from `f` are FREE and receive `w_max + 1`. Returns `None`
/// when no positive solution exists.
pub fn detect_weights(f: &Polynomial) -> Result<Option<WeightSystem>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("weights of the zero polynomial"));
    }
    if !f.has_rational_coefficients() {
        return Err(Error::InvalidArgument("weight detection needs a polynomial without parameters".into()));
    }
    let n = f.ring().nvars();
    let present: Vec<usize> = (0..n).filter(|&i| f.involves_var(i)).collect();
    if present.is_empty() {
        return Ok(None);
    }
    let k = present.len();
    // unknowns: w_{present[0]}, ..., w_{present[k-1]}, d
    let rows: Vec<Vec<Rational>> = f
        .terms()
        .keys()
        .map(|m| {
            let mut row: Vec<Rational> = present.iter().map(|&i| Rational::from_integer(m.exp(i) as i64)).collect();
            row.push(Rational::from_integer(-1));
            row
        })
        .collect();
    let basis = nullspace(&rows, k + 1);
    let positive = |v: &[Rational]| v.iter().all(|x| !x.is_zero() && !x.is_negative());
    let normalize = |v: Vec<Rational>| -> Option<Vec<Rational>> {
        if positive(&v) {
            Some(v)
        } else if v.iter().all(|x| !x.is_zero() && x.is_negative()) {
            Some(v.iter().map(Rational::neg).collect())
        } else {
            None
        }
    };
    let (solution, ambiguous) = match basis.len() {
        0 => return Ok(None),
        1 => match normalize(basis[0].clone()) {
            Some(v) => (v, false),
            None => return Ok(None),
        },
        _ => match search_positive(&basis) {
            Some(v) => (v, true),
            None => return Ok(None),
        },
    };
    let Some(ints) = to_coprime_integers(&solution) else { return Ok(None) };
    let degree = ints[k];
    let wmax = ints[..k].iter().copied().max().unwrap_or(1);
    let mut weights = vec![wmax + 1; n];
    let mut free = vec![true; n];
    for (j, &i) in present.iter().enumerate() {
        weights[i] = ints[j];
        free[i] = false;
    }
    let ws = WeightSystem { weights, degree, free, ambiguous };
    if !ws.is_homogeneous(f) {
        return Err(Error::Internal(format!("detected weights {ws} do not fit {f}")));
    }
    Ok(Some(ws))
}

/// Small integer combination of the basis with every entry positive,
/// preferring the smallest normalized degree.
fn search_positive(basis: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let dim = basis.len();
    let width = basis[0].len();
    let span = (2 * COMBINATION_RANGE + 1) as usize;
    let total = span.checked_pow(dim as u32)?;
    let mut best: Option<(Vec<u64>, Vec<Rational>)> = None;
    for idx in 0..total {
        let mut rest = idx;
        let mut v = vec![Rational::zero(); width];
        for b in basis {
            let c = (rest % span) as i64 - COMBINATION_RANGE;
            rest /= span;
            if c != 0 {
                let cr = Rational::from_integer(c);
                for (x, y) in v.iter_mut().zip(b) {
                    *x = x.add(&y.mul(&cr));
                }
            }
        }
        if !v.iter().all(|x| !x.is_zero() && !x.is_negative()) {
            continue;
        }
        let Some(ints) = to_coprime_integers(&v) else { continue };
        let key: Vec<u64> = std::iter::once(ints[width - 1]).chain(ints[..width - 1].iter().copied()).collect();
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, v));
        }
    }
    best.map(|(_, v)| v)
}

/// `prod_{i in indices} (d / w_i - 1)`, required to be a non-negative
/// integer.
pub fn milnor_orlik(w: &WeightSystem, indices: &[usize]) -> Result<u64> {
    let mut acc = Rational::one();
    for &i in indices {
        if i >= w.weights.len() {
            return Err(Error::InvalidArgument(format!("weight index {i} out of range")));
        }
        acc = acc.mul(&w.ratio(i).sub(&Rational::one()));
    }
    if !acc.is_integer() || acc.is_negative() {
        return Err(Error::NonIntegerResult(acc.to_string()));
    }
    acc.to_i64()
        .map(|v| v as u64)
        .ok_or_else(|| Error::NonIntegerResult(acc.to_string()))
}
