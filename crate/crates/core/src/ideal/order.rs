use std::cmp::Ordering;

use crate::poly::{cmp_degrevlex, cmp_revlex_tail, Monomial};

/// Monomial orders used by the engine. `Greater` from [`MonomialOrder::cmp`]
/// means "leads".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic; a global well-order.
    Global,
    /// Negative degree reverse lexicographic: lower total degree leads, so
    /// the leading term of a unit is its constant term.
    Local,
    /// Degrevlex on the listed variables, ties broken by degrevlex on the
    /// rest. Any monomial involving a listed variable beats every monomial
    /// that does not.
    Elimination(Vec<usize>),
    /// Order on `K[z, h]` with the homogenizing variable `h` at the given
    /// index: total degree first, then the local order on the `z`-part. A
    /// global well-order whose leading term of a homogenized `f` is
    /// `h^ecart * LM_local(f)`.
    Homogenized(usize),
}

impl MonomialOrder {
    pub fn elimination(drop: &[usize]) -> Self {
        let mut d = drop.to_vec();
        d.sort_unstable();
        d.dedup();
        MonomialOrder::Elimination(d)
    }

    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::Local)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Global => cmp_degrevlex(a, b),
            MonomialOrder::Local => match b.degree().cmp(&a.degree()) {
                Ordering::Equal => cmp_revlex_tail(a, b),
                ord => ord,
            },
            MonomialOrder::Elimination(drop) => {
                let n = a.support_len().max(b.support_len());
                block_cmp(a, b, n, |i| drop.binary_search(&i).is_ok())
                    .then_with(|| block_cmp(a, b, n, |i| drop.binary_search(&i).is_err()))
            }
            // equal total and z-degree force equal powers of h
            MonomialOrder::Homogenized(h) => a.degree().cmp(&b.degree()).then_with(|| {
                (b.degree() - b.exp(*h)).cmp(&(a.degree() - a.exp(*h))).then_with(|| cmp_revlex_tail(a, b))
            }),
        }
    }
}

/// Degrevlex restricted to the variables selected by `inside`.
fn block_cmp(a: &Monomial, b: &Monomial, n: usize, inside: impl Fn(usize) -> bool) -> Ordering {
    let deg = |m: &Monomial| -> u32 { (0..n).filter(|&i| inside(i)).map(|i| m.exp(i)).sum() };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..n).rev().filter(|&i| inside(i)) {
        let (x, y) = (a.exp(i), b.exp(i));
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}
