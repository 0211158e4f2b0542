//! Buchberger's algorithm for global orders, and local standard bases by
//! Lazard's homogenization: a Gröbner basis of the homogenized generators
//! for [`MonomialOrder::Homogenized`] gives a standard basis after `h = 1`.
//! Mora's weak normal form is kept for reduction against a finished local
//! basis. Critical pairs use the Gebauer–Möller update.
//!
//! Once the leading ideal of a local basis contains a power of every
//! variable, `m^N` lies in the ideal for `N` one above the highest corner,
//! and the rest of the computation runs modulo `m^N`.

use std::cmp::Ordering;

use super::opoly::{Coeff, OPoly};
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// `f` made homogeneous with the variable at index `h`.
fn homogenize<F: Coeff>(f: &OPoly<F>, h: usize, ord: &MonomialOrder) -> OPoly<F> {
    let d = f.max_degree();
    let mut terms: Vec<(Monomial, F)> =
        f.terms.iter().map(|(m, c)| (m.mul_unchecked(&Monomial::var(h, d - m.degree())), c.clone())).collect();
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    OPoly { terms }
}

/// `f` at `h = 1`. Terms of a homogeneous `f` with equal `z`-part have equal
/// degree in `h`, so no two terms merge.
fn dehomogenize<F: Coeff>(f: OPoly<F>, h: usize, ord: &MonomialOrder) -> OPoly<F> {
    let mut terms: Vec<(Monomial, F)> = f.terms.into_iter().map(|(m, c)| (m.without_var(h), c)).collect();
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    OPoly { terms }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

pub(crate) struct Kernel<'a> {
    pub ord: &'a MonomialOrder,
    budget: usize,
    steps: usize,
    nvars: usize,
    /// Index of the homogenizing variable.
    hom: Option<usize>,
}

impl<'a> Kernel<'a> {
    pub fn new(ord: &'a MonomialOrder, budget: usize) -> Self {
        Kernel { ord, budget, steps: 0, nvars: 0, hom: None }
    }

    /// Enables highest-corner truncation for the local order in `n` variables.
    pub fn with_vars(mut self, n: usize) -> Self {
        self.nvars = n;
        self
    }

    /// `N` with `m^N` inside the leading ideal of `basis`, when it exists.
    fn corner_cut<F: Coeff>(&self, basis: &[OPoly<F>]) -> Option<u32> {
        if !(self.ord.is_local() || self.hom.is_some()) || self.nvars == 0 {
            return None;
        }
        let leading: Vec<Monomial> = basis.iter().map(|g| self.z_part(g.lm())).collect();
        let stairs = super::staircase(&leading, self.nvars)?;
        Some(stairs.iter().map(Monomial::degree).max().map_or(0, |d| d + 1))
    }

    fn z_part(&self, m: &Monomial) -> Monomial {
        match self.hom {
            Some(h) => m.without_var(h),
            None => m.clone(),
        }
    }

    /// Degree compared against the truncation cut.
    fn cut_degree(&self, m: &Monomial) -> u32 {
        match self.hom {
            Some(h) => m.degree() - m.exp(h),
            None => m.degree(),
        }
    }

    fn truncate<F: Coeff>(&self, p: &mut OPoly<F>, cut: u32) {
        p.terms.retain(|(m, _)| self.cut_degree(m) < cut);
    }

    #[inline]
    fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(Error::BudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    /// Full reduction against a basis for a global order.
    pub fn reduce_full<F: Coeff>(&mut self, p: OPoly<F>, basis: &[OPoly<F>]) -> Result<OPoly<F>> {
        let mut rem: Vec<(Monomial, F)> = Vec::new();
        let mut h = p;
        while !h.is_zero() {
            match basis.iter().find(|g| g.lm().divides(h.lm())) {
                Some(g) => {
                    self.step()?;
                    h = h.reduce_lead(g, self.ord);
                }
                None => rem.push(h.terms.remove(0)),
            }
        }
        Ok(OPoly { terms: rem })
    }

    /// Mora's weak normal form: returns `h` with `u*p - h` in the ideal for
    /// a unit `u`, and `LM(h)` not divisible by any leading monomial of
    /// `basis` (or `h = 0`).
    pub fn mora_nf<F: Coeff>(&mut self, p: OPoly<F>, basis: &[OPoly<F>]) -> Result<OPoly<F>> {
        let mut h = p;
        let ecarts: Vec<u32> = basis.iter().map(OPoly::ecart).collect();
        let mut extra: Vec<(OPoly<F>, u32)> = Vec::new();
        while !h.is_zero() {
            let mut best: Option<(u32, bool, usize)> = None;
            for (k, g) in basis.iter().enumerate() {
                if g.lm().divides(h.lm()) && best.is_none_or(|b| ecarts[k] < b.0) {
                    best = Some((ecarts[k], false, k));
                }
            }
            for (k, (g, e)) in extra.iter().enumerate() {
                if g.lm().divides(h.lm()) && best.is_none_or(|b| *e < b.0) {
                    best = Some((*e, true, k));
                }
            }
            let Some((eg, from_extra, k)) = best else { break };
            self.step()?;
            let eh = h.ecart();
            let next = {
                let g = if from_extra { &extra[k].0 } else { &basis[k] };
                h.reduce_lead(g, self.ord)
            };
            if eg > eh {
                extra.push((h, eh));
            }
            h = next;
        }
        Ok(h)
    }

    /// Term-by-term reduction for the local order, discarding every term of
    /// degree at least `cut`. Valid (and giving the unique normal form) when
    /// the maximal ideal to the power `cut` lies in the ideal.
    pub fn reduce_truncated<F: Coeff>(&mut self, p: OPoly<F>, basis: &[OPoly<F>], cut: u32) -> Result<OPoly<F>> {
        let mut h = p;
        self.truncate(&mut h, cut);
        let mut rem: Vec<(Monomial, F)> = Vec::new();
        while !h.is_zero() {
            match basis.iter().find(|g| g.lm().divides(h.lm())) {
                Some(g) => {
                    self.step()?;
                    h = h.reduce_lead(g, self.ord);
                    self.truncate(&mut h, cut);
                }
                None => rem.push(h.terms.remove(0)),
            }
        }
        Ok(OPoly { terms: rem })
    }

    fn reduce<F: Coeff>(&mut self, p: OPoly<F>, basis: &[OPoly<F>], cut: Option<u32>) -> Result<OPoly<F>> {
        if let Some(c) = cut {
            self.reduce_truncated(p, basis, c)
        } else if self.ord.is_local() {
            self.mora_nf(p, basis)
        } else {
            self.reduce_full(p, basis)
        }
    }

    /// Gebauer–Möller update for a new element `h`, about to be pushed at
    /// index `basis.len()`.
    fn update<F: Coeff>(&self, basis: &[OPoly<F>], redundant: &mut [bool], pairs: &mut Vec<Pair>, h: &OPoly<F>) {
        let hi = basis.len();
        let hlm = h.lm();
        let product = !self.ord.is_local();
        let cands: Vec<(usize, Monomial, bool)> = (0..basis.len())
            .filter(|&i| !redundant[i])
            .map(|i| (i, basis[i].lm().lcm(hlm), basis[i].lm().is_coprime(hlm)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (i, l, coprime)) in cands.iter().enumerate() {
            let dominated = kept.iter().any(|(_, l2, _)| l2.divides(l))
                || cands[idx + 1..].iter().any(|(_, l2, _)| l2 != l && l2.divides(l));
            if *coprime || !dominated {
                kept.push((*i, l.clone(), *coprime));
            }
        }
        pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && basis[p.i].lm().lcm(hlm) != p.lcm
                && basis[p.j].lm().lcm(hlm) != p.lcm)
        });
        for (i, l, coprime) in kept {
            if product && coprime {
                continue;
            }
            pairs.push(Pair { i, j: hi, lcm: l });
        }
        if product {
            for (k, g) in basis.iter().enumerate() {
                if hlm.divides(g.lm()) {
                    redundant[k] = true;
                }
            }
        }
    }

    fn select(&self, pairs: &mut Vec<Pair>) -> Option<Pair> {
        if pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let better = match a.lcm.degree().cmp(&b.lcm.degree()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match self.ord.cmp(&a.lcm, &b.lcm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (a.i, a.j) < (b.i, b.j),
                },
            };
            if better {
                best = k;
            }
        }
        Some(pairs.swap_remove(best))
    }

    /// Reduced Gröbner basis of the ideal generated by `gens` for a global
    /// order (see [`Kernel::local_basis`] for the local one). A unit in the
    /// ideal collapses the result to `[1]`.
    pub fn standard_basis<F: Coeff>(&mut self, gens: Vec<OPoly<F>>) -> Result<Vec<OPoly<F>>> {
        let mut basis: Vec<OPoly<F>> = Vec::new();
        let mut redundant: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut queue: Vec<OPoly<F>> = gens;
        let mut cut: Option<u32> = None;
        queue.reverse();
        loop {
            let h = if let Some(g) = queue.pop() {
                self.reduce(g, &basis, cut)?
            } else if let Some(p) = self.select(&mut pairs) {
                let s = OPoly::spoly(&basis[p.i], &basis[p.j], self.ord);
                self.reduce(s, &basis, cut)?
            } else {
                break;
            };
            if h.is_zero() {
                continue;
            }
            let h = self.reduce_tail(h.monic(), &basis, cut)?;
            if self.z_part(h.lm()).is_one() {
                return Ok(vec![OPoly { terms: vec![(Monomial::one(), F::one())] }]);
            }
            self.update(&basis, &mut redundant, &mut pairs, &h);
            basis.push(h);
            redundant.push(false);
            if let Some(n) = self.corner_cut(&basis) {
                if cut.is_none_or(|c| n < c) {
                    cut = Some(n);
                    for g in basis.iter_mut() {
                        if self.cut_degree(g.lm()) >= n {
                            // lies in m^N; kept as its leading monomial
                            g.terms.truncate(1);
                        } else {
                            self.truncate(g, n);
                        }
                    }
                    pairs.retain(|p| self.cut_degree(&p.lcm) < n);
                }
            }
        }
        let minimal = self.minimize(basis);
        self.interreduce(minimal, cut)
    }

    /// Minimal monic local standard basis by homogenization.
    pub fn local_basis<F: Coeff>(&mut self, gens: Vec<OPoly<F>>) -> Result<Vec<OPoly<F>>> {
        let n = self.nvars;
        let hord = MonomialOrder::Homogenized(n);
        let mut k = Kernel { ord: &hord, budget: self.budget.saturating_sub(self.steps), steps: 0, nvars: n, hom: Some(n) };
        let homogenized = gens.iter().map(|g| homogenize(g, n, &hord)).collect();
        let basis = k.standard_basis(homogenized);
        self.steps += k.steps;
        let basis = basis?;
        let local: Vec<OPoly<F>> = basis.into_iter().map(|g| dehomogenize(g, n, self.ord).monic()).collect();
        Ok(self.minimize(local))
    }

    fn reduce_tail<F: Coeff>(&mut self, h: OPoly<F>, basis: &[OPoly<F>], cut: Option<u32>) -> Result<OPoly<F>> {
        let mut terms = h.terms;
        let head = terms.remove(0);
        let tail = match cut {
            Some(c) => self.reduce_truncated(OPoly { terms }, basis, c)?,
            None => self.reduce_full(OPoly { terms }, basis)?,
        };
        let mut out = vec![head];
        out.extend(tail.terms);
        Ok(OPoly { terms: out })
    }

    /// Keeps one element per minimal leading monomial.
    fn minimize<F: Coeff>(&self, basis: Vec<OPoly<F>>) -> Vec<OPoly<F>> {
        let mut out: Vec<OPoly<F>> = Vec::new();
        for (k, g) in basis.iter().enumerate() {
            let dominated = basis.iter().enumerate().any(|(l, o)| {
                l != k && o.lm().divides(g.lm()) && (o.lm() != g.lm() || l < k)
            });
            if !dominated {
                out.push(g.clone());
            }
        }
        out.sort_by(|a, b| self.ord.cmp(a.lm(), b.lm()));
        out
    }

    fn interreduce<F: Coeff>(&mut self, basis: Vec<OPoly<F>>, cut: Option<u32>) -> Result<Vec<OPoly<F>>> {
        let mut out = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let others: Vec<OPoly<F>> = basis.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, g)| g.clone()).collect();
            out.push(self.reduce_tail(basis[k].clone(), &others, cut)?);
        }
        Ok(out)
    }

    /// Checks that every S-polynomial and every `extra` element reduces to
    /// zero against `basis`.
    pub fn satisfies_criterion<F: Coeff>(&mut self, basis: &[OPoly<F>], extra: &[OPoly<F>]) -> Result<bool> {
        let cut = self.corner_cut(basis);
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if cut.is_some_and(|c| basis[i].lm().lcm(basis[j].lm()).degree() >= c) {
                    continue;
                }
                let s = OPoly::spoly(&basis[i], &basis[j], self.ord);
                if !self.reduce(s, basis, cut)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        for p in extra {
            if !self.reduce(p.clone(), basis, cut)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
