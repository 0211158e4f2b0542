//! Ideals in `K[z]` with `K = Q(params)`: Gröbner bases, standard bases in
//! the local ring at the origin, and operations derived from them.

mod kernel;
mod opoly;
mod order;

use std::fmt;
use std::sync::Arc;

use kernel::Kernel;
use opoly::{Coeff, OPoly};
pub use order::MonomialOrder;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, Polynomial, RatFunc, Rational, Ring, SparsePoly};

/// Exponents above this bound are refused before any basis computation, so
/// that products inside the kernel cannot overflow.
const MAX_ENGINE_EXPONENT: u32 = 1 << 20;

/// A finitely generated nonzero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; an ideal with no nonzero generator is
    /// refused with [`Error::ZeroIdeal`].
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::ContextMismatch(format!("generator in {}, ideal in {}", g.ring(), ring)));
            }
            if g.terms().keys().any(|m| m.exponents().iter().any(|&e| e > MAX_ENGINE_EXPONENT)) {
                return Err(Error::ExponentOverflow);
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        if kept.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Ideal { ring: ring.clone(), gens: kept })
    }

    /// Parses each generator with [`crate::poly::parse_polynomial`].
    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| crate::poly::parse_polynomial(s, ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)] }
    }

    /// The ideal generated by the listed ring variables.
    pub fn of_vars(ring: &Arc<Ring>, vars: &[usize]) -> Result<Ideal> {
        Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i)).collect())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// `I + (p)`.
    pub fn with(&self, p: &Polynomial) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.push(p.clone());
        Ideal::new(&self.ring, gens)
    }

    /// True when some generator is a nonzero constant.
    pub fn has_constant_generator(&self) -> bool {
        self.gens.iter().any(Polynomial::is_constant)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }

    /// Same generators in another ring with identical variable and
    /// parameter names (or a parameter superset).
    pub fn with_params_of(&self, target: &Arc<Ring>) -> Result<Ideal> {
        Ideal::new(target, self.gens.iter().map(|g| g.with_params_of(target)).collect::<Result<Vec<_>>>()?)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} in {}", self.ring)
    }
}

/// A standard basis of an ideal for a fixed order.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ideal: Ideal,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
    budget: usize,
}

impl StandardBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    /// The basis as an ideal (same ideal, canonical presentation for global
    /// orders).
    pub fn to_ideal(&self) -> Ideal {
        Ideal { ring: self.ideal.ring.clone(), gens: self.basis.clone() }
    }
}

/// Vector-space dimension of a quotient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColengthResult {
    Finite { value: usize, standard_monomials: Vec<Monomial> },
    Infinite,
}

impl ColengthResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            ColengthResult::Finite { value, .. } => Some(*value),
            ColengthResult::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ColengthResult::Finite { .. })
    }
}

impl fmt::Display for ColengthResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColengthResult::Finite { value, .. } => write!(f, "{value}"),
            ColengthResult::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Krull dimension of the germ at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalDimension {
    /// The ideal contains a unit of the local ring.
    Empty,
    Dim(usize),
}

impl fmt::Display for LocalDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalDimension::Empty => write!(f, "EMPTY"),
            LocalDimension::Dim(d) => write!(f, "{d}"),
        }
    }
}

fn rational_only(polys: &[&Polynomial]) -> bool {
    polys.iter().all(|p| p.has_rational_coefficients())
}

fn to_opolys<F: Coeff>(polys: &[Polynomial], ord: &MonomialOrder) -> Vec<OPoly<F>> {
    polys
        .iter()
        .map(|p| OPoly::from_sparse(p.sparse(), ord).expect("coefficient field chosen to fit"))
        .collect()
}

fn basis_in<F: Coeff>(gens: &[Polynomial], ord: &MonomialOrder, budget: usize) -> Result<Vec<SparsePoly<RatFunc>>> {
    let nvars = gens.first().map_or(0, |g| g.ring().nvars());
    let mut k = Kernel::new(ord, budget).with_vars(nvars);
    let input = to_opolys::<F>(gens, ord);
    let basis = if ord.is_local() { k.local_basis(input.clone())? } else { k.standard_basis(input.clone())? };
    if cfg!(debug_assertions) {
        let mut check = Kernel::new(ord, usize::MAX).with_vars(nvars);
        if !check.satisfies_criterion(&basis, &input)? {
            return Err(Error::Internal(format!("emitted basis fails the Buchberger criterion for {ord:?}")));
        }
    }
    Ok(basis.iter().map(OPoly::to_sparse).collect())
}

/// Standard basis of `ideal` for `ord`: reduced Gröbner basis for global
/// and elimination orders, minimal monic standard basis for the local order.
pub fn standard_basis(ideal: &Ideal, ord: &MonomialOrder, cfg: &Config) -> Result<StandardBasis> {
    let refs: Vec<&Polynomial> = ideal.gens.iter().collect();
    let sparse = if rational_only(&refs) {
        basis_in::<Rational>(&ideal.gens, ord, cfg.budget)?
    } else {
        basis_in::<RatFunc>(&ideal.gens, ord, cfg.budget)?
    };
    let basis: Vec<Polynomial> = sparse.into_iter().map(|p| Polynomial::from_sparse(&ideal.ring, p)).collect();
    let leading = basis
        .iter()
        .map(|p| leading_monomial(p, ord).expect("basis elements are nonzero"))
        .collect();
    Ok(StandardBasis { ideal: ideal.clone(), order: ord.clone(), basis, leading, budget: cfg.budget })
}

/// Leading monomial of `p` under `ord`.
pub fn leading_monomial(p: &Polynomial, ord: &MonomialOrder) -> Option<Monomial> {
    p.terms().keys().max_by(|a, b| ord.cmp(a, b)).cloned()
}

fn nf_in<F: Coeff>(p: &Polynomial, sb: &StandardBasis) -> Result<SparsePoly<RatFunc>> {
    let ord = &sb.order;
    let basis = to_opolys::<F>(&sb.basis, ord);
    let h = OPoly::<F>::from_sparse(p.sparse(), ord).expect("coefficient field chosen to fit");
    let mut k = Kernel::new(ord, sb.budget);
    let out = if !ord.is_local() {
        k.reduce_full(h, &basis)?
    } else if sb.is_unit() {
        OPoly::zero()
    } else {
        match staircase(&sb.leading, sb.ideal.ring.nvars()) {
            Some(stairs) => {
                let cut = stairs.iter().map(Monomial::degree).max().map_or(0, |d| d + 1);
                k.reduce_truncated(h, &basis, cut)?
            }
            None => k.mora_nf(h, &basis)?,
        }
    };
    Ok(out.to_sparse())
}

/// Normal form of `p` with respect to `sb`.
///
/// For global orders this is the fully reduced remainder. For the local
/// order with a zero-dimensional leading ideal it is the unique combination
/// of standard monomials congruent to `p` in the local ring; otherwise it is
/// Mora's weak normal form, which is zero exactly for members of the ideal.
pub fn normal_form(p: &Polynomial, sb: &StandardBasis) -> Result<Polynomial> {
    if p.ring() != sb.ideal.ring() {
        return Err(Error::ContextMismatch(format!("{} vs {}", p.ring(), sb.ideal.ring())));
    }
    let mut refs: Vec<&Polynomial> = sb.basis.iter().collect();
    refs.push(p);
    let sparse = if rational_only(&refs) { nf_in::<Rational>(p, sb)? } else { nf_in::<RatFunc>(p, sb)? };
    Ok(Polynomial::from_sparse(p.ring(), sparse))
}

/// Membership of `p` in the ideal (in the local ring for the local order).
pub fn contains(sb: &StandardBasis, p: &Polynomial) -> Result<bool> {
    Ok(normal_form(p, sb)?.is_zero())
}

/// Re-checks the Buchberger criterion on an emitted basis.
pub fn verify_buchberger(sb: &StandardBasis) -> Result<bool> {
    fn run<F: Coeff>(sb: &StandardBasis) -> Result<bool> {
        let basis = to_opolys::<F>(&sb.basis, &sb.order);
        let input = to_opolys::<F>(&sb.ideal.gens, &sb.order);
        Kernel::new(&sb.order, usize::MAX).with_vars(sb.ideal.ring.nvars()).satisfies_criterion(&basis, &input)
    }
    let mut refs: Vec<&Polynomial> = sb.basis.iter().collect();
    refs.extend(sb.ideal.gens.iter());
    if rational_only(&refs) {
        run::<Rational>(sb)
    } else {
        run::<RatFunc>(sb)
    }
}

/// Monomials outside the monomial ideal generated by `leading` in `n`
/// variables, or `None` when there are infinitely many.
pub fn staircase(leading: &[Monomial], n: usize) -> Option<Vec<Monomial>> {
    if leading.iter().any(Monomial::is_one) {
        return Some(Vec::new());
    }
    let mut bounds = vec![u32::MAX; n];
    for m in leading {
        let support: Vec<usize> = (0..n).filter(|&i| m.exp(i) > 0).collect();
        if support.len() == 1 {
            let i = support[0];
            bounds[i] = bounds[i].min(m.exp(i));
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn walk(i: usize, exps: &mut Vec<u32>, bounds: &[u32], leading: &[Monomial], out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..bounds[i] {
            exps[i] = e;
            let m = Monomial::from_exponents(exps);
            if leading.iter().any(|l| l.divides(&m)) {
                break;
            }
            walk(i + 1, exps, bounds, leading, out);
        }
        exps[i] = 0;
    }
    walk(0, &mut exps, &bounds, leading, &mut out);
    Some(out)
}

fn colength_from(sb: &StandardBasis) -> ColengthResult {
    match staircase(&sb.leading, sb.ideal.ring.nvars()) {
        Some(standard_monomials) => ColengthResult::Finite { value: standard_monomials.len(), standard_monomials },
        None => ColengthResult::Infinite,
    }
}

/// `dim_K O_0 / I`, counted as standard monomials of a local standard basis.
pub fn colength_at_origin(ideal: &Ideal, cfg: &Config) -> Result<ColengthResult> {
    Ok(colength_from(&standard_basis(ideal, &MonomialOrder::Local, cfg)?))
}

/// `dim_K K[z] / I`, from a global Gröbner basis.
pub fn vector_space_dimension(ideal: &Ideal, cfg: &Config) -> Result<ColengthResult> {
    Ok(colength_from(&standard_basis(ideal, &MonomialOrder::Global, cfg)?))
}

/// Independent cross-check of [`colength_at_origin`] through global bases
/// only: `c(N) = dim K[z]/(I + m^N)` is nondecreasing in `N`, and
/// `c(N) = c(N+1)` means `m^N` lies in `I + m^{N+1}`, hence (Nakayama) in
/// `I` near the origin, so `c(N)` is the colength. `N` is raised by one
/// until this happens; `Infinite` if it has not by `N = 512`.
pub fn truncation_colength(ideal: &Ideal, cfg: &Config) -> Result<ColengthResult> {
    let truncated = |n: u32| -> Result<ColengthResult> {
        let ring = &ideal.ring;
        let mut gens = ideal.gens.clone();
        gens.extend(monomials_of_degree(ring.nvars(), n).into_iter().map(|m| {
            Polynomial::from_sparse(ring, SparsePoly::term(m, RatFunc::from_rational(Rational::from_integer(1))))
        }));
        vector_space_dimension(&Ideal::new(ring, gens)?, cfg)
    };
    let mut prev = truncated(1)?;
    for n in 2..=512 {
        let c = truncated(n)?;
        if c.value().is_none() {
            return Err(Error::Internal("truncated ideal is not zero-dimensional".into()));
        }
        if c.value() == prev.value() {
            return Ok(prev);
        }
        prev = c;
    }
    Ok(ColengthResult::Infinite)
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            go(i + 1, left - e, exps, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(0, d, &mut vec![0; n], &mut out);
    out
}

/// Krull dimension at the origin, read off the local leading ideal.
pub fn dimension_at_origin(ideal: &Ideal, cfg: &Config) -> Result<LocalDimension> {
    let sb = standard_basis(ideal, &MonomialOrder::Local, cfg)?;
    if sb.is_unit() {
        return Ok(LocalDimension::Empty);
    }
    Ok(LocalDimension::Dim(monomial_dimension(&sb.leading, ideal.ring.nvars())))
}

/// Largest set of variables whose monomials avoid the monomial ideal.
pub fn monomial_dimension(leading: &[Monomial], n: usize) -> usize {
    let mut best = 0;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = leading.iter().all(|m| (0..n).any(|i| m.exp(i) > 0 && mask & (1 << i) == 0));
        if independent {
            best = size;
        }
    }
    best
}

/// True when the ideal is the whole local ring at the origin.
pub fn contains_local_unit(ideal: &Ideal, cfg: &Config) -> Result<bool> {
    if ideal.gens.iter().any(|g| !g.constant_term().is_zero()) {
        return Ok(true);
    }
    Ok(standard_basis(ideal, &MonomialOrder::Local, cfg)?.is_unit())
}

/// `I ∩ K[z \ drop]`, through a block elimination order. `None` stands for
/// the zero ideal.
pub fn eliminate(ideal: &Ideal, drop: &[usize], cfg: &Config) -> Result<Option<Ideal>> {
    let n = ideal.ring.nvars();
    if drop.iter().any(|&i| i >= n) {
        return Err(Error::InvalidArgument("elimination variable out of range".into()));
    }
    let ord = MonomialOrder::elimination(drop);
    let MonomialOrder::Elimination(d) = &ord else { unreachable!() };
    if d.is_empty() || d.len() >= n {
        return Err(Error::InvalidArgument("eliminated variables must be a nonempty proper subset".into()));
    }
    let sb = standard_basis(ideal, &ord, cfg)?;
    let kept: Vec<Polynomial> = sb
        .basis
        .into_iter()
        .filter(|p| !d.iter().any(|&i| p.involves_var(i)))
        .collect();
    if kept.is_empty() {
        Ok(None)
    } else {
        Ideal::new(&ideal.ring, kept).map(Some)
    }
}

fn check_same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring != b.ring {
        return Err(Error::ContextMismatch(format!("{} vs {}", a.ring, b.ring)));
    }
    Ok(())
}

/// `I ∩ J`, eliminating `u` from `u I + (1 - u) J`.
pub fn intersection(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<Ideal> {
    check_same_ring(a, b)?;
    if a.has_constant_generator() {
        return Ok(b.clone());
    }
    if b.has_constant_generator() {
        return Ok(a.clone());
    }
    let ring = &a.ring;
    let mut vars = ring.vars().to_vec();
    let u_name = ring.fresh_name("u");
    vars.push(u_name);
    let ext = ring.with_vars(vars)?;
    let u = ring.nvars();
    let lift = |p: &Polynomial| Polynomial::from_sparse(&ext, p.sparse().clone());
    let uu = Polynomial::var(&ext, u);
    let one_minus_u = Polynomial::one(&ext).sub(&uu)?;
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(uu.mul(&lift(g))?);
    }
    for g in &b.gens {
        gens.push(one_minus_u.mul(&lift(g))?);
    }
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[u], cfg)?
        .ok_or_else(|| Error::Internal("intersection of nonzero ideals came out zero".into()))?;
    Ideal::new(ring, elim.gens.iter().map(|p| Polynomial::from_sparse(ring, p.sparse().clone())).collect())
}

/// `I : g` for a single nonzero polynomial.
pub fn quotient_by(ideal: &Ideal, g: &Polynomial, cfg: &Config) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroInput("quotient by the zero polynomial"));
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    let inter = intersection(ideal, &Ideal::new(&ideal.ring, vec![g.clone()])?, cfg)?;
    let mut gens = Vec::with_capacity(inter.gens.len());
    for p in &inter.gens {
        let q = p
            .div_exact(g)?
            .ok_or_else(|| Error::Internal(format!("{p} in the intersection is not divisible by {g}")))?;
        gens.push(q);
    }
    Ideal::new(&ideal.ring, gens)
}

/// `I : K = ∩_{g in gens(K)} (I : g)`.
pub fn ideal_quotient(ideal: &Ideal, k: &Ideal, cfg: &Config) -> Result<Ideal> {
    check_same_ring(ideal, k)?;
    let mut acc: Option<Ideal> = None;
    for g in &k.gens {
        let q = quotient_by(ideal, g, cfg)?;
        if q.has_constant_generator() || contains_unit_globally(&q, cfg)? {
            continue;
        }
        acc = Some(match acc {
            None => q,
            Some(prev) => intersection(&prev, &q, cfg)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&ideal.ring)))
}

fn contains_unit_globally(ideal: &Ideal, cfg: &Config) -> Result<bool> {
    Ok(standard_basis(ideal, &MonomialOrder::Global, cfg)?.is_unit())
}

/// `I ⊆ J` in the polynomial ring.
pub fn is_subideal(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<bool> {
    check_same_ring(a, b)?;
    let sb = standard_basis(b, &MonomialOrder::Global, cfg)?;
    for g in &a.gens {
        if !contains(&sb, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of ideals by mutual membership.
pub fn ideals_equal(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<bool> {
    Ok(is_subideal(a, b, cfg)? && is_subideal(b, a, cfg)?)
}

/// Equality of the ideals generated in the local ring at the origin.
pub fn locally_equal(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<bool> {
    check_same_ring(a, b)?;
    let sa = standard_basis(a, &MonomialOrder::Local, cfg)?;
    let sb = standard_basis(b, &MonomialOrder::Local, cfg)?;
    for g in &b.gens {
        if !contains(&sa, g)? {
            return Ok(false);
        }
    }
    for g in &a.gens {
        if !contains(&sb, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Upper bound on quotient iterations in [`saturate`]; a polynomial ring is
/// Noetherian, so this only guards against a kernel bug.
const MAX_SATURATION_ROUNDS: usize = 256;

/// `I : K^∞`, iterating [`ideal_quotient`] until two consecutive ideals
/// coincide. The result is presented by its reduced Gröbner basis.
pub fn saturate(ideal: &Ideal, k: &Ideal, cfg: &Config) -> Result<Ideal> {
    check_same_ring(ideal, k)?;
    let mut current = standard_basis(ideal, &MonomialOrder::Global, cfg)?;
    for _ in 0..MAX_SATURATION_ROUNDS {
        if current.is_unit() {
            return Ok(Ideal::unit(&ideal.ring));
        }
        let next = ideal_quotient(&current.to_ideal(), k, cfg)?;
        let mut stable = true;
        for g in &next.gens {
            if !contains(&current, g)? {
                stable = false;
                break;
            }
        }
        if stable {
            return Ok(current.to_ideal());
        }
        current = standard_basis(&next, &MonomialOrder::Global, cfg)?;
    }
    Err(Error::Internal("saturation did not stabilize".into()))
}

#[cfg(test)]
mod tests;
