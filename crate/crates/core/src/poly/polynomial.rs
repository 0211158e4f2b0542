use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{cmp_degrevlex, Monomial};
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::ring::Ring;
use super::sparse::SparsePoly;
use crate::error::{Error, Result};

/// Polynomial in the variables of a [`Ring`] over the fraction field of its
/// parameters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    poly: SparsePoly<RatFunc>,
}

impl Polynomial {
    pub fn from_sparse(ring: &Arc<Ring>, poly: SparsePoly<RatFunc>) -> Self {
        Polynomial { ring: ring.clone(), poly }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::from_sparse(ring, SparsePoly::zero())
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::from_sparse(ring, SparsePoly::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: RatFunc) -> Self {
        Self::from_sparse(ring, SparsePoly::constant(c))
    }

    pub fn from_rational(ring: &Arc<Ring>, r: Rational) -> Self {
        Self::constant(ring, RatFunc::from_rational(r))
    }

    pub fn from_i64(ring: &Arc<Ring>, v: i64) -> Self {
        Self::from_rational(ring, Rational::from_integer(v))
    }

    /// The ring variable with the given index.
    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Self::from_sparse(ring, SparsePoly::var(index))
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        let i = ring.var_index(name).ok_or_else(|| Error::NotARingVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    /// A parameter as a constant of the coefficient field.
    pub fn param(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        let i = ring
            .param_index(name)
            .ok_or_else(|| Error::ContextMismatch(format!("`{name}` is not a parameter")))?;
        Ok(Self::constant(ring, RatFunc::from_poly(SparsePoly::var(i))))
    }

    /// `c * m` for a single monomial.
    pub fn monomial(ring: &Arc<Ring>, exps: &[u32], c: RatFunc) -> Self {
        Self::from_sparse(ring, SparsePoly::term(Monomial::from_exponents(exps), c))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn sparse(&self) -> &SparsePoly<RatFunc> {
        &self.poly
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RatFunc> {
        self.poly.terms()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.poly.is_constant()
    }

    pub fn constant_term(&self) -> RatFunc {
        self.poly.constant_term()
    }

    /// True when no coefficient depends on a parameter.
    pub fn has_rational_coefficients(&self) -> bool {
        self.poly.terms().values().all(RatFunc::is_constant)
    }

    pub fn involves_var(&self, index: usize) -> bool {
        self.poly.involves(index)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.poly.total_degree()
    }

    /// Minimal total degree of a term.
    pub fn low_degree(&self) -> Option<u32> {
        self.poly.low_degree()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(Self::from_sparse(&self.ring, self.poly.add(&other.poly)))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(Self::from_sparse(&self.ring, self.poly.sub(&other.poly)))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(Self::from_sparse(&self.ring, self.poly.mul(&other.poly)?))
    }

    pub fn neg(&self) -> Polynomial {
        Self::from_sparse(&self.ring, self.poly.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> Polynomial {
        Self::from_sparse(&self.ring, self.poly.scale(c))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        Ok(Self::from_sparse(&self.ring, self.poly.pow(e)?))
    }

    /// Scaled to degrevlex leading coefficient one.
    pub fn monic(&self) -> Polynomial {
        Self::from_sparse(&self.ring, self.poly.monic())
    }

    /// Exact quotient, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroInput("division by zero"));
        }
        Ok(self.poly.div_exact(&divisor.poly).map(|q| Self::from_sparse(&self.ring, q)))
    }

    pub fn derivative(&self, index: usize) -> Polynomial {
        Self::from_sparse(&self.ring, self.poly.derivative(index))
    }

    /// Formal partial derivative by a named ring variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        match self.ring.var_index(var) {
            Some(i) => Ok(self.derivative(i)),
            None => Err(Error::NotARingVariable(var.to_string())),
        }
    }

    /// All first partials in variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars()).map(|i| self.derivative(i)).collect()
    }

    /// Substitute variable `index` by a rational constant (same ring).
    pub fn eval_var(&self, index: usize, value: &Rational) -> Polynomial {
        Self::from_sparse(&self.ring, self.poly.eval_var(index, &RatFunc::from_rational(value.clone())))
    }

    /// Map of source parameter index to target parameter index by name.
    fn param_map(&self, target: &Ring) -> Result<Vec<usize>> {
        self.ring
            .params()
            .iter()
            .map(|p| {
                target.param_index(p).ok_or_else(|| {
                    Error::ContextMismatch(format!("parameter `{p}` is not declared in {target}"))
                })
            })
            .collect()
    }

    fn coefficient_into(c: &RatFunc, map: &[usize], identity: bool) -> RatFunc {
        if identity || c.is_constant() {
            c.clone()
        } else {
            c.reindex_params(map)
        }
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; coefficients
    /// are carried over to the target's parameters by name.
    pub fn substitute(&self, images: &[Polynomial], target: &Arc<Ring>) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ContextMismatch(format!(
                "{} images supplied for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        for img in images {
            if img.ring != *target {
                return Err(Error::ContextMismatch(format!("image lives in {}, expected {}", img.ring, target)));
            }
        }
        let map = self.param_map(target)?;
        let identity = map.iter().enumerate().all(|(i, &j)| i == j);
        let mut powers: Vec<Vec<SparsePoly<RatFunc>>> = images.iter().map(|p| vec![SparsePoly::one(), p.poly.clone()]).collect();
        let mut out = SparsePoly::zero();
        for (m, c) in self.poly.terms() {
            let mut acc = SparsePoly::constant(Self::coefficient_into(c, &map, identity));
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("seeded").mul(&images[i].poly)?;
                    powers[i].push(next);
                }
                acc = acc.mul(&powers[i][e as usize])?;
            }
            out = out.add(&acc);
        }
        Ok(Self::from_sparse(target, out))
    }

    /// Same polynomial viewed in a ring with the same variables and a
    /// superset of the parameters.
    pub fn with_params_of(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.vars() != self.ring.vars() {
            return Err(Error::ContextMismatch(format!("{} vs {}", self.ring, target)));
        }
        let map = self.param_map(target)?;
        let identity = map.iter().enumerate().all(|(i, &j)| i == j);
        Ok(Self::from_sparse(target, self.poly.map_coeffs(|c| Self::coefficient_into(c, &map, identity))))
    }

    /// Substitute the parameter `name = value`; the result lives in the ring
    /// without that parameter.
    pub fn specialize_param(&self, name: &str, value: &Rational) -> Result<Polynomial> {
        let k = self
            .ring
            .param_index(name)
            .ok_or_else(|| Error::ContextMismatch(format!("`{name}` is not a parameter")))?;
        let mut params = self.ring.params().to_vec();
        params.remove(k);
        let target = self.ring.with_params(params)?;
        let map: Vec<usize> = (0..self.ring.nparams()).map(|i| if i > k { i - 1 } else { i }).collect();
        let mut out = SparsePoly::zero();
        for (m, c) in self.poly.terms() {
            let v = c.eval_param(k, value).ok_or_else(|| {
                Error::UnluckySpecialization(format!("coefficient denominator vanishes at {name} = {value}"))
            })?;
            let v = if v.is_constant() { v } else { v.reindex_params(&map) };
            out.add_term(m.clone(), v);
        }
        Ok(Self::from_sparse(&target, out))
    }

    /// Moves ring variable `index` into the coefficient field as a new last
    /// parameter, so it is treated as transcendental.
    pub fn promote_var(&self, index: usize) -> Result<Polynomial> {
        let mut vars = self.ring.vars().to_vec();
        if vars.len() < 2 {
            return Err(Error::InvalidRing("cannot promote the only variable".into()));
        }
        let name = vars.remove(index);
        let mut params = self.ring.params().to_vec();
        params.push(name);
        let target = Ring::from_names(vars, params)?;
        let k = self.ring.nparams();
        let mut out = SparsePoly::zero();
        for (m, c) in self.poly.terms() {
            let e = m.exp(index);
            let c = if e == 0 {
                c.clone()
            } else {
                let factor = RatFunc::from_poly(SparsePoly::term(Monomial::var(k, e), Rational::one()));
                c.mul(&factor)
            };
            out.add_term(m.remove_var(index), c);
        }
        Ok(Self::from_sparse(&target, out))
    }

    /// The polynomial in the ring of the listed variables only (order
    /// preserved). Fails if an omitted variable occurs.
    pub fn restrict_to_vars(&self, keep: &[usize]) -> Result<Polynomial> {
        for i in 0..self.ring.nvars() {
            if !keep.contains(&i) && self.involves_var(i) {
                return Err(Error::ContextMismatch(format!(
                    "variable `{}` occurs but is not among the requested variables",
                    self.ring.vars()[i]
                )));
            }
        }
        let vars: Vec<String> = keep.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let target = self.ring.with_vars(vars)?;
        let mut map = vec![0usize; self.ring.nvars()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        Ok(Self::from_sparse(&target, self.poly.reindex(&map)))
    }

    /// Restriction to the hyperplane `x_index = 0`, in the ring without that
    /// variable.
    pub fn slice_at_zero(&self, index: usize) -> Result<Polynomial> {
        let restricted = self.eval_var(index, &Rational::zero());
        let keep: Vec<usize> = (0..self.ring.nvars()).filter(|&i| i != index).collect();
        restricted.restrict_to_vars(&keep)
    }

    /// Terms sorted with the degrevlex-leading term first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &RatFunc)> {
        let mut v: Vec<_> = self.poly.terms().iter().collect();
        v.sort_by(|a, b| cmp_degrevlex(b.0, a.0));
        v
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_monomial(out: &mut String, names: &[String], m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&names[i]);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn write_signed_term(out: &mut String, first: bool, c: &Rational, factors: &str) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if factors.is_empty() {
        out.push_str(&a.to_string());
    } else {
        if !a.is_one() {
            out.push_str(&a.to_string());
            out.push('*');
        }
        out.push_str(factors);
    }
}

/// Rational polynomial rendered with the same conventions as [`Polynomial`].
pub(crate) fn format_rational_poly(p: &SparsePoly<Rational>, names: &[String]) -> String {
    let mut terms: Vec<_> = p.terms().iter().collect();
    terms.sort_by(|a, b| cmp_degrevlex(b.0, a.0));
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let mut f = String::new();
        write_monomial(&mut f, names, m);
        write_signed_term(&mut out, k == 0, c, &f);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    /// Expanded form accepted by the expression parser. Coefficients that
    /// are polynomial in the parameters are expanded into parameter factors;
    /// genuine fractions are printed as `(num)/(den)*monomial`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let mut var_part = String::new();
            write_monomial(&mut var_part, self.ring.vars(), m);
            if c.is_polynomial() {
                let mut pterms: Vec<_> = c.numer().terms().iter().collect();
                pterms.sort_by(|a, b| match cmp_degrevlex(b.0, a.0) {
                    Ordering::Equal => Ordering::Equal,
                    o => o,
                });
                for (pm, pc) in pterms {
                    let mut factors = String::new();
                    write_monomial(&mut factors, self.ring.params(), pm);
                    if !var_part.is_empty() {
                        if !factors.is_empty() {
                            factors.push('*');
                        }
                        factors.push_str(&var_part);
                    }
                    write_signed_term(&mut out, first, pc, &factors);
                    first = false;
                }
            } else {
                if !first {
                    out.push_str(" + ");
                }
                out.push('(');
                out.push_str(&format_rational_poly(c.numer(), self.ring.params()));
                out.push_str(")/(");
                out.push_str(&format_rational_poly(c.denom(), self.ring.params()));
                out.push(')');
                if !var_part.is_empty() {
                    out.push('*');
                    out.push_str(&var_part);
                }
                first = false;
            }
        }
        if first {
            out.push('0');
        }
        f.write_str(&out)
    }
}
