//! One-parameter families `F(t, z) = f0(z) + sum t^j g_j(z)`: decomposition,
//! comparison of invariants at `t = 0` and at generic `t`, the
//! Iomdine–Lê–Massey relations and hypothesis-by-hypothesis verdicts.

mod evidence;
pub mod verdict;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::poly::{is_reduced, square_factor_witness, Field, Monomial, Polynomial, RatFunc, Rational, Ring, SparsePoly};
use crate::singularity::{add_power, detect_weights, invariants, milnor_number, InvariantRecord, WeightSystem};

pub use evidence::{irreducibility_evidence, EvidenceKind, GeneratorEvidence, IrreducibilityEvidence, NOT_A_CERTIFICATE};
pub use verdict::{Conclusion, FamilyAnalysis, HypothesisCheck, Status, Theorem, TheoremVerdict};

const STREAM_REDUCED: u64 = 10;
const STREAM_GENERIC: u64 = 11;
const STREAM_REDRAW: u64 = 1 << 32;

/// A family decomposed by powers of its parameter.
#[derive(Clone, Debug)]
pub struct Family {
    source: Polynomial,
    param: String,
    f0: Polynomial,
    deformation: Vec<(u32, Polynomial)>,
    reduced_checked_at: Vec<Rational>,
}

fn family_error(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

impl Family {
    /// Decomposes `source`, whose ring must have `param` as its only
    /// parameter, and checks reducedness at `t = 0` and two random values.
    pub fn new(source: &Polynomial, param: &str, cfg: &Config) -> Result<Family> {
        let ring = source.ring();
        if ring.params() != [param.to_string()] {
            return Err(family_error(format!("expected `{param}` as the only parameter of {ring}")));
        }
        if !source.constant_term().is_zero() {
            return Err(Error::NotThroughOrigin);
        }
        let base = Ring::from_names(ring.vars().to_vec(), Vec::new())?;
        let mut slices: BTreeMap<u32, SparsePoly<RatFunc>> = BTreeMap::new();
        for (m, c) in source.terms() {
            if !c.is_polynomial() {
                return Err(family_error(format!("coefficient {} is not polynomial in {param}", Polynomial::constant(ring, c.clone()))));
            }
            for (tm, tc) in c.numer().terms() {
                slices.entry(tm.exp(0)).or_insert_with(SparsePoly::zero).add_term(m.clone(), RatFunc::from_rational(tc.clone()));
            }
        }
        let mut f0 = Polynomial::zero(&base);
        let mut deformation = Vec::new();
        for (j, p) in slices {
            let p = Polynomial::from_sparse(&base, p);
            if p.is_zero() {
                continue;
            }
            if j == 0 {
                f0 = p;
            } else {
                deformation.push((j, p));
            }
        }
        if f0.is_zero() {
            return Err(family_error("f0 = 0 is not reduced at the origin"));
        }
        let w = square_factor_witness(&f0)?;
        if !w.is_constant() {
            return Err(Error::NonReduced { witness: format!("{param} = 0: {w}") });
        }
        let values = cfg.sampler(STREAM_REDUCED).distinct(2, &[Rational::zero()]);
        for v in &values {
            let ft = source.specialize_param(param, v)?;
            if ft.is_zero() || !is_reduced(&ft)? {
                let w = if ft.is_zero() { "0".to_string() } else { square_factor_witness(&ft)?.to_string() };
                return Err(Error::NonReduced { witness: format!("{param} = {v}: {w}") });
            }
        }
        Ok(Family { source: source.clone(), param: param.to_string(), f0, deformation, reduced_checked_at: values })
    }

    pub fn source(&self) -> &Polynomial {
        &self.source
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    /// The `t = 0` member, in the ring without the parameter.
    pub fn f0(&self) -> &Polynomial {
        &self.f0
    }

    /// `(j, g_j)` with `g_j` nonzero, by increasing `j`.
    pub fn deformation(&self) -> &[(u32, Polynomial)] {
        &self.deformation
    }

    pub fn reduced_checked_at(&self) -> &[Rational] {
        &self.reduced_checked_at
    }

    pub fn nvars(&self) -> usize {
        self.f0.ring().nvars()
    }

    /// `f_t` for a rational `t`.
    pub fn member(&self, t: &Rational) -> Result<Polynomial> {
        self.source.specialize_param(&self.param, t)
    }

    fn base_ring(&self) -> &Arc<Ring> {
        self.f0.ring()
    }
}

/// A monomial of a deformation term with weighted degree below `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperOffender {
    pub j: u32,
    pub monomial: String,
    pub weighted_degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperReport {
    pub upper: bool,
    pub offenders: Vec<UpperOffender>,
}

fn monomial_string(ring: &Arc<Ring>, m: &Monomial) -> String {
    Polynomial::monomial(ring, &m.dense(ring.nvars()), RatFunc::one()).to_string()
}

/// Tests that every monomial of every `g_j` has weighted degree at least
/// `d`.
pub fn is_upper(fam: &Family, w: &WeightSystem) -> Result<UpperReport> {
    if !w.is_homogeneous(fam.f0()) {
        return Err(Error::WeightMismatch(format!("f0 is not weighted homogeneous for {w}")));
    }
    let mut offenders = Vec::new();
    for (j, g) in fam.deformation() {
        for (m, _) in g.sorted_terms() {
            let wd = w.weighted_degree(m);
            if wd < w.degree() {
                offenders.push(UpperOffender { j: *j, monomial: monomial_string(fam.base_ring(), m), weighted_degree: wd });
            }
        }
    }
    Ok(UpperReport { upper: offenders.is_empty(), offenders })
}

/// Where a record is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slice {
    Zero,
    Generic,
}

impl Slice {
    pub fn label(self) -> &'static str {
        match self {
            Slice::Zero => "ZERO",
            Slice::Generic => "GENERIC",
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A record together with the parameter values used to confirm it.
#[derive(Clone, Debug)]
pub struct SliceRecord {
    pub slice: Slice,
    pub record: InvariantRecord,
    /// Random values of `t` at which the generic record was reproduced.
    pub witnesses: Vec<Rational>,
}

fn same_numbers(a: &InvariantRecord, b: &InvariantRecord) -> bool {
    (a.order, a.lambda0, a.lambda1, a.gamma1, a.mu_slice, a.intersection_number)
        == (b.order, b.lambda0, b.lambda1, b.gamma1, b.mu_slice, b.intersection_number)
}

/// Invariants of `f0`, or of the generic member over `Q(t)` confirmed at two
/// random values of `t`.
pub fn invariants_at(fam: &Family, slice: Slice, cfg: &Config) -> Result<SliceRecord> {
    match slice {
        Slice::Zero => Ok(SliceRecord { slice, record: invariants(fam.f0(), cfg)?, witnesses: Vec::new() }),
        Slice::Generic => {
            let record = invariants(fam.source(), cfg)?;
            for attempt in 0..2 {
                let values = cfg.sampler(STREAM_GENERIC + attempt * STREAM_REDRAW).distinct(2, &[Rational::zero()]);
                let mut agree = true;
                for v in &values {
                    let special = match invariants(&fam.member(v)?, cfg) {
                        Ok(r) => r,
                        Err(e) if !e.is_refusal() && !matches!(e, Error::UnluckySpecialization(_)) => return Err(e),
                        Err(_) => {
                            agree = false;
                            break;
                        }
                    };
                    if !same_numbers(&special, &record) {
                        agree = false;
                        break;
                    }
                }
                if agree {
                    return Ok(SliceRecord { slice, record, witnesses: values });
                }
            }
            Err(Error::UnluckySpecialization(format!(
                "generic invariants over Q({}) were not reproduced at random values",
                fam.param()
            )))
        }
    }
}

/// Orders of `f0` and of the generic member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equimultiplicity {
    pub order_zero: u32,
    pub order_generic: u32,
}

impl Equimultiplicity {
    pub fn is_equimultiple(&self) -> bool {
        self.order_zero == self.order_generic
    }

    pub fn label(&self) -> &'static str {
        if self.is_equimultiple() {
            "EQUIMULTIPLE"
        } else {
            "NOT_EQUIMULTIPLE"
        }
    }
}

pub fn is_equimultiple(fam: &Family) -> Equimultiplicity {
    Equimultiplicity {
        order_zero: fam.f0().low_degree().expect("f0 nonzero"),
        order_generic: fam.source().low_degree().expect("F nonzero"),
    }
}

/// One value of `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlmRow {
    pub j: u32,
    /// `μ(f + z1^j)`, or the error that prevented computing it.
    pub mu: std::result::Result<usize, String>,
    /// `λ⁰ + (j - 1) λ¹`.
    pub predicted: usize,
    /// `μ - predicted`.
    pub residual: Option<i64>,
    /// `μ + μ_slice - (γ¹ + λ⁰) - j λ¹`.
    pub second_residual: Option<i64>,
}

impl IlmRow {
    pub fn passes(&self) -> bool {
        self.residual == Some(0) && self.second_residual == Some(0)
    }
}

/// `(λ⁰, λ¹, γ¹ + λ⁰)`.
pub type IlmTriple = (i64, i64, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlmTable {
    pub slice: Slice,
    pub rows: Vec<IlmRow>,
    pub mu_slice: usize,
    /// Values read off the rows alone.
    pub inferred: Option<IlmTriple>,
    /// Values of the invariant record.
    pub expected: IlmTriple,
    pub pass: bool,
}

/// Smallest admissible `j` for a record.
pub fn ilm_threshold(record: &InvariantRecord) -> u32 {
    2 + record.lambda0 as u32
}

/// Default ILM range: four consecutive values from the threshold.
pub fn default_ilm_range(record: &InvariantRecord) -> Vec<u32> {
    let t = ilm_threshold(record);
    (t..t + 4).collect()
}

fn infer_triple(rows: &[(u32, usize)], mu_slice: usize) -> Option<IlmTriple> {
    let (&(ja, ma), &(jb, mb)) = (rows.first()?, rows.last()?);
    if ja == jb {
        return None;
    }
    let dm = mb as i64 - ma as i64;
    let dj = jb as i64 - ja as i64;
    if dm % dj != 0 {
        return None;
    }
    let l1 = dm / dj;
    let l0 = ma as i64 - (ja as i64 - 1) * l1;
    let sum = ma as i64 + mu_slice as i64 - ja as i64 * l1;
    Some((l0, l1, sum))
}

/// Checks both Iomdine–Lê–Massey identities for `f + z1^j` on the given
/// slice.
pub fn verify_ilm(fam: &Family, record: &SliceRecord, j_values: Option<&[u32]>, cfg: &Config) -> Result<IlmTable> {
    let r = &record.record;
    let threshold = ilm_threshold(r);
    let js: Vec<u32> = match j_values {
        Some(js) => js.to_vec(),
        None => default_ilm_range(r),
    };
    if js.is_empty() {
        return Err(Error::InvalidArgument("no values of j requested".into()));
    }
    if let Some(bad) = js.iter().find(|&&j| j < threshold) {
        return Err(Error::InvalidArgument(format!(
            "j = {bad} is below the threshold 2+lambda0 = {threshold}"
        )));
    }
    let f = match record.slice {
        Slice::Zero => fam.f0(),
        Slice::Generic => fam.source(),
    };
    let all: Vec<usize> = (0..fam.nvars()).collect();
    let (l0, l1, g1) = (r.lambda0 as i64, r.lambda1 as i64, r.gamma1 as i64);
    let mut rows = Vec::with_capacity(js.len());
    let mut values = Vec::new();
    for &j in &js {
        let predicted = (l0 + (j as i64 - 1) * l1) as usize;
        let row = match add_power(f, 0, j, &Rational::one()).and_then(|g| milnor_number(&g, &all, cfg)) {
            Ok(mu) => {
                values.push((j, mu));
                let m = mu as i64;
                IlmRow {
                    j,
                    mu: Ok(mu),
                    predicted,
                    residual: Some(m - predicted as i64),
                    second_residual: Some(m + r.mu_slice as i64 - (g1 + l0) - j as i64 * l1),
                }
            }
            Err(e) if e.is_budget() => return Err(e),
            Err(e) => IlmRow { j, mu: Err(e.code().to_string()), predicted, residual: None, second_residual: None },
        };
        rows.push(row);
    }
    let expected = (l0, l1, g1 + l0);
    let inferred = if values.len() == rows.len() { infer_triple(&values, r.mu_slice) } else { None };
    let pass = rows.iter().all(IlmRow::passes) && inferred == Some(expected);
    Ok(IlmTable { slice: record.slice, rows, mu_slice: r.mu_slice, inferred, expected, pass })
}

/// Weights of `f0`, if any.
pub fn family_weights(fam: &Family) -> Result<Option<WeightSystem>> {
    detect_weights(fam.f0())
}

/// True when every term of `p` has the same total degree.
pub fn is_homogeneous(p: &Polynomial) -> bool {
    let mut degrees = p.terms().keys().map(Monomial::degree);
    match degrees.next() {
        None => false,
        Some(d) => degrees.all(|e| e == d),
    }
}
