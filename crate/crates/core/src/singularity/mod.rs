//! Invariants of a polynomial germ at the origin whose singular locus is the
//! `z1`-axis: order, weights, Milnor numbers, the polar curve, Lê numbers
//! and the polar ratio.

mod weights;

use std::sync::Arc;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::ideal::{
    colength_at_origin, contains_local_unit, dimension_at_origin, saturate, vector_space_dimension,
    ColengthResult, Ideal, LocalDimension,
};
use crate::poly::{square_factor_witness, Field, Polynomial, RatFunc, Rational, Ring};

pub use weights::{detect_weights, milnor_orlik, WeightSystem};

/// Sampler streams, one per randomized check.
const STREAM_LAMBDA1: u64 = 1;
const STREAM_LAMBDA_K: u64 = 2;
const STREAM_REDRAW: u64 = 1 << 32;

fn ensure_through_origin(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroInput("germ of the zero polynomial"));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NotThroughOrigin);
    }
    Ok(())
}

/// Minimal total degree of a term of `f`.
pub fn order_at_origin(f: &Polynomial) -> Result<u32> {
    ensure_through_origin(f)?;
    Ok(f.low_degree().expect("nonzero"))
}

/// Multiplicity of a reduced germ, which is its order.
pub fn multiplicity_at_origin(f: &Polynomial) -> Result<u32> {
    ensure_through_origin(f)?;
    let w = square_factor_witness(f)?;
    if !w.is_constant() {
        return Err(Error::NonReduced { witness: w.to_string() });
    }
    order_at_origin(f)
}

/// Milnor number of `f` as a function of the variables `vars` (the others
/// must not occur).
pub fn milnor_number(f: &Polynomial, vars: &[usize], cfg: &Config) -> Result<usize> {
    ensure_through_origin(f)?;
    let g = f.restrict_to_vars(vars)?;
    let jac = match Ideal::new(g.ring(), g.gradient()) {
        Ok(j) => j,
        Err(Error::ZeroIdeal) => return Err(Error::NonIsolated),
        Err(e) => return Err(e),
    };
    colength_at_origin(&jac, cfg)?.value().ok_or(Error::NonIsolated)
}

/// The three ingredients of the line-singularity test along the `z1`-axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSingularityCheck {
    /// Every partial derivative vanishes identically on the axis.
    pub vanishes_on_axis: bool,
    /// `f|V(z1)` has an isolated singularity.
    pub slice_isolated: bool,
    /// Milnor number of `f|V(z1)` when finite.
    pub slice_milnor: Option<usize>,
    /// The Jacobian ideal saturated by `(z2, ..., zn)` still passes through
    /// the origin.
    pub extra_critical_component_at_origin: bool,
}

impl LineSingularityCheck {
    pub fn is_line_singularity(&self) -> bool {
        self.vanishes_on_axis && self.slice_isolated && !self.extra_critical_component_at_origin
    }

    /// Name of the first failing field.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.vanishes_on_axis {
            Some("vanishes_on_axis")
        } else if !self.slice_isolated {
            Some("slice_isolated")
        } else if self.extra_critical_component_at_origin {
            Some("extra_critical_component_at_origin")
        } else {
            None
        }
    }

    pub fn require(&self) -> Result<()> {
        match self.failure() {
            None => Ok(()),
            Some(field) => Err(Error::NotLineSingularity(format!("{field} check failed"))),
        }
    }
}

fn axis_ideal(ring: &Arc<Ring>) -> Result<Ideal> {
    Ideal::of_vars(ring, &(1..ring.nvars()).collect::<Vec<_>>())
}

/// Tests whether the singular locus of `f` near the origin is the `z1`-axis
/// with an isolated transversal slice.
pub fn is_line_singularity(f: &Polynomial, cfg: &Config) -> Result<LineSingularityCheck> {
    ensure_through_origin(f)?;
    let n = f.ring().nvars();
    if n < 2 {
        return Err(Error::InvalidArgument("a line singularity needs at least two variables".into()));
    }
    let grad = f.gradient();
    let vanishes_on_axis = grad.iter().all(|p| {
        let mut q = p.clone();
        for i in 1..n {
            q = q.eval_var(i, &Rational::zero());
        }
        q.is_zero()
    });
    let slice = f.slice_at_zero(0)?;
    let slice_milnor = if slice.is_zero() {
        None
    } else {
        match milnor_number(&slice, &(0..n - 1).collect::<Vec<_>>(), cfg) {
            Ok(mu) => Some(mu),
            Err(Error::NonIsolated) => None,
            Err(e) => return Err(e),
        }
    };
    let extra = match Ideal::new(f.ring(), grad) {
        Ok(jac) => !contains_local_unit(&saturate(&jac, &axis_ideal(f.ring())?, cfg)?, cfg)?,
        Err(Error::ZeroIdeal) => true,
        Err(e) => return Err(e),
    };
    Ok(LineSingularityCheck {
        vanishes_on_axis,
        slice_isolated: slice_milnor.is_some(),
        slice_milnor,
        extra_critical_component_at_origin: extra,
    })
}

/// The relative polar curve: `(df/dz2, ..., df/dzn)` with the axis removed.
#[derive(Clone, Debug)]
pub struct PolarCurve {
    /// Saturation of the partials by `(z2, ..., zn)`.
    pub ideal: Ideal,
    /// True when the ideal is the unit ideal near the origin.
    pub locally_empty: bool,
}

/// Computes the polar curve and asserts it is a curve (or empty) at the
/// origin.
pub fn polar_variety_1(f: &Polynomial, cfg: &Config) -> Result<PolarCurve> {
    ensure_through_origin(f)?;
    let ring = f.ring();
    let partials: Vec<Polynomial> = (1..ring.nvars()).map(|i| f.derivative(i)).collect();
    let i = Ideal::new(ring, partials)
        .map_err(|_| Error::DimensionAssertion("partials in z2..zn all vanish".into()))?;
    let ideal = saturate(&i, &axis_ideal(ring)?, cfg)?;
    match dimension_at_origin(&ideal, cfg)? {
        LocalDimension::Empty => Ok(PolarCurve { ideal, locally_empty: true }),
        LocalDimension::Dim(1) => Ok(PolarCurve { ideal, locally_empty: false }),
        LocalDimension::Dim(d) => Err(Error::DimensionAssertion(format!("polar variety has dimension {d} at the origin"))),
    }
}

fn curve_intersection(curve: &PolarCurve, h: &Polynomial, what: &str, cfg: &Config) -> Result<usize> {
    if curve.locally_empty {
        return Ok(0);
    }
    let i = curve
        .ideal
        .with(h)
        .map_err(|e| if e == Error::ZeroIdeal { Error::Internal("empty polar ideal".into()) } else { e })?;
    match colength_at_origin(&i, cfg)? {
        ColengthResult::Finite { value, .. } => Ok(value),
        ColengthResult::Infinite => Err(Error::ImproperIntersection(format!("polar curve meets {what} in a positive-dimensional set"))),
    }
}

/// `([Γ¹]·[V(z1)])` at the origin.
pub fn gamma1(f: &Polynomial, curve: &PolarCurve, cfg: &Config) -> Result<usize> {
    curve_intersection(curve, &Polynomial::var(f.ring(), 0), "V(z1)", cfg)
}

/// `([Γ¹]·[V(df/dz1)])` at the origin.
pub fn lambda0(f: &Polynomial, curve: &PolarCurve, cfg: &Config) -> Result<usize> {
    curve_intersection(curve, &f.derivative(0), "V(df/dz1)", cfg)
}

/// `([Γ¹]·[V(f)])` at the origin.
pub fn polar_intersection_number(f: &Polynomial, curve: &PolarCurve, cfg: &Config) -> Result<usize> {
    curve_intersection(curve, f, "V(f)", cfg)
}

fn slice_milnor_at(f: &Polynomial, z1: &Rational, cfg: &Config) -> Result<Option<usize>> {
    let n = f.ring().nvars();
    let g = f.eval_var(0, z1).restrict_to_vars(&(1..n).collect::<Vec<_>>())?;
    let jac = match Ideal::new(g.ring(), g.gradient()) {
        Ok(j) => j,
        Err(Error::ZeroIdeal) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(colength_at_origin(&jac, cfg)?.value())
}

/// First Lê number: the Milnor number of the transversal slice at a generic
/// point of the axis, with `z1` treated as transcendental. Cross-checked at
/// two random rational values of `z1`.
pub fn lambda1(f: &Polynomial, cfg: &Config) -> Result<(usize, Vec<Rational>)> {
    ensure_through_origin(f)?;
    let g = f.promote_var(0)?;
    let jac = Ideal::new(g.ring(), g.gradient())
        .map_err(|_| Error::Internal("slice partials vanish at the generic axis point".into()))?;
    let generic = colength_at_origin(&jac, cfg)?
        .value()
        .ok_or_else(|| Error::Internal("transversal slice is not isolated along the axis".into()))?;
    for attempt in 0..2 {
        let mut s = cfg.sampler(STREAM_LAMBDA1 + attempt * STREAM_REDRAW);
        let points = s.distinct(2, &[]);
        let mut agree = true;
        for p in &points {
            if slice_milnor_at(f, p, cfg)? != Some(generic) {
                agree = false;
            }
        }
        if agree {
            return Ok((generic, points));
        }
    }
    Err(Error::UnluckySpecialization(format!("slice Milnor number disagrees with the generic value {generic}")))
}

/// Polar variety `Γᵏ` as an ideal; `None` is the whole space.
fn polar_variety(f: &Polynomial, k: usize, cfg: &Config) -> Result<Option<Ideal>> {
    let ring = f.ring();
    let partials: Vec<Polynomial> = (k..ring.nvars()).map(|i| f.derivative(i)).collect();
    match Ideal::new(ring, partials) {
        Ok(i) => Ok(Some(saturate(&i, &axis_ideal(ring)?, cfg)?)),
        Err(Error::ZeroIdeal) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Checks that the Lê cycle `Λᵏ` vanishes, comparing the degrees of
/// `Γᵏ⁺¹ ∩ V(df/dz_{k+1})` and `Γᵏ` on a random translate of
/// `V(z1, ..., zk)`.
pub fn lambda_k_vanishing(f: &Polynomial, k: usize, cfg: &Config) -> Result<bool> {
    ensure_through_origin(f)?;
    let ring = f.ring();
    let n = ring.nvars();
    if k < 2 || k >= n {
        return Err(Error::InvalidArgument(format!("Lê index {k} outside 2..{}", n.saturating_sub(1))));
    }
    let points = cfg.sampler(STREAM_LAMBDA_K + k as u64).distinct(k, &[]);
    let cut: Vec<Polynomial> = points
        .iter()
        .enumerate()
        .map(|(i, p)| Polynomial::var(ring, i).sub(&Polynomial::from_rational(ring, p.clone())))
        .collect::<Result<_>>()?;
    let cut = Ideal::new(ring, cut)?;
    let upper = match polar_variety(f, k + 1, cfg)? {
        Some(i) => i.with(&f.derivative(k))?,
        None => match Ideal::new(ring, vec![f.derivative(k)]) {
            Ok(i) => i,
            Err(Error::ZeroIdeal) => return Ok(false),
            Err(e) => return Err(e),
        },
    };
    let Some(lower) = polar_variety(f, k, cfg)? else { return Ok(false) };
    let a = vector_space_dimension(&upper.sum(&cut)?, cfg)?;
    let b = vector_space_dimension(&lower.sum(&cut)?, cfg)?;
    Ok(a.is_finite() && a == b)
}

/// `(γ¹ + λ⁰) / γ¹`, undefined when the polar curve is empty.
pub fn polar_ratio(gamma1: usize, lambda0: usize) -> Option<Rational> {
    (gamma1 > 0).then(|| Rational::new((gamma1 + lambda0) as i64, gamma1 as i64))
}

/// Reduced Euler characteristic of the Milnor fibre from the Lê numbers.
pub fn euler_reduced(lambda0: usize, lambda1: usize, n: usize) -> i64 {
    let sign = |e: usize| if e.is_multiple_of(2) { 1i64 } else { -1 };
    sign(n - 1) * lambda0 as i64 + sign(n - 2) * lambda1 as i64
}

/// Outcome of the monomial-curve check for a weighted homogeneous `f0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarRatioLemma {
    /// `f0(a1 s^w1, ..., an s^wn) = f0(a) s^d` holds symbolically.
    pub substitution_identity: bool,
    /// `d / w1`.
    pub expected_ratio: Rational,
    /// The ratio computed from the polar data, when the polar curve is
    /// nonempty.
    pub computed_ratio: Option<Rational>,
}

impl PolarRatioLemma {
    /// `None` when no ratio was available to compare.
    pub fn ratio_confirmed(&self) -> Option<bool> {
        self.computed_ratio.as_ref().map(|r| *r == self.expected_ratio)
    }

    pub fn holds(&self) -> bool {
        self.substitution_identity && self.ratio_confirmed() != Some(false)
    }
}

/// Verifies the monomial-curve identity for `f0` and compares `d / w1` with
/// a computed polar ratio.
pub fn check_polar_ratio_lemma(f0: &Polynomial, w: &WeightSystem, computed: Option<&Rational>) -> Result<PolarRatioLemma> {
    if !w.is_homogeneous(f0) {
        return Err(Error::WeightMismatch(format!("{f0} is not weighted homogeneous for {w}")));
    }
    let src = f0.ring();
    let n = src.nvars();
    let s_name = src.fresh_name("s");
    let mut params: Vec<String> = src.params().to_vec();
    let mut a_names = Vec::with_capacity(n);
    for i in 0..n {
        let probe = Ring::from_names(vec![s_name.clone()], params.clone())?;
        let name = probe.fresh_name(&format!("a{}", i + 1));
        params.push(name.clone());
        a_names.push(name);
    }
    let target = Ring::from_names(vec![s_name], params)?;
    let s = Polynomial::var(&target, 0);
    let coeffs: Vec<Polynomial> = a_names.iter().map(|a| Polynomial::param(&target, a)).collect::<Result<_>>()?;
    let images: Vec<Polynomial> = (0..n)
        .map(|i| coeffs[i].mul(&s.pow(w.weights()[i] as u32)?))
        .collect::<Result<_>>()?;
    let lhs = f0.substitute(&images, &target)?;
    let at_a = f0.substitute(&coeffs, &target)?;
    let rhs = at_a.mul(&s.pow(w.degree() as u32)?)?;
    let z1_order = images[0].low_degree();
    Ok(PolarRatioLemma {
        substitution_identity: lhs == rhs && z1_order == Some(w.weights()[0] as u32),
        expected_ratio: w.ratio(0),
        computed_ratio: computed.cloned(),
    })
}

/// Everything computed for one germ with a line singularity.
#[derive(Clone, Debug)]
pub struct InvariantRecord {
    pub order: u32,
    pub multiplicity: u32,
    /// Detected weights; `None` for parametric input or when no weight system
    /// exists.
    pub weights: Option<WeightSystem>,
    pub lambda0: usize,
    pub lambda1: usize,
    pub gamma1: usize,
    pub polar_ratio: Option<Rational>,
    pub euler_reduced: i64,
    pub mu_slice: usize,
    /// `([Γ¹]·[V(f)])` at the origin, equal to `γ¹ + λ⁰`.
    pub intersection_number: usize,
    pub polar_curve: PolarCurve,
    pub line: LineSingularityCheck,
    /// Values of `z1` at which the slice Milnor number was confirmed.
    pub lambda1_witnesses: Vec<Rational>,
}

/// Computes the full record, refusing input that is not a reduced line
/// singularity.
pub fn invariants(f: &Polynomial, cfg: &Config) -> Result<InvariantRecord> {
    let order = order_at_origin(f)?;
    let multiplicity = multiplicity_at_origin(f)?;
    let line = is_line_singularity(f, cfg)?;
    line.require()?;
    let weights = if f.has_rational_coefficients() && f.ring().nparams() == 0 { detect_weights(f)? } else { None };
    let polar_curve = polar_variety_1(f, cfg)?;
    let g1 = gamma1(f, &polar_curve, cfg)?;
    let l0 = lambda0(f, &polar_curve, cfg)?;
    let (l1, lambda1_witnesses) = lambda1(f, cfg)?;
    let intersection_number = polar_intersection_number(f, &polar_curve, cfg)?;
    if intersection_number != g1 + l0 {
        return Err(Error::Internal(format!(
            "polar intersection {intersection_number} differs from gamma1 + lambda0 = {}",
            g1 + l0
        )));
    }
    let mu_slice = line.slice_milnor.expect("checked line singularity");
    Ok(InvariantRecord {
        order,
        multiplicity,
        weights,
        lambda0: l0,
        lambda1: l1,
        gamma1: g1,
        polar_ratio: polar_ratio(g1, l0),
        euler_reduced: euler_reduced(l0, l1, f.ring().nvars()),
        mu_slice,
        intersection_number,
        polar_curve,
        line,
        lambda1_witnesses,
    })
}

/// `λ⁰` of an isolated singularity through the polar curve, the singular
/// locus being the origin.
pub fn lambda0_isolated(f: &Polynomial, cfg: &Config) -> Result<usize> {
    ensure_through_origin(f)?;
    let ring = f.ring();
    let partials: Vec<Polynomial> = (1..ring.nvars()).map(|i| f.derivative(i)).collect();
    let maximal = Ideal::of_vars(ring, &(0..ring.nvars()).collect::<Vec<_>>())?;
    let curve = match Ideal::new(ring, partials) {
        Ok(i) => saturate(&i, &maximal, cfg)?,
        Err(Error::ZeroIdeal) => return Err(Error::NonIsolated),
        Err(e) => return Err(e),
    };
    let i = curve.with(&f.derivative(0)).map_err(|_| Error::NonIsolated)?;
    colength_at_origin(&i, cfg)?.value().ok_or(Error::NonIsolated)
}

/// Data reported for an isolated singularity refused by the line-singularity
/// gate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRecord {
    pub order: u32,
    pub milnor: usize,
    pub weights: Option<WeightSystem>,
}

/// The isolated-singularity record, or `None` when `f` is not an isolated
/// singularity at the origin.
pub fn isolated_record(f: &Polynomial, cfg: &Config) -> Result<Option<IsolatedRecord>> {
    let order = order_at_origin(f)?;
    let milnor = match milnor_number(f, &(0..f.ring().nvars()).collect::<Vec<_>>(), cfg) {
        Ok(mu) => mu,
        Err(Error::NonIsolated) => return Ok(None),
        Err(e) => return Err(e),
    };
    let weights = if f.ring().nparams() == 0 { detect_weights(f)? } else { None };
    Ok(Some(IsolatedRecord { order, milnor, weights }))
}

/// `f + c z_i^e` for a constant `c`.
pub fn add_power(f: &Polynomial, i: usize, e: u32, c: &Rational) -> Result<Polynomial> {
    let mut exps = vec![0; f.ring().nvars()];
    exps[i] = e;
    f.add(&Polynomial::monomial(f.ring(), &exps, RatFunc::from_rational(c.clone())))
}

#[cfg(test)]
mod tests;
