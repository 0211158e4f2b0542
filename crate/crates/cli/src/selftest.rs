//! Bundled acceptance matrix.

use std::fmt::Write as _;
use std::sync::Arc;

use lecalc_core::family::verdict::{GAMMA1_CONSTANT, POLAR_CURVE_IRREDUCIBLE};
use lecalc_core::family::{
    verify_ilm, Conclusion, EvidenceKind, Family, FamilyAnalysis, Slice, Status, Theorem,
};
use lecalc_core::ideal::{
    colength_at_origin, contains, ideals_equal, is_subideal, saturate, standard_basis, truncation_colength,
    verify_buchberger, Ideal, MonomialOrder,
};
use lecalc_core::poly::{parse_polynomial, Monomial, Polynomial, RatFunc, Rational, Ring, SparsePoly};
use lecalc_core::singularity::{
    check_polar_ratio_lemma, detect_weights, is_line_singularity, lambda_k_vanishing, milnor_number, order_at_origin,
};
use lecalc_core::{Config, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commands::{self, Format};
use crate::corpus::{brieskorn_file, Corpus, BRIESKORN, SUSPENSION_FAMILY, WORKED_FAMILY, WORKED_GERM};
use crate::error::CliError;

/// Cases per random property check.
pub const PROPERTY_CASES: usize = 100;
pub const COLENGTH_CASES: usize = 24;
pub const ORDER_BOUND_CASES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    pub budget: usize,
    pub criteria: Vec<Criterion>,
    pub pass: bool,
}

impl SelftestReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                let _ = writeln!(out, "lecalc selftest (schema {})", self.schema);
                let _ = writeln!(out, "seed: {}", self.seed);
                let _ = writeln!(out, "budget: {}", self.budget);
                for c in &self.criteria {
                    let _ = writeln!(out, "[{}] {:>2} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.name, c.detail);
                }
                let n = self.criteria.iter().filter(|c| c.pass).count();
                let _ = writeln!(out, "result: {n}/{} criteria pass", self.criteria.len());
                out
            }
        }
    }
}

type Check = Result<(bool, String), Error>;

/// Budget exhaustion aborts the run naming the case; other errors fail the
/// criterion.
fn settle(id: u8, name: &str, case: &str, r: Check) -> Result<Criterion, CliError> {
    let (pass, detail) = match r {
        Ok(v) => v,
        Err(e) if e.is_budget() => return Err(CliError::Case { case: case.to_string(), source: e }),
        Err(e) => (false, format!("error {}: {e}", e.code())),
    };
    Ok(Criterion { id, name: name.to_string(), pass, detail })
}

fn analysis(corpus: &Corpus, name: &str, cfg: &Config) -> Result<FamilyAnalysis, Error> {
    let b = corpus.get(name);
    let param = b.ring.params().first().cloned().ok_or_else(|| Error::InvalidFamily(format!("{name} has no parameter")))?;
    FamilyAnalysis::new(Family::new(&b.poly, &param, cfg)?, cfg)
}

fn budget_first<T>(case: &str, r: Result<T, Error>) -> Result<Result<T, Error>, CliError> {
    match r {
        Err(e) if e.is_budget() => Err(CliError::Case { case: case.to_string(), source: e }),
        other => Ok(other),
    }
}

fn worked(a: &Result<FamilyAnalysis, Error>) -> Result<&FamilyAnalysis, Error> {
    a.as_ref().map_err(Clone::clone)
}

fn show_triple(t: (usize, usize, usize)) -> String {
    format!("({},{},{})", t.0, t.1, t.2)
}

fn c1_weights(corpus: &Corpus) -> Check {
    let f = &corpus.get(WORKED_GERM).poly;
    let Some(w) = detect_weights(f)? else { return Ok((false, "no weights".into())) };
    let pass = w.weights() == [6, 4, 5] && w.degree() == 20 && w.w_i0() == 4 && w.smallest_divides_degree();
    Ok((pass, format!("{w}, w_i0 = {}, divides d: {}", w.w_i0(), w.smallest_divides_degree())))
}

fn c2_polar_curve(a: &Result<FamilyAnalysis, Error>, cfg: &Config) -> Check {
    let a = worked(a)?;
    let g = a.generic.as_ref().map_err(Clone::clone)?;
    let curve = &g.record.polar_curve.ideal;
    let want = Ideal::parse(curve.ring(), &["2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2", "z3^3"])?;
    let pass = is_subideal(curve, &want, cfg)? && is_subideal(&want, curve, cfg)?;
    let gens: Vec<String> = curve.generators().iter().map(ToString::to_string).collect();
    Ok((pass, format!("({}) over Q(t)", gens.join(", "))))
}

fn c3_gamma1(a: &Result<FamilyAnalysis, Error>) -> Check {
    let a = worked(a)?;
    let z = a.zero.as_ref().map_err(Clone::clone)?.record.gamma1;
    let g = a.generic.as_ref().map_err(Clone::clone)?.record.gamma1;
    Ok((z == 9 && g == 9, format!("gamma1 = {z} at t=0, {g} over Q(t)")))
}

fn c4_verdict(a: &Result<FamilyAnalysis, Error>, cfg: &Config) -> Check {
    let a = worked(a)?;
    let e = &a.equimultiplicity;
    let v = a.verdicts(false, true, cfg)?;
    let Some(cmt3) = v.iter().find(|v| v.theorem == Theorem::Cmt3) else { return Ok((false, "no cmt3 verdict".into())) };
    let evidence = a.evidence.as_ref().map(|e| e.kind);
    let pass = (e.order_zero, e.order_generic) == (4, 3)
        && cmt3.conclusion == Conclusion::NotTopologicallyVEquisingular
        && cmt3.status_of(GAMMA1_CONSTANT) == Some(Status::Holds)
        && cmt3.status_of(POLAR_CURVE_IRREDUCIBLE) == Some(Status::UserAsserted)
        && evidence == Some(EvidenceKind::Supporting);
    Ok((
        pass,
        format!(
            "orders ({}, {}); cmt3 {}; gamma1 constancy {}; irreducibility {} / {}",
            e.order_zero,
            e.order_generic,
            cmt3.conclusion.label(),
            cmt3.status_of(GAMMA1_CONSTANT).map_or("missing", Status::label),
            cmt3.status_of(POLAR_CURVE_IRREDUCIBLE).map_or("missing", Status::label),
            evidence.map_or("NONE", EvidenceKind::label),
        ),
    ))
}

fn c5_le_data(a: &Result<FamilyAnalysis, Error>, cfg: &Config) -> Check {
    let a = worked(a)?;
    let mut pass = true;
    let mut detail = Vec::new();
    for (slice, want, sum) in [(Slice::Zero, (21, 3), 30), (Slice::Generic, (6, 3), 15)] {
        let s = a.record(slice).map_err(Clone::clone)?;
        let r = &s.record;
        let f = match slice {
            Slice::Zero => a.family.f0(),
            Slice::Generic => a.family.source(),
        };
        let colength = colength_at_origin(&r.polar_curve.ideal.with(f)?, cfg)?.value();
        pass &= (r.lambda0, r.lambda1) == want
            && r.gamma1 + r.lambda0 == sum
            && r.intersection_number == sum
            && colength == Some(sum);
        detail.push(format!(
            "{slice}: lambda0 = {}, lambda1 = {}, gamma1+lambda0 = {}, colength = {}",
            r.lambda0,
            r.lambda1,
            r.gamma1 + r.lambda0,
            colength.map_or("infinite".into(), |c| c.to_string())
        ));
    }
    Ok((pass, detail.join("; ")))
}

fn c6_polar_ratio(a: &Result<FamilyAnalysis, Error>) -> Check {
    let a = worked(a)?;
    let z = a.zero.as_ref().map_err(Clone::clone)?;
    let Some(w) = &a.weights else { return Ok((false, "no weights".into())) };
    let l = check_polar_ratio_lemma(a.family.f0(), w, z.record.polar_ratio.as_ref())?;
    let ten_thirds = Rational::new(10, 3);
    let pass = l.holds() && l.expected_ratio == ten_thirds && z.record.polar_ratio.as_ref() == Some(&ten_thirds);
    Ok((
        pass,
        format!(
            "rho0 = {}/{} = {}, d/w1 = {}, substitution identity {}",
            z.record.gamma1 + z.record.lambda0,
            z.record.gamma1,
            z.record.polar_ratio.as_ref().map_or("none".into(), ToString::to_string),
            l.expected_ratio,
            l.substitution_identity
        ),
    ))
}

fn c7_ilm(a: &Result<FamilyAnalysis, Error>, cfg: &Config) -> Check {
    let a = worked(a)?;
    let mut pass = true;
    let mut detail = Vec::new();
    for (slice, js, want) in [(Slice::Zero, [23, 24, 25, 26], (21, 3, 30)), (Slice::Generic, [8, 9, 10, 11], (6, 3, 15))] {
        let t = verify_ilm(&a.family, a.record(slice).map_err(Clone::clone)?, Some(&js), cfg)?;
        pass &= t.pass && t.mu_slice == 12 && t.inferred == Some(want) && t.rows.iter().all(|r| r.passes());
        let mus: Vec<String> = t.rows.iter().map(|r| r.mu.as_ref().map_or_else(Clone::clone, ToString::to_string)).collect();
        detail.push(format!(
            "{slice}: mu = [{}], mu_slice = {}, inferred {}",
            mus.join(", "),
            t.mu_slice,
            t.inferred.map_or("none".into(), |(x, y, z)| format!("({x},{y},{z})"))
        ));
    }
    Ok((pass, detail.join("; ")))
}

fn c8_suspension(corpus: &Corpus, cfg: &Config) -> Check {
    let a = analysis(corpus, SUSPENSION_FAMILY, cfg)?;
    let mut pass = true;
    let mut data = Vec::new();
    for slice in [Slice::Zero, Slice::Generic] {
        let r = &a.record(slice).map_err(Clone::clone)?.record;
        pass &= (r.lambda0, r.lambda1, r.gamma1) == (0, 4, 0);
        data.push(format!("{slice} {}", show_triple((r.lambda0, r.lambda1, r.gamma1))));
    }
    let v = a.verdicts(false, false, cfg)?;
    let mt2 = v.iter().find(|v| v.theorem == Theorem::Mt2).map(|v| v.conclusion);
    let ratio = a.weights.as_ref().map(|w| Rational::new(w.degree(), w.w_i0()));
    pass &= a.equimultiplicity.is_equimultiple()
        && mt2 == Some(Conclusion::Equimultiple)
        && ratio == Some(Rational::from_integer(3));
    Ok((
        pass,
        format!(
            "(lambda0, lambda1, gamma1): {}; equimultiple {}; mt2 {}; d/w_i0 = {}",
            data.join(", "),
            a.equimultiplicity.is_equimultiple(),
            mt2.map_or("missing", |c| c.label()),
            ratio.map_or("none".into(), |r| r.to_string())
        ),
    ))
}

fn c9_brieskorn(corpus: &Corpus, cfg: &Config) -> Result<Criterion, CliError> {
    let mut pass = true;
    let mut shown = Vec::new();
    for (a, b) in BRIESKORN {
        let name = brieskorn_file(a, b);
        let f = &corpus.get(&name).poly;
        let all: Vec<usize> = (0..f.ring().nvars()).collect();
        let want = ((a - 1) * (b - 1)) as usize;
        match budget_first(&name, milnor_number(f, &all, cfg))? {
            Ok(mu) => {
                pass &= mu == want;
                shown.push(format!("({a},{b}):{mu}"));
            }
            Err(e) => {
                pass = false;
                shown.push(format!("({a},{b}):{}", e.code()));
            }
        }
    }
    Ok(Criterion { id: 9, name: "Milnor-Orlik suite".into(), pass, detail: format!("mu = {}", shown.join(" ")) })
}

/// Random inputs for the property checks.
struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    fn new(seed: u64, stream: u64) -> Gen {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Gen { rng }
    }

    fn small(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    fn rational(&mut self) -> Rational {
        loop {
            let a = self.small(-9, 9);
            if a != 0 {
                return Rational::new(a, self.small(1, 5));
            }
        }
    }

    fn coefficient(&mut self, with_t: bool, fractions: bool) -> RatFunc {
        let c = self.rational();
        if !with_t {
            return RatFunc::from_rational(c);
        }
        let num = SparsePoly::from_terms([(Monomial::var(0, self.rng.random_range(0..3)), c)]);
        if fractions && self.rng.random_bool(0.3) {
            let one = Rational::from_integer(1);
            RatFunc::from_fraction(num, SparsePoly::from_terms([(Monomial::one(), one.clone()), (Monomial::var(0, 1), one)]))
        } else {
            RatFunc::from_poly(num)
        }
    }

    fn exponents(&mut self, max_deg: u32) -> Vec<u32> {
        loop {
            let e: Vec<u32> = (0..3).map(|_| self.rng.random_range(0..=max_deg)).collect();
            if e.iter().sum::<u32>() <= max_deg {
                return e;
            }
        }
    }

    fn polynomial(&mut self, ring: &Arc<Ring>, max_terms: usize, max_deg: u32, fractions: bool) -> Polynomial {
        let terms = self.rng.random_range(0..=max_terms);
        let mut p = Polynomial::zero(ring);
        for _ in 0..terms {
            let e = self.exponents(max_deg);
            let c = self.coefficient(ring.nparams() > 0, fractions);
            p = p.add(&Polynomial::monomial(ring, &e, c)).expect("same ring");
        }
        p
    }

    fn germ(&mut self, ring: &Arc<Ring>, max_terms: usize, max_deg: u32) -> Polynomial {
        let p = self.polynomial(ring, max_terms, max_deg, false);
        p.sub(&Polynomial::constant(ring, p.constant_term())).expect("same ring")
    }

    fn germs(&mut self, ring: &Arc<Ring>, count: std::ops::RangeInclusive<usize>, terms: usize, deg: u32) -> Vec<Polynomial> {
        let k = self.rng.random_range(count);
        (0..k).map(|_| self.germ(ring, terms, deg)).filter(|g| !g.is_zero()).collect()
    }

    /// `z_i^{a_i}` plus higher terms, mixed unimodularly, plus an optional
    /// extra germ: always zero-dimensional at the origin.
    fn zero_dim(&mut self, ring: &Arc<Ring>) -> Vec<Polynomial> {
        let mut gens = Vec::new();
        for i in 0..3 {
            let a = self.rng.random_range(1..=4u32);
            let tail = self.polynomial(ring, 2, 5, false);
            let high = SparsePoly::from_terms(tail.terms().iter().filter(|(m, _)| m.degree() > a).map(|(m, c)| (m.clone(), c.clone())));
            let mut e = vec![0; 3];
            e[i] = a;
            let lead = Polynomial::monomial(ring, &e, RatFunc::from_rational(Rational::from_integer(1)));
            gens.push(lead.add(&Polynomial::from_sparse(ring, high)).expect("same ring"));
        }
        let s = Polynomial::from_i64(ring, self.small(-2, 2));
        let u = Polynomial::from_i64(ring, self.small(-2, 2));
        gens[0] = gens[0].add(&s.mul(&gens[1]).expect("same ring")).expect("same ring");
        gens[1] = gens[1].add(&u.mul(&gens[2]).expect("same ring")).expect("same ring");
        if self.rng.random_bool(0.5) {
            let g = self.germ(ring, 2, 3);
            if !g.is_zero() {
                gens.push(g);
            }
        }
        gens
    }

    /// Weighted homogeneous polynomial with weights in 1..=4, keeping the
    /// pure powers of z2 and z3.
    fn weighted_homogeneous(&mut self, ring: &Arc<Ring>) -> Polynomial {
        let w: Vec<u64> = (0..3).map(|_| self.rng.random_range(1..=4)).collect();
        let l = w.iter().fold(1u64, |acc, &x| num_integer::lcm(acc, x));
        let d = l * self.rng.random_range(1..=2);
        let mut p = Polynomial::zero(ring);
        for a in 0..=d / w[0] {
            for b in 0..=(d - a * w[0]) / w[1] {
                let rest = d - a * w[0] - b * w[1];
                if !rest.is_multiple_of(w[2]) {
                    continue;
                }
                let e = [a as u32, b as u32, (rest / w[2]) as u32];
                let pure = a == 0 && (b == 0 || e[2] == 0);
                if pure || self.rng.random_bool(0.5) {
                    p = p.add(&Polynomial::monomial(ring, &e, RatFunc::from_rational(self.rational()))).expect("same ring");
                }
            }
        }
        p
    }
}

fn ring3(with_t: bool) -> Arc<Ring> {
    let params: &[&str] = if with_t { &["t"] } else { &[] };
    Ring::new(&["z1", "z2", "z3"], params).expect("valid ring")
}

/// Runs `cases` random checks, stopping at the first failure.
fn property(
    name: &str,
    cases: usize,
    mut case: impl FnMut(usize) -> Result<Option<bool>, Error>,
) -> Result<Result<String, String>, CliError> {
    let mut done = 0;
    let mut attempts = 0;
    while done < cases {
        if attempts > cases * 20 {
            return Ok(Err(format!("{name}: only {done}/{cases} usable cases")));
        }
        attempts += 1;
        match case(attempts) {
            Ok(Some(true)) => done += 1,
            Ok(None) => {}
            Ok(Some(false)) => return Ok(Err(format!("{name}: counterexample at case {attempts}"))),
            Err(e) if e.is_budget() => {
                return Err(CliError::Case { case: format!("property {name} case {attempts}"), source: e });
            }
            Err(e) => return Ok(Err(format!("{name}: error {} at case {attempts}: {e}", e.code()))),
        }
    }
    Ok(Ok(format!("{name} {done}/{cases}")))
}

fn ring_axioms(seed: u64) -> Result<Result<String, String>, CliError> {
    let ring = ring3(true);
    let mut g = Gen::new(seed, 1);
    let one = Polynomial::one(&ring);
    let zero = Polynomial::zero(&ring);
    property("ring axioms", PROPERTY_CASES, |_| {
        let a = g.polynomial(&ring, 3, 3, true);
        let b = g.polynomial(&ring, 3, 3, true);
        let c = g.polynomial(&ring, 3, 3, true);
        let ok = a.add(&b)?.add(&c)? == a.add(&b.add(&c)?)?
            && a.add(&b)? == b.add(&a)?
            && a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?
            && a.mul(&b)? == b.mul(&a)?
            && a.mul(&b.add(&c)?)? == a.mul(&b)?.add(&a.mul(&c)?)?
            && a.sub(&a)?.is_zero()
            && a.mul(&one)? == a
            && a.add(&zero)? == a;
        Ok(Some(ok))
    })
}

fn round_trip(seed: u64) -> Result<Result<String, String>, CliError> {
    let ring = ring3(true);
    let mut g = Gen::new(seed, 2);
    property("parser round-trip", PROPERTY_CASES, |_| {
        let p = g.polynomial(&ring, 6, 5, false);
        let q = parse_polynomial(&p.to_string(), &ring)?;
        Ok(Some(q == p))
    })
}

fn buchberger(seed: u64, cfg: &Config) -> Result<Result<String, String>, CliError> {
    let ring = ring3(false);
    let mut g = Gen::new(seed, 3);
    let orders = [MonomialOrder::Global, MonomialOrder::Local, MonomialOrder::elimination(&[0])];
    property("Buchberger criterion", PROPERTY_CASES, |_| {
        let gens = g.germs(&ring, 1..=3, 3, 3);
        if gens.is_empty() {
            return Ok(None);
        }
        let i = Ideal::new(&ring, gens)?;
        for ord in &orders {
            let sb = standard_basis(&i, ord, cfg)?;
            if !verify_buchberger(&sb)? {
                return Ok(Some(false));
            }
            for p in i.generators() {
                if !contains(&sb, p)? {
                    return Ok(Some(false));
                }
            }
        }
        Ok(Some(true))
    })
}

fn saturation(seed: u64, cfg: &Config) -> Result<Result<String, String>, CliError> {
    let ring = ring3(false);
    let mut g = Gen::new(seed, 4);
    property("saturation idempotence", PROPERTY_CASES, |_| {
        let gens = g.germs(&ring, 1..=2, 2, 3);
        if gens.is_empty() {
            return Ok(None);
        }
        let i = Ideal::new(&ring, gens)?;
        let k = Ideal::of_vars(&ring, &[g.rng.random_range(0..3)])?;
        let s = saturate(&i, &k, cfg)?;
        let s2 = saturate(&s, &k, cfg)?;
        Ok(Some(is_subideal(&i, &s, cfg)? && ideals_equal(&s, &s2, cfg)?))
    })
}

fn local_vs_truncation(seed: u64, cfg: &Config) -> Result<Result<String, String>, CliError> {
    let ring = ring3(false);
    let mut g = Gen::new(seed, 5);
    property("local colength vs truncation", COLENGTH_CASES, |_| {
        let i = Ideal::new(&ring, g.zero_dim(&ring))?;
        let local = colength_at_origin(&i, cfg)?;
        Ok(Some(local.is_finite() && local.value() == truncation_colength(&i, cfg)?.value()))
    })
}

fn order_bound(seed: u64) -> Result<Result<String, String>, CliError> {
    let ring = ring3(false);
    let mut g = Gen::new(seed, 6);
    property("order bound ord*w_i0 <= d", ORDER_BOUND_CASES, |_| {
        let f = g.weighted_homogeneous(&ring);
        let Some(w) = detect_weights(&f)? else { return Ok(None) };
        if w.is_ambiguous() {
            return Ok(None);
        }
        Ok(Some(order_at_origin(&f)? as u64 * w.w_i0() <= w.degree()))
    })
}

/// `lambda^k` for `k >= 2` on every corpus line singularity, including the
/// members `f0` and generic `F` of each family.
fn lambda_k(corpus: &Corpus, cfg: &Config) -> Result<Result<String, String>, CliError> {
    let mut checked = 0;
    for (name, b) in corpus.entries() {
        if b.ring.nvars() < 3 {
            continue;
        }
        let mut germs = vec![b.poly.clone()];
        if let Some(t) = b.ring.params().first() {
            if let Ok(fam) = Family::new(&b.poly, t, cfg) {
                germs.push(fam.f0().clone());
            }
        }
        for f in germs {
            let line = budget_first(name, is_line_singularity(&f, cfg))?;
            if !line.as_ref().is_ok_and(|l| l.is_line_singularity()) {
                continue;
            }
            for k in 2..f.ring().nvars() {
                match budget_first(name, lambda_k_vanishing(&f, k, cfg))? {
                    Ok(true) => checked += 1,
                    Ok(false) => return Ok(Err(format!("lambda^{k} nonzero for {name}"))),
                    Err(e) => return Ok(Err(format!("lambda^{k} on {name}: {}", e.code()))),
                }
            }
        }
    }
    if checked == 0 {
        return Ok(Err("no corpus line singularity checked".into()));
    }
    Ok(Ok(format!("lambda^k vanishing {checked} germs")))
}

/// Computes the same reports twice in process and compares bytes.
fn determinism(corpus: &Corpus, seed: u64, budget: usize) -> Result<Result<String, String>, CliError> {
    let mut compared = 0;
    for (name, run) in [
        (WORKED_GERM, commands::invariants_of as fn(&_, &_) -> _),
        (WORKED_FAMILY, commands::family_of),
        (SUSPENSION_FAMILY, commands::ilm_of),
    ] {
        let cfg = corpus.run_config(name, seed, budget);
        let b = corpus.get(name);
        let render = || -> Result<(String, String), CliError> {
            let o = run(b, &cfg)?;
            Ok((o.render(Format::Text), o.render(Format::Json)))
        };
        let first = render().map_err(|e| case_error(name, e))?;
        let second = render().map_err(|e| case_error(name, e))?;
        if first != second {
            return Ok(Err(format!("double run differs for {name}")));
        }
        compared += 1;
    }
    Ok(Ok(format!("double-run byte equality {compared} reports")))
}

fn case_error(name: &str, e: CliError) -> CliError {
    match e {
        CliError::Core(source) => CliError::Case { case: name.to_string(), source },
        other => other,
    }
}

fn c10_properties(corpus: &Corpus, seed: u64, budget: usize, cfg: &Config) -> Result<Criterion, CliError> {
    let results = [
        ring_axioms(seed)?,
        round_trip(seed)?,
        buchberger(seed, cfg)?,
        saturation(seed, cfg)?,
        local_vs_truncation(seed, cfg)?,
        lambda_k(corpus, cfg)?,
        order_bound(seed)?,
        determinism(corpus, seed, budget)?,
    ];
    let pass = results.iter().all(Result::is_ok);
    let detail: Vec<String> = results.into_iter().map(|r| r.unwrap_or_else(|e| format!("FAILED {e}"))).collect();
    Ok(Criterion { id: 10, name: "property suites".into(), pass, detail: detail.join("; ") })
}

/// Runs criteria 1 to 10 on the corpus.
pub fn run(corpus: &Corpus, seed: u64, budget: usize) -> Result<SelftestReport, CliError> {
    let mut cfg = Config::with_seed(seed);
    cfg.budget = budget;
    let mut criteria = vec![settle(1, "weights of the worked germ", WORKED_GERM, c1_weights(corpus))?];
    let w = budget_first(WORKED_FAMILY, analysis(corpus, WORKED_FAMILY, &cfg))?;
    criteria.push(settle(2, "polar curve of the worked family", WORKED_FAMILY, c2_polar_curve(&w, &cfg))?);
    criteria.push(settle(3, "gamma1 of the worked family", WORKED_FAMILY, c3_gamma1(&w))?);
    criteria.push(settle(4, "equimultiplicity and cmt3 verdict", WORKED_FAMILY, c4_verdict(&w, &cfg))?);
    criteria.push(settle(5, "Le data of the worked family", WORKED_FAMILY, c5_le_data(&w, &cfg))?);
    criteria.push(settle(6, "polar ratio lemma", WORKED_FAMILY, c6_polar_ratio(&w))?);
    criteria.push(settle(7, "ILM identities", WORKED_FAMILY, c7_ilm(&w, &cfg))?);
    criteria.push(settle(8, "suspension family", SUSPENSION_FAMILY, c8_suspension(corpus, &cfg))?);
    criteria.push(c9_brieskorn(corpus, &cfg)?);
    criteria.push(c10_properties(corpus, seed, budget, &cfg)?);
    let pass = criteria.iter().all(|c| c.pass);
    Ok(SelftestReport { schema: crate::report::SCHEMA, command: "selftest".into(), seed, budget, criteria, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_reproducible() {
        let ring = ring3(true);
        let draw = |seed| {
            let mut g = Gen::new(seed, 1);
            (0..5).map(|_| g.polynomial(&ring, 4, 3, true).to_string()).collect::<Vec<_>>()
        };
        assert_eq!(draw(11), draw(11));
        assert_ne!(draw(11), draw(12));
    }

    #[test]
    fn selftest_passes_and_budget_names_the_case() {
        let corpus = Corpus::bundled().unwrap();
        let r = run(&corpus, 0, lecalc_core::config::DEFAULT_BUDGET).unwrap();
        assert!(r.pass, "{}", r.render(Format::Text));
        assert_eq!(r.criteria.len(), 10);
        let e = run(&corpus, 0, 10).unwrap_err();
        assert!(matches!(e, CliError::Case { .. }), "{e}");
    }
}
