//! Report model shared by the text and JSON renderers.

use std::fmt::Write as _;

use lecalc_core::family::{Equimultiplicity, Family, IlmTable, IrreducibilityEvidence, SliceRecord, TheoremVerdict, UpperReport};
use lecalc_core::poly::Rational;
use lecalc_core::singularity::{InvariantRecord, IsolatedRecord, PolarRatioLemma, WeightSystem};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub input: InputOut,
    pub seed: u64,
    pub budget: usize,
    pub weights: Option<WeightsOut>,
    pub invariants: Option<InvariantsField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyOut>,
    pub verdicts: Vec<VerdictOut>,
    pub ilm: Option<IlmOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<String>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isolated: Option<IsolatedOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputOut {
    pub origin: String,
    pub expression: String,
    pub vars: Vec<String>,
    pub param: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightsOut {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub free: Vec<bool>,
    pub ambiguous: bool,
    pub i0: String,
    pub w_i0: u64,
    pub smallest_divides_degree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum InvariantsField {
    Single(InvariantsOut),
    Slices { zero: SliceOut, generic: SliceOut },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantsOut {
    pub order: u32,
    pub multiplicity: u32,
    pub lambda0: usize,
    pub lambda1: usize,
    pub gamma1: usize,
    pub polar_ratio: Option<String>,
    pub euler_reduced: i64,
    pub mu_slice: usize,
    pub intersection_number: usize,
    pub polar_curve: Vec<String>,
    pub polar_curve_empty: bool,
    pub lambda1_witnesses: Vec<String>,
    pub line_singularity: LineOut,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lambda_k_vanishing: Vec<LambdaK>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polar_ratio_lemma: Option<LemmaOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineOut {
    pub vanishes_on_axis: bool,
    pub slice_isolated: bool,
    pub slice_milnor: Option<usize>,
    pub extra_critical_component_at_origin: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaK {
    pub k: usize,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaOut {
    pub substitution_identity: bool,
    pub expected_ratio: String,
    pub computed_ratio: Option<String>,
    pub confirmed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceOut {
    pub record: Option<InvariantsOut>,
    pub refusal: Option<ErrorOut>,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsolatedOut {
    pub order: u32,
    pub milnor: usize,
    pub weights: Option<WeightsOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyOut {
    pub param: String,
    pub f0: String,
    pub deformation: Vec<DeformationTerm>,
    pub reduced_checked_at: Vec<String>,
    pub upper: Option<UpperOut>,
    pub order_zero: u32,
    pub order_generic: u32,
    pub equimultiplicity: String,
    pub evidence: Option<EvidenceOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeformationTerm {
    pub j: u32,
    pub g: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UpperOut {
    pub upper: bool,
    pub offenders: Vec<OffenderOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OffenderOut {
    pub j: u32,
    pub monomial: String,
    pub weighted_degree: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvidenceOut {
    pub kind: String,
    pub stamp: String,
    pub generators: Vec<GeneratorOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorOut {
    pub generator: String,
    pub factors: Vec<(String, u32)>,
    pub units: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictOut {
    pub theorem: String,
    pub kind: String,
    pub conclusion: String,
    pub hypotheses: Vec<HypothesisOut>,
    pub user_asserted: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypothesisOut {
    pub id: String,
    pub name: String,
    pub status: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IlmOut {
    pub tables: Vec<IlmTableOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IlmTableOut {
    pub slice: String,
    pub rows: Vec<IlmRowOut>,
    pub mu_slice: usize,
    pub inferred: Option<[i64; 3]>,
    pub expected: [i64; 3],
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IlmRowOut {
    pub j: u32,
    pub mu: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub predicted: usize,
    pub residual: Option<i64>,
    pub second_residual: Option<i64>,
    pub pass: bool,
}

/// `p/q`, or `p` for integers.
pub fn rational(r: &Rational) -> String {
    r.to_string()
}

pub fn weights(w: &WeightSystem, vars: &[String]) -> WeightsOut {
    WeightsOut {
        weights: w.weights().to_vec(),
        degree: w.degree(),
        free: w.free_flags().to_vec(),
        ambiguous: w.is_ambiguous(),
        i0: vars[w.i0()].clone(),
        w_i0: w.w_i0(),
        smallest_divides_degree: w.smallest_divides_degree(),
    }
}

pub fn invariants(r: &InvariantRecord) -> InvariantsOut {
    InvariantsOut {
        order: r.order,
        multiplicity: r.multiplicity,
        lambda0: r.lambda0,
        lambda1: r.lambda1,
        gamma1: r.gamma1,
        polar_ratio: r.polar_ratio.as_ref().map(rational),
        euler_reduced: r.euler_reduced,
        mu_slice: r.mu_slice,
        intersection_number: r.intersection_number,
        polar_curve: r.polar_curve.ideal.generators().iter().map(ToString::to_string).collect(),
        polar_curve_empty: r.polar_curve.locally_empty,
        lambda1_witnesses: r.lambda1_witnesses.iter().map(rational).collect(),
        line_singularity: LineOut {
            vanishes_on_axis: r.line.vanishes_on_axis,
            slice_isolated: r.line.slice_isolated,
            slice_milnor: r.line.slice_milnor,
            extra_critical_component_at_origin: r.line.extra_critical_component_at_origin,
        },
        lambda_k_vanishing: Vec::new(),
        polar_ratio_lemma: None,
    }
}

pub fn lemma(l: &PolarRatioLemma) -> LemmaOut {
    LemmaOut {
        substitution_identity: l.substitution_identity,
        expected_ratio: rational(&l.expected_ratio),
        computed_ratio: l.computed_ratio.as_ref().map(rational),
        confirmed: l.ratio_confirmed(),
    }
}

pub fn error(e: &lecalc_core::Error) -> ErrorOut {
    ErrorOut { code: e.code().to_string(), message: e.to_string() }
}

pub fn slice(r: &Result<SliceRecord, lecalc_core::Error>) -> SliceOut {
    match r {
        Ok(s) => SliceOut { record: Some(invariants(&s.record)), refusal: None, witnesses: s.witnesses.iter().map(rational).collect() },
        Err(e) => SliceOut { record: None, refusal: Some(error(e)), witnesses: Vec::new() },
    }
}

pub fn isolated(r: &IsolatedRecord, vars: &[String]) -> IsolatedOut {
    IsolatedOut { order: r.order, milnor: r.milnor, weights: r.weights.as_ref().map(|w| weights(w, vars)) }
}

pub fn family(
    fam: &Family,
    upper: Option<&UpperReport>,
    eq: &Equimultiplicity,
    evidence: Option<&IrreducibilityEvidence>,
) -> FamilyOut {
    FamilyOut {
        param: fam.param().to_string(),
        f0: fam.f0().to_string(),
        deformation: fam.deformation().iter().map(|(j, g)| DeformationTerm { j: *j, g: g.to_string() }).collect(),
        reduced_checked_at: fam.reduced_checked_at().iter().map(rational).collect(),
        upper: upper.map(|u| UpperOut {
            upper: u.upper,
            offenders: u
                .offenders
                .iter()
                .map(|o| OffenderOut { j: o.j, monomial: o.monomial.clone(), weighted_degree: o.weighted_degree })
                .collect(),
        }),
        order_zero: eq.order_zero,
        order_generic: eq.order_generic,
        equimultiplicity: eq.label().to_string(),
        evidence: evidence.map(|e| EvidenceOut {
            kind: e.kind.label().to_string(),
            stamp: e.stamp.to_string(),
            generators: e
                .generators
                .iter()
                .map(|g| GeneratorOut { generator: g.generator.clone(), factors: g.factors.clone(), units: g.units.clone() })
                .collect(),
        }),
    }
}

pub fn verdict(v: &TheoremVerdict) -> VerdictOut {
    VerdictOut {
        theorem: v.theorem.id().to_string(),
        kind: v.theorem.kind().to_string(),
        conclusion: v.conclusion.label().to_string(),
        hypotheses: v
            .hypotheses
            .iter()
            .map(|h| HypothesisOut { id: h.id.clone(), name: h.name.clone(), status: h.status.label().to_string(), witness: h.witness.clone() })
            .collect(),
        user_asserted: v.user_asserted().into_iter().map(str::to_string).collect(),
        notes: v.notes.clone(),
    }
}

pub fn ilm_table(t: &IlmTable) -> IlmTableOut {
    let triple = |(a, b, c): (i64, i64, i64)| [a, b, c];
    IlmTableOut {
        slice: t.slice.label().to_string(),
        rows: t
            .rows
            .iter()
            .map(|r| IlmRowOut {
                j: r.j,
                mu: r.mu.as_ref().ok().copied(),
                error: r.mu.as_ref().err().cloned(),
                predicted: r.predicted,
                residual: r.residual,
                second_residual: r.second_residual,
                pass: r.passes(),
            })
            .collect(),
        mu_slice: t.mu_slice,
        inferred: t.inferred.map(triple),
        expected: triple(t.expected),
        pass: t.pass,
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "none".to_string(), ToString::to_string)
}

fn show_weights(w: &WeightsOut) -> String {
    let ws: Vec<String> = w.weights.iter().zip(&w.free).map(|(x, f)| if *f { format!("{x}*") } else { x.to_string() }).collect();
    format!("({}), d={}", ws.join(","), w.degree)
}

fn write_invariants(out: &mut String, indent: &str, r: &InvariantsOut) {
    let _ = writeln!(out, "{indent}order: {}", r.order);
    let _ = writeln!(out, "{indent}multiplicity: {}", r.multiplicity);
    let _ = writeln!(out, "{indent}lambda0: {}", r.lambda0);
    let _ = writeln!(out, "{indent}lambda1: {}", r.lambda1);
    let _ = writeln!(out, "{indent}gamma1: {}", r.gamma1);
    let _ = writeln!(out, "{indent}gamma1+lambda0: {}", r.intersection_number);
    let _ = writeln!(out, "{indent}polar_ratio: {}", opt(&r.polar_ratio));
    let _ = writeln!(out, "{indent}euler_reduced: {}", r.euler_reduced);
    let _ = writeln!(out, "{indent}mu_slice: {}", r.mu_slice);
    let curve = if r.polar_curve_empty { "empty at the origin".to_string() } else { format!("({})", r.polar_curve.join(", ")) };
    let _ = writeln!(out, "{indent}polar_curve: {curve}");
    let l = &r.line_singularity;
    let _ = writeln!(
        out,
        "{indent}line_singularity: axis={} slice_isolated={} slice_milnor={} extra_component={}",
        l.vanishes_on_axis,
        l.slice_isolated,
        opt(&l.slice_milnor),
        l.extra_critical_component_at_origin
    );
    if !r.lambda1_witnesses.is_empty() {
        let _ = writeln!(out, "{indent}lambda1 confirmed at z1 = {}", r.lambda1_witnesses.join(", "));
    }
    for lk in &r.lambda_k_vanishing {
        let _ = writeln!(out, "{indent}lambda{}: {}", lk.k, if lk.vanishes { "0 (checked)" } else { "NONZERO" });
    }
    if let Some(l) = &r.polar_ratio_lemma {
        let _ = writeln!(
            out,
            "{indent}polar ratio lemma: substitution identity {}, d/w1 = {}, computed {}",
            if l.substitution_identity { "holds" } else { "FAILS" },
            l.expected_ratio,
            opt(&l.computed_ratio)
        );
    }
}

/// Deterministic human-readable rendering.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lecalc {} (schema {})", r.command, r.schema);
    let _ = writeln!(out, "input: {} [{}]", r.input.expression, r.input.origin);
    let _ = writeln!(out, "vars: {}", r.input.vars.join(", "));
    if let Some(p) = &r.input.param {
        let _ = writeln!(out, "param: {p}");
    }
    let _ = writeln!(out, "seed: {}", r.seed);
    let _ = writeln!(out, "budget: {}", r.budget);
    if let Some(e) = &r.error {
        let _ = writeln!(out, "error: {}: {}", e.code, e.message);
    }
    match &r.weights {
        Some(w) => {
            let _ = writeln!(
                out,
                "weights: {} (i0 = {}, w_i0 = {}, w_i0 divides d: {})",
                show_weights(w),
                w.i0,
                w.w_i0,
                w.smallest_divides_degree
            );
        }
        None if r.command != "ilm" => {
            let _ = writeln!(out, "weights: none");
        }
        None => {}
    }
    if let Some(f) = &r.family {
        let _ = writeln!(out, "family:");
        let _ = writeln!(out, "  f0: {}", f.f0);
        for d in &f.deformation {
            let _ = writeln!(out, "  g{}: {}", d.j, d.g);
        }
        let _ = writeln!(out, "  reduced at {} = 0, {}", f.param, f.reduced_checked_at.join(", "));
        if let Some(u) = &f.upper {
            let _ = writeln!(out, "  upper: {}", u.upper);
            for o in &u.offenders {
                let _ = writeln!(out, "    offender: t^{} * {} (weighted degree {})", o.j, o.monomial, o.weighted_degree);
            }
        }
        let _ = writeln!(out, "  orders: {} at {}=0, {} generic: {}", f.order_zero, f.param, f.order_generic, f.equimultiplicity);
        if let Some(e) = &f.evidence {
            let _ = writeln!(out, "  polar curve irreducibility evidence: {} [{}]", e.kind, e.stamp);
            for g in &e.generators {
                let fs: Vec<String> = g.factors.iter().map(|(p, k)| if *k == 1 { p.clone() } else { format!("({p})^{k}") }).collect();
                let _ = writeln!(out, "    {} : {}", g.generator, fs.join(" * "));
            }
        }
    }
    match &r.invariants {
        Some(InvariantsField::Single(i)) => {
            let _ = writeln!(out, "invariants:");
            write_invariants(&mut out, "  ", i);
        }
        Some(InvariantsField::Slices { zero, generic }) => {
            for (name, s) in [("ZERO", zero), ("GENERIC", generic)] {
                let _ = writeln!(out, "invariants {name}:");
                if !s.witnesses.is_empty() {
                    let _ = writeln!(out, "  confirmed at random values: {}", s.witnesses.join(", "));
                }
                match (&s.record, &s.refusal) {
                    (Some(rec), _) => write_invariants(&mut out, "  ", rec),
                    (None, Some(e)) => {
                        let _ = writeln!(out, "  refused: {}: {}", e.code, e.message);
                    }
                    (None, None) => {}
                }
            }
        }
        None => {}
    }
    if let Some(i) = &r.isolated {
        let _ = writeln!(out, "isolated singularity record:");
        let _ = writeln!(out, "  order: {}", i.order);
        let _ = writeln!(out, "  milnor: {}", i.milnor);
        if let Some(w) = &i.weights {
            let _ = writeln!(out, "  weights: {}", show_weights(w));
        }
    }
    for v in &r.verdicts {
        let _ = writeln!(out, "{} {}: {}", v.kind, v.theorem, v.conclusion);
        for h in &v.hypotheses {
            let _ = writeln!(out, "  {} {} {}: {}", h.id, h.name, h.status, h.witness);
        }
        if !v.user_asserted.is_empty() {
            let _ = writeln!(out, "  user asserted: {}", v.user_asserted.join(", "));
        }
        for n in &v.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }
    if let Some(ilm) = &r.ilm {
        for t in &ilm.tables {
            let _ = writeln!(out, "ILM {}: {} (mu_slice = {})", t.slice, if t.pass { "PASS" } else { "FAIL" }, t.mu_slice);
            let _ = writeln!(out, "  j  mu  predicted  residual  second_residual");
            for row in &t.rows {
                let mu = row.mu.map_or_else(|| row.error.clone().unwrap_or_default(), |m| m.to_string());
                let _ = writeln!(out, "  {}  {}  {}  {}  {}", row.j, mu, row.predicted, opt(&row.residual), opt(&row.second_residual));
            }
            let inferred = t.inferred.map_or_else(|| "none".to_string(), |[a, b, c]| format!("({a},{b},{c})"));
            let [a, b, c] = t.expected;
            let _ = writeln!(out, "  inferred (lambda0, lambda1, gamma1+lambda0): {inferred}, expected ({a},{b},{c})");
        }
    }
    if let Some(s) = &r.summary {
        let _ = writeln!(out, "summary: {s}");
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}
