use std::fmt;

use super::evidence::{irreducibility_evidence, EvidenceKind, IrreducibilityEvidence};
use super::{family_weights, invariants_at, is_equimultiple, is_homogeneous, is_upper, Equimultiplicity, Family, Slice, SliceRecord, UpperReport};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::poly::{Field, Rational};
use crate::singularity::{add_power, milnor_number, WeightSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    Mt2,
    Mt3,
    Cmt2,
    Cmt3,
    Homogeneous,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Theorem::Mt2 => "mt2",
            Theorem::Mt3 => "mt3",
            Theorem::Cmt2 => "cmt2",
            Theorem::Cmt3 => "cmt3",
            Theorem::Homogeneous => "thm-eyral",
        }
    }

    /// "Theorem" or "Corollary".
    pub fn kind(self) -> &'static str {
        match self {
            Theorem::Cmt2 | Theorem::Cmt3 => "Corollary",
            _ => "Theorem",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    UserAsserted,
    NotChecked,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Holds => "HOLDS",
            Status::Fails => "FAILS",
            Status::UserAsserted => "USER_ASSERTED",
            Status::NotChecked => "NOT_CHECKED",
        }
    }

    fn from_bool(b: bool) -> Status {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Equimultiple,
    NotEquimultiple,
    NotTopologicallyVEquisingular,
    Inconclusive,
}

impl Conclusion {
    pub fn label(self) -> &'static str {
        match self {
            Conclusion::Equimultiple => "EQUIMULTIPLE",
            Conclusion::NotEquimultiple => "NOT_EQUIMULTIPLE",
            Conclusion::NotTopologicallyVEquisingular => "NOT_TOPOLOGICALLY_V_EQUISINGULAR",
            Conclusion::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    /// Short label such as `H3`.
    pub id: String,
    pub name: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub hypotheses: Vec<HypothesisCheck>,
    pub conclusion: Conclusion,
    pub notes: Vec<String>,
}

impl TheoremVerdict {
    fn new(theorem: Theorem) -> Self {
        TheoremVerdict { theorem, hypotheses: Vec::new(), conclusion: Conclusion::Inconclusive, notes: Vec::new() }
    }

    fn push(&mut self, name: &str, status: Status, witness: impl Into<String>) {
        let id = format!("H{}", self.hypotheses.len() + 1);
        self.hypotheses.push(HypothesisCheck { id, name: name.to_string(), status, witness: witness.into() });
    }

    pub fn hypothesis(&self, name: &str) -> Option<&HypothesisCheck> {
        self.hypotheses.iter().find(|h| h.name == name)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.hypothesis(name).map(|h| h.status)
    }

    /// Names of the hypotheses taken on the user's word.
    pub fn user_asserted(&self) -> Vec<&str> {
        self.hypotheses.iter().filter(|h| h.status == Status::UserAsserted).map(|h| h.name.as_str()).collect()
    }

    fn all_hold(&self, names: &[&str]) -> bool {
        names.iter().all(|n| self.status_of(n) == Some(Status::Holds))
    }

    fn all_accepted(&self, names: &[&str]) -> bool {
        names.iter().all(|n| matches!(self.status_of(n), Some(Status::Holds | Status::UserAsserted)))
    }
}

pub const LINE_SINGULARITIES: &str = "line_singularities";
pub const WEIGHTED_HOMOGENEOUS: &str = "weighted_homogeneous";
pub const WEIGHT_DIVIDES_DEGREE: &str = "smallest_weight_divides_degree";
pub const LE_NUMBERS_CONSTANT: &str = "le_numbers_constant";
pub const DEGREE_RATIO_BOUND: &str = "degree_ratio_bound";
pub const POLAR_DATA_CONSTANT: &str = "lambda1_and_gamma1_plus_lambda0_constant";
pub const GAMMA1_CONSTANT: &str = "gamma1_constant";
pub const POLAR_CURVE_IRREDUCIBLE: &str = "polar_curve_irreducible";
pub const TOPOLOGICALLY_EQUISINGULAR: &str = "topologically_v_equisingular";
pub const HOMOGENEOUS: &str = "f0_homogeneous";

/// Everything computed once for a family, from which every verdict is read.
#[derive(Clone, Debug)]
pub struct FamilyAnalysis {
    pub family: Family,
    pub weights: Option<WeightSystem>,
    pub upper: Option<UpperReport>,
    pub zero: std::result::Result<SliceRecord, Error>,
    pub generic: std::result::Result<SliceRecord, Error>,
    pub equimultiplicity: Equimultiplicity,
    /// Heuristics on the generic polar curve, when it is nonempty.
    pub evidence: Option<IrreducibilityEvidence>,
}

fn keep_refusal(r: Result<SliceRecord>) -> Result<std::result::Result<SliceRecord, Error>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) if e.is_refusal() || matches!(e, Error::UnluckySpecialization(_)) => Ok(Err(e)),
        Err(e) => Err(e),
    }
}

fn describe(e: &Error) -> String {
    format!("{}: {e}", e.code())
}

impl FamilyAnalysis {
    pub fn new(family: Family, cfg: &Config) -> Result<FamilyAnalysis> {
        let weights = family_weights(&family)?;
        let upper = weights.as_ref().map(|w| is_upper(&family, w)).transpose()?;
        let zero = keep_refusal(invariants_at(&family, Slice::Zero, cfg))?;
        let generic = keep_refusal(invariants_at(&family, Slice::Generic, cfg))?;
        let equimultiplicity = is_equimultiple(&family);
        let evidence = match &generic {
            Ok(g) if !g.record.polar_curve.locally_empty => Some(irreducibility_evidence(&g.record.polar_curve.ideal)),
            _ => None,
        };
        Ok(FamilyAnalysis { family, weights, upper, zero, generic, equimultiplicity, evidence })
    }

    pub fn record(&self, slice: Slice) -> std::result::Result<&SliceRecord, &Error> {
        match slice {
            Slice::Zero => self.zero.as_ref(),
            Slice::Generic => self.generic.as_ref(),
        }
    }

    fn both(&self) -> Option<(&SliceRecord, &SliceRecord)> {
        Some((self.zero.as_ref().ok()?, self.generic.as_ref().ok()?))
    }

    fn line_singularities(&self) -> (Status, String) {
        let mut witness = Vec::new();
        let mut status = Status::Holds;
        for slice in [Slice::Zero, Slice::Generic] {
            match self.record(slice) {
                Ok(_) => witness.push(format!("{slice}: yes")),
                Err(e) => {
                    witness.push(format!("{slice}: {}", describe(e)));
                    status = if e.is_refusal() { Status::Fails } else if status == Status::Holds { Status::NotChecked } else { status };
                }
            }
        }
        (status, witness.join("; "))
    }

    fn weighted(&self) -> (Status, String) {
        match &self.weights {
            Some(w) => (Status::Holds, format!("weights {w}")),
            None => (Status::Fails, "no positive weight system".into()),
        }
    }

    fn divides(&self) -> (Status, String) {
        match &self.weights {
            Some(w) => (
                Status::from_bool(w.smallest_divides_degree()),
                format!("w_i0 = {} (i0 = {}), d = {}", w.w_i0(), w.i0() + 1, w.degree()),
            ),
            None => (Status::NotChecked, "no weights".into()),
        }
    }

    fn ratio_bound(&self) -> (Status, String) {
        match (&self.weights, &self.zero) {
            (Some(w), Ok(z)) => {
                let bound = 2 + z.record.lambda0 as u64;
                let ratio = Rational::new(w.degree(), w.w_i0());
                (Status::from_bool(w.degree() >= bound * w.w_i0()), format!("d/w_i0 = {ratio}, 2 + lambda0(f0) = {bound}"))
            }
            (None, _) => (Status::NotChecked, "no weights".into()),
            (_, Err(e)) => (Status::NotChecked, describe(e)),
        }
    }

    fn constancy(&self, what: &str, pick: impl Fn(&SliceRecord) -> Vec<usize>) -> (Status, String) {
        match self.both() {
            Some((z, g)) => {
                let (a, b) = (pick(z), pick(g));
                (Status::from_bool(a == b), format!("{what}: {} at t=0 vs {} generic", show(&a), show(&b)))
            }
            None => (Status::NotChecked, "records unavailable".into()),
        }
    }

    fn irreducibility(&self, asserted: bool) -> (Status, String) {
        if let Ok(g) = &self.generic {
            if g.record.polar_curve.locally_empty {
                return (Status::Holds, "polar curve empty near the origin".into());
            }
        }
        let evidence = match &self.evidence {
            Some(e) => format!("evidence {} ({})", e.kind, e.stamp),
            None => "no evidence".into(),
        };
        (if asserted { Status::UserAsserted } else { Status::NotChecked }, evidence)
    }

    fn equisingular(asserted: bool) -> (Status, String) {
        if asserted {
            (Status::UserAsserted, "asserted by the user".into())
        } else {
            (Status::NotChecked, "not asserted".into())
        }
    }

    fn equimultiple_now(&self) -> bool {
        self.equimultiplicity.is_equimultiple()
    }

    /// Theorem on constant Lê numbers with weighted homogeneous `f0`.
    pub fn check_mt2(&self, cfg: &Config) -> Result<TheoremVerdict> {
        let mut v = TheoremVerdict::new(Theorem::Mt2);
        let (s, w) = self.line_singularities();
        v.push(LINE_SINGULARITIES, s, w);
        let (s, w) = self.weighted();
        v.push(WEIGHTED_HOMOGENEOUS, s, w);
        let (s, w) = self.divides();
        v.push(WEIGHT_DIVIDES_DEGREE, s, w);
        let (s, w) = self.constancy("(lambda0, lambda1)", |r| vec![r.record.lambda0, r.record.lambda1]);
        v.push(LE_NUMBERS_CONSTANT, s, w);
        let (s, w) = self.ratio_bound();
        v.push(DEGREE_RATIO_BOUND, s, w);
        let names = [LINE_SINGULARITIES, WEIGHTED_HOMOGENEOUS, WEIGHT_DIVIDES_DEGREE, LE_NUMBERS_CONSTANT, DEGREE_RATIO_BOUND];
        if v.all_hold(&names) {
            v.conclusion = Conclusion::Equimultiple;
            if !self.equimultiple_now() {
                return Err(Error::Internal("mt2 hypotheses hold but the orders differ".into()));
            }
            v.notes.push("lambda0 is constant, so d/w_i0 >= 2 + lambda0(f_t) for all small t".into());
        }
        if let Some(w) = &self.weights {
            if w.i0() == 0 {
                v.notes.push("smallest weight is w_1 (i0 = 1): the added power z_i0^(d/w_i0) is a power of z1".into());
            }
            if w.smallest_divides_degree() {
                let e = (w.degree() / w.w_i0()) as u32;
                let f0 = self.family.f0();
                let name = &f0.ring().vars()[w.i0()];
                let all: Vec<usize> = (0..f0.ring().nvars()).collect();
                let mu = match milnor_number(&add_power(f0, w.i0(), e, &Rational::one())?, &all, cfg) {
                    Ok(mu) => mu.to_string(),
                    Err(e) if e.is_budget() => return Err(e),
                    Err(e) => e.code().to_string(),
                };
                v.notes.push(format!("mu(f0 + {name}^{e}) = {mu}"));
            }
        }
        Ok(v)
    }

    /// Theorem on constant `λ¹` and `γ¹ + λ⁰` with irreducible polar curve.
    pub fn check_mt3(&self, irreducible_asserted: bool) -> Result<TheoremVerdict> {
        let mut v = TheoremVerdict::new(Theorem::Mt3);
        let (s, w) = self.line_singularities();
        v.push(LINE_SINGULARITIES, s, w);
        let (sw, ww) = self.weighted();
        let (sd, wd) = self.divides();
        let s = if sw == Status::Holds { sd } else { sw };
        v.push(WEIGHT_DIVIDES_DEGREE, s, format!("{ww}; {wd}"));
        let (s, w) = self.constancy("(lambda1, gamma1 + lambda0)", |r| {
            vec![r.record.lambda1, r.record.gamma1 + r.record.lambda0]
        });
        v.push(POLAR_DATA_CONSTANT, s, w);
        let (s, w) = self.irreducibility(irreducible_asserted);
        v.push(POLAR_CURVE_IRREDUCIBLE, s, w);
        let computed = [LINE_SINGULARITIES, WEIGHT_DIVIDES_DEGREE, POLAR_DATA_CONSTANT];
        if v.all_hold(&computed) && v.all_accepted(&[POLAR_CURVE_IRREDUCIBLE]) {
            if self.equimultiple_now() {
                v.conclusion = Conclusion::Equimultiple;
            } else if v.status_of(POLAR_CURVE_IRREDUCIBLE) == Some(Status::Holds) {
                return Err(Error::Internal("mt3 hypotheses hold but the orders differ".into()));
            } else {
                v.notes.push("the family is not equimultiple, so the asserted irreducibility cannot hold".into());
            }
        }
        Ok(v)
    }

    /// Both corollaries: the forward rule under asserted equisingularity and
    /// the contrapositive whenever the computed hypotheses hold.
    pub fn check_corollaries(&self, equisingular_asserted: bool, irreducible_asserted: bool) -> (TheoremVerdict, TheoremVerdict) {
        let (line, line_w) = self.line_singularities();
        let (weighted, weighted_w) = self.weighted();
        let (div, div_w) = self.divides();
        let (eq, eq_w) = Self::equisingular(equisingular_asserted);

        let mut c2 = TheoremVerdict::new(Theorem::Cmt2);
        c2.push(LINE_SINGULARITIES, line, line_w.clone());
        c2.push(WEIGHTED_HOMOGENEOUS, weighted, weighted_w.clone());
        c2.push(WEIGHT_DIVIDES_DEGREE, div, div_w.clone());
        let (s, w) = self.ratio_bound();
        c2.push(DEGREE_RATIO_BOUND, s, w);
        c2.push(TOPOLOGICALLY_EQUISINGULAR, eq, eq_w.clone());
        let computed2 = [LINE_SINGULARITIES, WEIGHTED_HOMOGENEOUS, WEIGHT_DIVIDES_DEGREE, DEGREE_RATIO_BOUND];
        self.apply_corollary(&mut c2, &computed2, equisingular_asserted);

        let mut c3 = TheoremVerdict::new(Theorem::Cmt3);
        c3.push(LINE_SINGULARITIES, line, line_w);
        c3.push(WEIGHTED_HOMOGENEOUS, weighted, weighted_w);
        c3.push(WEIGHT_DIVIDES_DEGREE, div, div_w);
        let (s, w) = self.constancy("gamma1", |r| vec![r.record.gamma1]);
        c3.push(GAMMA1_CONSTANT, s, w);
        let (s, w) = self.irreducibility(irreducible_asserted);
        c3.push(POLAR_CURVE_IRREDUCIBLE, s, w);
        c3.push(TOPOLOGICALLY_EQUISINGULAR, eq, eq_w);
        let computed3 = [LINE_SINGULARITIES, WEIGHTED_HOMOGENEOUS, WEIGHT_DIVIDES_DEGREE, GAMMA1_CONSTANT];
        if c3.all_accepted(&[POLAR_CURVE_IRREDUCIBLE]) {
            self.apply_corollary(&mut c3, &computed3, equisingular_asserted);
        }
        (c2, c3)
    }

    fn apply_corollary(&self, v: &mut TheoremVerdict, computed: &[&str], equisingular_asserted: bool) {
        if !v.all_hold(computed) {
            return;
        }
        if !self.equimultiple_now() {
            v.conclusion = Conclusion::NotTopologicallyVEquisingular;
            if equisingular_asserted {
                v.notes.push("the asserted topological equisingularity contradicts the computed orders".into());
            }
        } else if equisingular_asserted {
            v.conclusion = Conclusion::Equimultiple;
        }
    }

    /// The homogeneous case: equisingularity or constant Lê numbers imply
    /// equimultiplicity.
    pub fn check_homogeneous(&self, equisingular_asserted: bool) -> Result<TheoremVerdict> {
        let mut v = TheoremVerdict::new(Theorem::Homogeneous);
        let (s, w) = self.line_singularities();
        v.push(LINE_SINGULARITIES, s, w);
        let f0 = self.family.f0();
        v.push(HOMOGENEOUS, Status::from_bool(is_homogeneous(f0)), format!("degree {}", f0.low_degree().unwrap_or(0)));
        let (s, w) = self.constancy("(lambda0, lambda1)", |r| vec![r.record.lambda0, r.record.lambda1]);
        v.push(LE_NUMBERS_CONSTANT, s, w);
        let (s, w) = Self::equisingular(equisingular_asserted);
        v.push(TOPOLOGICALLY_EQUISINGULAR, s, w);
        if !v.all_hold(&[LINE_SINGULARITIES, HOMOGENEOUS]) {
            return Ok(v);
        }
        let le = v.status_of(LE_NUMBERS_CONSTANT) == Some(Status::Holds);
        if self.equimultiple_now() {
            if le || equisingular_asserted {
                v.conclusion = Conclusion::Equimultiple;
            }
        } else {
            if le {
                return Err(Error::Internal("thm-eyral hypotheses hold but the orders differ".into()));
            }
            v.conclusion = Conclusion::NotTopologicallyVEquisingular;
            if equisingular_asserted {
                v.notes.push("the asserted topological equisingularity contradicts the computed orders".into());
            }
        }
        Ok(v)
    }

    /// The five verdicts in the order mt2, mt3, cmt2, cmt3, the homogeneous rule.
    pub fn verdicts(&self, equisingular_asserted: bool, irreducible_asserted: bool, cfg: &Config) -> Result<Vec<TheoremVerdict>> {
        let (c2, c3) = self.check_corollaries(equisingular_asserted, irreducible_asserted);
        Ok(vec![self.check_mt2(cfg)?, self.check_mt3(irreducible_asserted)?, c2, c3, self.check_homogeneous(equisingular_asserted)?])
    }

    /// Report-level remarks that are not tied to one theorem.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = vec![format!(
            "'all small {0}' is read as generic {0} over Q({0}), confirmed at random values",
            self.family.param()
        )];
        if let Some(w) = &self.weights {
            if w.is_ambiguous() {
                out.push(format!("weights of f0 are not unique; using {w}"));
            }
            let names = self.family.f0().ring().vars();
            for (i, free) in w.free_flags().iter().enumerate() {
                if *free {
                    out.push(format!("weight of {} is chosen (variable absent from f0)", names[i]));
                }
            }
        }
        if let Some(e) = &self.evidence {
            if e.kind == EvidenceKind::Counter {
                out.push("irreducibility heuristics found a factorization of a polar curve generator".into());
            }
        }
        out
    }

    /// One-line conclusion drawn from the verdicts.
    pub fn summary(&self, verdicts: &[TheoremVerdict]) -> String {
        let find = |t: Theorem| verdicts.iter().find(|v| v.theorem == t);
        if self.equimultiple_now() {
            for t in [Theorem::Mt2, Theorem::Mt3, Theorem::Cmt2, Theorem::Cmt3, Theorem::Homogeneous] {
                if find(t).is_some_and(|v| v.conclusion == Conclusion::Equimultiple) {
                    return format!("equimultiple by {} {t}", t.kind());
                }
            }
            return format!("equimultiple (order {} at t=0 and generic t)", self.equimultiplicity.order_zero);
        }
        let mut s = "NOT equimultiple".to_string();
        for t in [Theorem::Cmt3, Theorem::Cmt2, Theorem::Homogeneous] {
            let Some(v) = find(t) else { continue };
            if v.conclusion != Conclusion::NotTopologicallyVEquisingular {
                continue;
            }
            s.push_str(&format!("; {} {t} ⟹ NOT topologically V-equisingular", t.kind()));
            if t == Theorem::Cmt3 {
                let h = v.hypothesis(POLAR_CURVE_IRREDUCIBLE).expect("cmt3 lists irreducibility");
                let how = if h.status == Status::UserAsserted { "asserted" } else { "vacuous" };
                let kind = self.evidence.as_ref().map(|e| e.kind.label()).unwrap_or("NONE");
                s.push_str(&format!(" (Γ¹ irreducibility: {how}, evidence {kind})"));
            }
            return s;
        }
        s
    }
}

fn show(v: &[usize]) -> String {
    if v.len() == 1 {
        v[0].to_string()
    } else {
        format!("({})", v.iter().map(usize::to_string).collect::<Vec<_>>().join(", "))
    }
}
