//! The `invariants`, `family` and `ilm` commands.

use std::path::PathBuf;
use std::thread;

use lecalc_core::family::{invariants_at, verify_ilm, Family, FamilyAnalysis, Slice, SliceRecord};
use lecalc_core::poly::Polynomial;
use lecalc_core::singularity::{self, check_polar_ratio_lemma, detect_weights, isolated_record, lambda_k_vanishing, WeightSystem};
use lecalc_core::{Config, Error};

use crate::error::{CliError, EXIT_MATH, EXIT_OK};
use crate::input::{bind, parse_source, read_source, Bound, Source};
use crate::report::{self, IlmOut, InputOut, InvariantsField, InvariantsOut, LambdaK, Report, SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSpec {
    Expr(String),
    File(PathBuf),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input: InputSpec,
    pub vars: Option<Vec<String>>,
    pub param: Option<String>,
    pub seed: u64,
    pub budget: usize,
    pub format: Format,
    pub assert_equisingular: bool,
    pub assert_gamma1_irreducible: bool,
    pub permute: Option<String>,
    pub j_values: Option<Vec<u32>>,
}

impl RunConfig {
    pub fn expr(e: &str) -> Self {
        RunConfig {
            input: InputSpec::Expr(e.to_string()),
            vars: None,
            param: None,
            seed: 0,
            budget: lecalc_core::config::DEFAULT_BUDGET,
            format: Format::Text,
            assert_equisingular: false,
            assert_gamma1_irreducible: false,
            permute: None,
            j_values: None,
        }
    }

    pub fn core(&self) -> Config {
        let mut c = Config::with_seed(self.seed);
        c.budget = self.budget;
        c
    }
}

/// A finished report with the exit code it implies.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => report::render_text(&self.report),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

fn load(cfg: &RunConfig) -> Result<Bound, CliError> {
    let source = match &cfg.input {
        InputSpec::Expr(e) => Source { origin: "<expr>".into(), expression: e.clone(), vars: None, param: None },
        InputSpec::File(p) => read_source(p)?,
    };
    bind(source, cfg.vars.clone(), cfg.param.clone(), cfg.permute.as_deref())
}

/// Binds in-memory file contents, as for `-f`.
pub fn load_text(text: &str, origin: &str, cfg: &RunConfig) -> Result<Bound, CliError> {
    bind(parse_source(text, origin)?, cfg.vars.clone(), cfg.param.clone(), cfg.permute.as_deref())
}

fn skeleton(command: &str, b: &Bound, cfg: &RunConfig) -> Report {
    Report {
        schema: SCHEMA,
        command: command.to_string(),
        input: InputOut {
            origin: b.source.origin.clone(),
            expression: b.source.expression.clone(),
            vars: b.ring.vars().to_vec(),
            param: b.ring.params().first().cloned(),
        },
        seed: cfg.seed,
        budget: cfg.budget,
        weights: None,
        invariants: None,
        family: None,
        verdicts: Vec::new(),
        ilm: None,
        summary: None,
        warnings: Vec::new(),
        isolated: None,
        error: None,
    }
}

/// Errors that become part of the report rather than aborting.
fn reportable(e: &Error) -> bool {
    !e.is_usage() && !e.is_budget() && !matches!(e, Error::Internal(_))
}

fn add_lambda_k(out: &mut InvariantsOut, f: &Polynomial, cfg: &Config) -> Result<(), Error> {
    for k in 2..f.ring().nvars() {
        out.lambda_k_vanishing.push(LambdaK { k, vanishes: lambda_k_vanishing(f, k, cfg)? });
    }
    Ok(())
}

fn add_lemma(out: &mut InvariantsOut, f: &Polynomial, w: &WeightSystem, ratio: Option<&lecalc_core::poly::Rational>) {
    if let Ok(l) = check_polar_ratio_lemma(f, w, ratio) {
        out.polar_ratio_lemma = Some(report::lemma(&l));
    }
}

pub fn invariants(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let b = load(cfg)?;
    invariants_of(&b, cfg)
}

pub fn invariants_of(b: &Bound, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let core = cfg.core();
    let f = &b.poly;
    let vars = b.ring.vars().to_vec();
    let mut r = skeleton("invariants", b, cfg);
    let weights = if b.ring.nparams() > 0 {
        None
    } else {
        match detect_weights(f) {
            Ok(w) => w,
            Err(e) if reportable(&e) => {
                r.warnings.push(format!("weights not detected: {e}"));
                None
            }
            Err(e) => return Err(e.into()),
        }
    };
    r.weights = weights.as_ref().map(|w| report::weights(w, &vars));
    if let Some(w) = &weights {
        if w.is_ambiguous() {
            r.warnings.push(format!("weights are not unique; using {w}"));
        }
    }
    if b.ring.nparams() > 0 {
        r.warnings.push(format!("computed over Q({}) for generic parameter values", b.ring.params().join(",")));
    }
    match singularity::invariants(f, &core) {
        Ok(rec) => {
            let mut out = report::invariants(&rec);
            add_lambda_k(&mut out, f, &core)?;
            if let Some(w) = &weights {
                add_lemma(&mut out, f, w, rec.polar_ratio.as_ref());
            }
            r.invariants = Some(InvariantsField::Single(out));
            Ok(Outcome { report: r, exit: EXIT_OK })
        }
        Err(e) if reportable(&e) => {
            if matches!(e, Error::NotLineSingularity(_)) {
                if let Some(iso) = isolated_record(f, &core)? {
                    r.isolated = Some(report::isolated(&iso, &vars));
                }
            }
            r.error = Some(report::error(&e));
            Ok(Outcome { report: r, exit: EXIT_MATH })
        }
        Err(e) => Err(e.into()),
    }
}

fn require_param(b: &Bound, command: &str) -> Result<String, CliError> {
    b.ring
        .params()
        .first()
        .cloned()
        .ok_or_else(|| CliError::Usage(format!("{command} needs a parameter (--param or a `param:` line)")))
}

fn decompose(b: &Bound, command: &str, cfg: &RunConfig) -> Result<Result<Family, Report>, CliError> {
    let param = require_param(b, command)?;
    match Family::new(&b.poly, &param, &cfg.core()) {
        Ok(f) => Ok(Ok(f)),
        Err(e) if reportable(&e) => {
            let mut r = skeleton(command, b, cfg);
            r.error = Some(report::error(&e));
            Ok(Err(r))
        }
        Err(e) => Err(e.into()),
    }
}

/// Slice records, computed concurrently.
fn slice_pair(fam: &Family, core: &Config) -> (Result<SliceRecord, Error>, Result<SliceRecord, Error>) {
    thread::scope(|s| {
        let g = s.spawn(|| invariants_at(fam, Slice::Generic, core));
        let z = invariants_at(fam, Slice::Zero, core);
        (z, g.join().expect("generic slice thread"))
    })
}

fn slice_out(
    r: &Result<SliceRecord, Error>,
    f: &Polynomial,
    weights: Option<&WeightSystem>,
    core: &Config,
) -> Result<report::SliceOut, CliError> {
    if let Err(e) = r {
        if !reportable(e) && !matches!(e, Error::UnluckySpecialization(_)) {
            return Err(e.clone().into());
        }
    }
    let mut out = report::slice(r);
    if let (Some(rec), Ok(s)) = (out.record.as_mut(), r) {
        add_lambda_k(rec, f, core)?;
        if let Some(w) = weights {
            add_lemma(rec, f, w, s.record.polar_ratio.as_ref());
        }
    }
    Ok(out)
}

pub fn family(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let b = load(cfg)?;
    family_of(&b, cfg)
}

pub fn family_of(b: &Bound, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let core = cfg.core();
    let fam = match decompose(b, "family", cfg)? {
        Ok(f) => f,
        Err(r) => return Ok(Outcome { report: r, exit: EXIT_MATH }),
    };
    let a = FamilyAnalysis::new(fam, &core)?;
    let vars = b.ring.vars().to_vec();
    let mut r = skeleton("family", b, cfg);
    r.weights = a.weights.as_ref().map(|w| report::weights(w, &vars));
    r.family = Some(report::family(&a.family, a.upper.as_ref(), &a.equimultiplicity, a.evidence.as_ref()));
    let w = a.weights.as_ref();
    r.invariants = Some(InvariantsField::Slices {
        zero: slice_out(&a.zero, a.family.f0(), w, &core)?,
        generic: slice_out(&a.generic, a.family.source(), None, &core)?,
    });
    let verdicts = a.verdicts(cfg.assert_equisingular, cfg.assert_gamma1_irreducible, &core)?;
    r.verdicts = verdicts.iter().map(report::verdict).collect();
    r.summary = Some(a.summary(&verdicts));
    r.warnings = a.warnings();
    Ok(Outcome { report: r, exit: EXIT_OK })
}

pub fn ilm(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let b = load(cfg)?;
    ilm_of(&b, cfg)
}

pub fn ilm_of(b: &Bound, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let core = cfg.core();
    let fam = match decompose(b, "ilm", cfg)? {
        Ok(f) => f,
        Err(r) => return Ok(Outcome { report: r, exit: EXIT_MATH }),
    };
    let mut r = skeleton("ilm", b, cfg);
    let (zero, generic) = slice_pair(&fam, &core);
    let mut records = Vec::new();
    for rec in [zero, generic] {
        match rec {
            Ok(s) => records.push(s),
            Err(e) if reportable(&e) => {
                r.error = Some(report::error(&e));
                return Ok(Outcome { report: r, exit: EXIT_MATH });
            }
            Err(e) => return Err(e.into()),
        }
    }
    let js = cfg.j_values.as_deref();
    let tables = thread::scope(|s| {
        let handles: Vec<_> = records.iter().map(|rec| s.spawn(|| verify_ilm(&fam, rec, js, &core))).collect();
        handles.into_iter().map(|h| h.join().expect("ilm thread")).collect::<Result<Vec<_>, _>>()
    })?;
    let pass = tables.iter().all(|t| t.pass);
    r.ilm = Some(IlmOut { tables: tables.iter().map(report::ilm_table).collect() });
    r.summary = Some(format!("ILM {}", if pass { "PASS" } else { "FAIL" }));
    Ok(Outcome { report: r, exit: if pass { EXIT_OK } else { EXIT_MATH } })
}
