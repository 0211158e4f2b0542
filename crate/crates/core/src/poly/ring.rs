use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered ring variables and a disjoint block of parameters.
///
/// Polynomials live in `K[vars]` with `K = Q(params)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    vars: Vec<String>,
    params: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], params: &[S]) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let params: Vec<String> = params.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_names(vars, params)
    }

    pub fn from_names(vars: Vec<String>, params: Vec<String>) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one ring variable is required".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in vars.iter().chain(params.iter()) {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid identifier")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("`{name}` is declared twice")));
            }
        }
        Ok(Arc::new(Ring { vars, params }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|v| v == name)
    }

    /// Same parameters, variables replaced.
    pub fn with_vars(&self, vars: Vec<String>) -> Result<Arc<Ring>> {
        Ring::from_names(vars, self.params.clone())
    }

    /// Same variables, parameters replaced.
    pub fn with_params(&self, params: Vec<String>) -> Result<Arc<Ring>> {
        Ring::from_names(self.vars.clone(), params)
    }

    /// A variable name not used by this ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let taken = |s: &str| self.vars.iter().chain(self.params.iter()).any(|v| v == s);
        if !taken(stem) {
            return stem.to_string();
        }
        (0..)
            .map(|i| format!("{stem}{i}"))
            .find(|s| !taken(s))
            .expect("unbounded search")
    }
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q")?;
        if !self.params.is_empty() {
            write!(f, "({})", self.params.join(","))?;
        }
        write!(f, "[{}]", self.vars.join(","))
    }
}
