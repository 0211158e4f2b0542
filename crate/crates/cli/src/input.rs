//! Input sources: inline expressions and `.lec` files.

use std::path::Path;
use std::sync::Arc;

use lecalc_core::poly::{parse_polynomial, Polynomial, Ring};

use crate::error::CliError;

/// Variables used when neither the input nor `--vars` names any.
pub const DEFAULT_VARS: [&str; 3] = ["z1", "z2", "z3"];

/// A parsed input before it is bound to a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Source {
    /// `-e` or the file path.
    pub origin: String,
    pub expression: String,
    pub vars: Option<Vec<String>>,
    pub param: Option<String>,
}

/// Reads the `.lec` format: `vars:` line, optional `param:` line, then one
/// expression (possibly over several lines). `#` starts a comment.
pub fn parse_source(text: &str, origin: &str) -> Result<Source, CliError> {
    let bad = |line: usize, msg: &str| CliError::Input { origin: origin.to_string(), message: format!("line {line}: {msg}") };
    let mut vars = None;
    let mut param = None;
    let mut expr: Vec<&str> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            if !expr.is_empty() {
                return Err(bad(k + 1, "header line after the expression"));
            }
            match key.trim() {
                "vars" if vars.is_none() => vars = Some(split_names(value)),
                "param" if param.is_none() => param = Some(value.trim().to_string()),
                other => return Err(bad(k + 1, &format!("unexpected header `{other}`"))),
            }
            continue;
        }
        if vars.is_none() {
            return Err(bad(k + 1, "the first line must be `vars: ...`"));
        }
        expr.push(line);
    }
    if vars.is_none() {
        return Err(bad(1, "missing `vars:` line"));
    }
    if expr.is_empty() {
        return Err(bad(text.lines().count().max(1), "missing expression"));
    }
    Ok(Source { origin: origin.to_string(), expression: expr.join(" "), vars, param: param.filter(|p| !p.is_empty()) })
}

pub fn read_source(path: &Path) -> Result<Source, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    parse_source(&text, &path.display().to_string())
}

pub fn split_names(s: &str) -> Vec<String> {
    s.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
}

/// Applies a 1-based permutation given as `2,1,3`: the i-th variable of the
/// result is variable `perm[i]` of `vars`.
pub fn permute(vars: &[String], perm: &str) -> Result<Vec<String>, CliError> {
    let idx: Vec<usize> = perm
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad permutation entry `{p}`"))))
        .collect::<Result<_, _>>()?;
    let mut seen = vec![false; vars.len()];
    if idx.len() != vars.len() {
        return Err(CliError::Usage(format!("permutation has {} entries for {} variables", idx.len(), vars.len())));
    }
    for &i in &idx {
        if i == 0 || i > vars.len() || seen[i - 1] {
            return Err(CliError::Usage(format!("`{perm}` is not a permutation of 1..{}", vars.len())));
        }
        seen[i - 1] = true;
    }
    Ok(idx.iter().map(|&i| vars[i - 1].clone()).collect())
}

/// The ring and polynomial of a source after command-line overrides.
#[derive(Clone, Debug)]
pub struct Bound {
    pub source: Source,
    pub ring: Arc<Ring>,
    pub poly: Polynomial,
}

pub fn bind(source: Source, vars: Option<Vec<String>>, param: Option<String>, perm: Option<&str>) -> Result<Bound, CliError> {
    let mut vars = vars
        .or_else(|| source.vars.clone())
        .unwrap_or_else(|| DEFAULT_VARS.iter().map(|v| v.to_string()).collect());
    if let Some(p) = perm {
        vars = permute(&vars, p)?;
    }
    let param = param.or_else(|| source.param.clone());
    let params: Vec<String> = param.into_iter().collect();
    let ring = Ring::from_names(vars, params)?;
    let poly = parse_polynomial(&source.expression, &ring)?;
    Ok(Bound { source, ring, poly })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_format() {
        let s = parse_source("# worked family\nvars: z1, z2, z3\nparam: t\nz1^2*z2^2 + z2^5\n  + z3^4 # tail\n", "x.lec").unwrap();
        assert_eq!(s.vars.as_deref(), Some(&["z1".to_string(), "z2".into(), "z3".into()][..]));
        assert_eq!(s.param.as_deref(), Some("t"));
        assert_eq!(s.expression, "z1^2*z2^2 + z2^5 + z3^4");
    }

    #[test]
    fn malformed_files() {
        assert!(parse_source("z1 + z2\n", "a").is_err());
        assert!(parse_source("vars: z1\n", "a").is_err());
        assert!(parse_source("vars: z1\nz1\nparam: t\n", "a").is_err());
        assert!(parse_source("vars: z1\nfoo: 1\nz1\n", "a").is_err());
    }

    #[test]
    fn permutation() {
        let v = split_names("z1,z2,z3");
        assert_eq!(permute(&v, "2,3,1").unwrap(), split_names("z2,z3,z1"));
        assert!(permute(&v, "1,1,2").is_err());
        assert!(permute(&v, "1,2").is_err());
    }
}
