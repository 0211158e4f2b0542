//! The bundled example corpus.

use std::path::Path;

use crate::commands::RunConfig;
use crate::error::CliError;
use crate::input::{bind, parse_source, Bound};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name)))),*]
    };
}

const BUNDLED: &[(&str, &str)] = bundled![
    "worked_germ.lec",
    "worked_family.lec",
    "suspension_family.lec",
    "upper_family.lec",
    "homogeneous_family.lec",
    "brieskorn_2_2.lec",
    "brieskorn_2_3.lec",
    "brieskorn_2_5.lec",
    "brieskorn_3_3.lec",
    "brieskorn_3_4.lec",
    "brieskorn_3_5.lec",
    "brieskorn_4_4.lec",
    "brieskorn_4_6.lec",
    "brieskorn_5_6.lec",
    "brieskorn_6_6.lec",
];

pub const WORKED_GERM: &str = "worked_germ.lec";
pub const WORKED_FAMILY: &str = "worked_family.lec";
pub const SUSPENSION_FAMILY: &str = "suspension_family.lec";

/// Brieskorn exponents `(a, b)` of the bundled `z2^a + z3^b` files.
pub const BRIESKORN: [(u32, u32); 10] = [(2, 2), (2, 3), (2, 5), (3, 3), (3, 4), (3, 5), (4, 4), (4, 6), (5, 6), (6, 6)];

pub fn brieskorn_file(a: u32, b: u32) -> String {
    format!("brieskorn_{a}_{b}.lec")
}

/// Corpus entries, every one parsed and bound up front.
#[derive(Clone, Debug)]
pub struct Corpus {
    entries: Vec<(String, Bound)>,
}

impl Corpus {
    pub fn bundled() -> Result<Corpus, CliError> {
        Corpus::from_texts(BUNDLED.iter().map(|(n, t)| (n.to_string(), t.to_string())))
    }

    /// Reads files with the bundled names from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Corpus, CliError> {
        let mut texts = Vec::new();
        for (name, _) in BUNDLED {
            let path = dir.join(name);
            let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            texts.push((name.to_string(), text));
        }
        Corpus::from_texts(texts)
    }

    fn from_texts(texts: impl IntoIterator<Item = (String, String)>) -> Result<Corpus, CliError> {
        let mut entries = Vec::new();
        for (name, text) in texts {
            let bound = parse_source(&text, &name)
                .and_then(|s| bind(s, None, None, None))
                .map_err(|e| match e {
                    CliError::Input { .. } => e,
                    other => CliError::Input { origin: name.clone(), message: other.to_string() },
                })?;
            entries.push((name, bound));
        }
        Ok(Corpus { entries })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> &Bound {
        &self.entries.iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("corpus entry {name}")).1
    }

    pub fn entries(&self) -> &[(String, Bound)] {
        &self.entries
    }

    /// Run configuration for a corpus entry.
    pub fn run_config(&self, name: &str, seed: u64, budget: usize) -> RunConfig {
        let b = self.get(name);
        let mut cfg = RunConfig::expr(&b.source.expression);
        cfg.vars = Some(b.ring.vars().to_vec());
        cfg.param = b.ring.params().first().cloned();
        cfg.seed = seed;
        cfg.budget = budget;
        cfg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_binds() {
        let c = Corpus::bundled().unwrap();
        assert_eq!(c.names().count(), BUNDLED.len());
        assert_eq!(c.get(WORKED_FAMILY).ring.params(), ["t".to_string()]);
        for (a, b) in BRIESKORN {
            assert_eq!(c.get(&brieskorn_file(a, b)).ring.nvars(), 2);
        }
        let cfg = c.run_config(SUSPENSION_FAMILY, 3, 50);
        assert_eq!((cfg.seed, cfg.budget, cfg.param.as_deref()), (3, 50, Some("t")));
    }

    #[test]
    fn corrupted_text_names_the_file() {
        let e = Corpus::from_texts([("x.lec".to_string(), "vars: z1\nz1 +\n".to_string())]).unwrap_err();
        assert!(e.to_string().starts_with("x.lec"), "{e}");
    }
}
