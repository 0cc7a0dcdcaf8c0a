//! Experiment configuration files: `key = value` lines, `#` comments, list
//! values comma separated.
//!
//! ```text
//! class = ti
//! n = 120, 250
//! b = 120, 150, 180
//! density = 0, 0.1, 0.5
//! count = 10
//! seed = 42
//! algs = bn, m
//! out = results.csv     # optional; --out overrides
//! ```

use bppc::generate::ClassKind;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: expected key = value, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key {key:?}")]
    DuplicateKey { line: usize, key: String },
    #[error("missing required key {0:?}")]
    Missing(&'static str),
    #[error("key {key:?}: invalid value {value:?}")]
    Value { key: &'static str, value: String },
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Algorithms a benchmark run executes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgSet {
    pub bn: bool,
    pub m: bool,
    pub exact: bool,
}

impl AlgSet {
    fn parse(values: &[String]) -> Result<Self, ConfigError> {
        let mut set = AlgSet {
            bn: false,
            m: false,
            exact: false,
        };
        for v in values {
            match v.as_str() {
                "bn" => set.bn = true,
                "m" => set.m = true,
                "exact" => set.exact = true,
                other => {
                    return Err(ConfigError::Value {
                        key: "algs",
                        value: other.to_string(),
                    })
                }
            }
        }
        Ok(set)
    }
}

/// One benchmark run: the full grid of cells plus execution options.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub class: ClassKind,
    pub ns: Vec<usize>,
    pub capacities: Vec<u32>,
    pub densities: Vec<f64>,
    pub count: usize,
    pub seed: u64,
    pub algs: AlgSet,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn cells(&self) -> usize {
        self.ns.len() * self.capacities.len() * self.densities.len()
    }

    fn validate(self) -> Result<Self, ConfigError> {
        if self.ns.is_empty() || self.capacities.is_empty() || self.densities.is_empty() {
            return Err(ConfigError::Invalid(
                "n, b, and density lists must be non-empty".into(),
            ));
        }
        if self.count == 0 {
            return Err(ConfigError::Invalid("count must be at least 1".into()));
        }
        if !(self.algs.bn || self.algs.m || self.algs.exact) {
            return Err(ConfigError::Invalid("algs must name at least one algorithm".into()));
        }
        if let Some(bad) = self.densities.iter().find(|d| !(0.0..=1.0).contains(*d)) {
            return Err(ConfigError::Invalid(format!("density {bad} outside [0, 1]")));
        }
        if self.algs.exact {
            if let Some(&n) = self.ns.iter().find(|&&n| n > 12) {
                return Err(ConfigError::Invalid(format!(
                    "algs includes exact but n = {n} exceeds the exhaustive-search cap of 12"
                )));
            }
        }
        Ok(self)
    }
}

pub fn parse_config(text: &str) -> Result<ExperimentConfig, ConfigError> {
    let mut seen: BTreeMap<String, (usize, Vec<String>)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::Syntax {
            line,
            text: raw.to_string(),
        })?;
        let key = key.trim().to_string();
        let values: Vec<String> = value
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        match key.as_str() {
            "class" | "n" | "b" | "density" | "count" | "seed" | "algs" | "out" => {}
            _ => return Err(ConfigError::UnknownKey { line, key }),
        }
        if seen.insert(key.clone(), (line, values)).is_some() {
            return Err(ConfigError::DuplicateKey { line, key });
        }
    }

    fn take(
        seen: &mut BTreeMap<String, (usize, Vec<String>)>,
        key: &'static str,
    ) -> Result<Vec<String>, ConfigError> {
        seen.remove(key)
            .map(|(_, v)| v)
            .ok_or(ConfigError::Missing(key))
    }
    fn scalar<T: std::str::FromStr>(
        values: Vec<String>,
        key: &'static str,
    ) -> Result<T, ConfigError> {
        if values.len() != 1 {
            return Err(ConfigError::Value {
                key,
                value: values.join(","),
            });
        }
        values[0].parse().map_err(|_| ConfigError::Value {
            key,
            value: values[0].clone(),
        })
    }
    fn list<T: std::str::FromStr>(
        values: Vec<String>,
        key: &'static str,
    ) -> Result<Vec<T>, ConfigError> {
        values
            .into_iter()
            .map(|v| {
                v.parse().map_err(|_| ConfigError::Value {
                    key,
                    value: v.clone(),
                })
            })
            .collect()
    }

    let mut seen = seen;
    let class = match scalar::<String>(take(&mut seen, "class")?, "class")?.as_str() {
        "ti" => ClassKind::Ti,
        "tm" => ClassKind::Tm,
        "ts" => ClassKind::Ts,
        other => {
            return Err(ConfigError::Value {
                key: "class",
                value: other.to_string(),
            })
        }
    };
    let ns = list::<usize>(take(&mut seen, "n")?, "n")?;
    let capacities = list::<u32>(take(&mut seen, "b")?, "b")?;
    let densities = list::<f64>(take(&mut seen, "density")?, "density")?;
    let count = scalar::<usize>(take(&mut seen, "count")?, "count")?;
    let seed = scalar::<u64>(take(&mut seen, "seed")?, "seed")?;
    let algs = AlgSet::parse(&take(&mut seen, "algs")?)?;
    let out = seen
        .remove("out")
        .map(|(_, v)| scalar::<String>(v, "out"))
        .transpose()?
        .map(PathBuf::from);

    ExperimentConfig {
        class,
        ns,
        capacities,
        densities,
        count,
        seed,
        algs,
        out,
    }
    .validate()
}

pub fn read_config(path: &Path) -> Result<ExperimentConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config(&text)
}
