//! `key=value` parameter maps with typed accessors and unknown-key detection.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use pq_mathieu::Complex;

use crate::CliError;

#[derive(Debug, Clone, Default)]
pub struct ParamMap {
    entries: BTreeMap<String, String>,
    used: RefCell<BTreeSet<String>>,
}

impl ParamMap {
    pub fn parse(raw: &[String]) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for item in raw {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| CliError::Validation(format!("parameter `{item}` is not of the form key=value")))?;
            let key = key.trim();
            if key.is_empty() {
                return Err(CliError::Validation(format!("parameter `{item}` has an empty key")));
            }
            if entries.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(CliError::Validation(format!("parameter `{key}` given twice")));
            }
        }
        Ok(ParamMap {
            entries,
            used: RefCell::default(),
        })
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.entries
    }

    /// Copy with one entry replaced; usage tracking starts afresh.
    pub fn with(&self, key: &str, value: String) -> Self {
        let mut entries = self.entries.clone();
        entries.insert(key.to_string(), value);
        ParamMap {
            entries,
            used: RefCell::default(),
        }
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        let v = self.entries.get(key)?;
        self.used.borrow_mut().insert(key.to_string());
        Some(v)
    }

    pub fn has(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    pub fn f64(&self, key: &str) -> Result<f64, CliError> {
        match self.raw(key) {
            Some(v) => parse_f64(key, v),
            None => Err(CliError::Validation(format!("missing required parameter `{key}`"))),
        }
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64, CliError> {
        match self.raw(key) {
            Some(v) => parse_f64(key, v),
            None => Ok(default),
        }
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize, CliError> {
        match self.raw(key) {
            Some(v) => v
                .parse()
                .map_err(|_| CliError::Validation(format!("parameter `{key}`: `{v}` is not a non-negative integer"))),
            None => Ok(default),
        }
    }

    /// `key` holds the real part, `key_im` the imaginary part.
    pub fn complex(&self, key: &str) -> Result<Complex, CliError> {
        let re = self.f64(key)?;
        Ok(Complex::new(re, self.f64_or(&format!("{key}_im"), 0.0)?))
    }

    pub fn complex_or(&self, key: &str, default: f64) -> Result<Complex, CliError> {
        let re = self.f64_or(key, default)?;
        Ok(Complex::new(re, self.f64_or(&format!("{key}_im"), 0.0)?))
    }

    /// Comma-separated list of reals.
    pub fn list(&self, key: &str) -> Result<Vec<f64>, CliError> {
        match self.raw(key) {
            Some(v) => v.split(',').map(|x| parse_f64(key, x.trim())).collect(),
            None => Err(CliError::Validation(format!("missing required parameter `{key}`"))),
        }
    }

    pub fn list_or(&self, key: &str, default: Vec<f64>) -> Result<Vec<f64>, CliError> {
        if self.has(key) {
            self.list(key)
        } else {
            Ok(default)
        }
    }

    /// Error on any key no accessor asked for.
    pub fn reject_unused(&self) -> Result<(), CliError> {
        let used = self.used.borrow();
        let unknown: Vec<&str> = self
            .entries
            .keys()
            .filter(|k| !used.contains(*k))
            .map(String::as_str)
            .collect();
        if unknown.is_empty() {
            Ok(())
        } else {
            Err(CliError::Validation(format!("unknown parameter(s) for this target: {}", unknown.join(", "))))
        }
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64, CliError> {
    v.parse::<f64>()
        .map_err(|_| CliError::Validation(format!("parameter `{key}`: `{v}` is not a number")))
}

/// `start:end:count`, inclusive of both ends.
pub fn parse_range(key: &str, v: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = v.split(':').collect();
    let bad = || CliError::Validation(format!("parameter `{key}`: `{v}` is not a start:end:count range"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].parse().map_err(|_| bad())?;
    let end: f64 = parts[1].parse().map_err(|_| bad())?;
    let count: usize = parts[2].parse().map_err(|_| bad())?;
    if count == 0 || !start.is_finite() || !end.is_finite() {
        return Err(bad());
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (end - start) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| if i + 1 == count { end } else { start + step * i as f64 })
        .collect())
}
