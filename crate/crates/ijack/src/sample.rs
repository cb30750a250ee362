//! The observed dataset every resampling scheme draws from.

use crate::error::{Error, Result};
use std::io::BufRead;

/// Observed values x_1..x_n; n >= 2, all finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::domain(format!(
                "a sample needs at least 2 observations, got {}",
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::domain(format!("non-finite observation {bad}")));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Parse a one-observation-per-line text file. Blank lines and lines
    /// starting with '#' are skipped; parse failures carry the line number.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut values = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let v: f64 = t
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: not a number: {t:?}", lineno + 1)))?;
            values.push(v);
        }
        Sample::new(values)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::from_reader(std::io::BufReader::new(f))
    }
}
