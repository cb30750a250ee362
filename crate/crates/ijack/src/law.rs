//! Data-generating laws for simulation experiments and the finite-support
//! distribution behind the exact H-decomposition oracle.

use crate::error::{Error, Result};
use crate::numeric::open_unit;
use rand::Rng;
use statrs::distribution::{ContinuousCDF, Normal};
use std::fmt;

/// Finite-support distribution with distinct support points and positive
/// probabilities summing to one (normalized exactly on construction).
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    support: Vec<f64>,
    probs: Vec<f64>,
    cum: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(support: Vec<f64>, probs: Vec<f64>) -> Result<Self> {
        if support.len() != probs.len() || support.is_empty() {
            return Err(Error::domain("support and probability lists must match and be non-empty"));
        }
        if support.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("support values must be finite"));
        }
        for i in 0..support.len() {
            for j in i + 1..support.len() {
                if support[i] == support[j] {
                    return Err(Error::domain(format!("duplicate support value {}", support[i])));
                }
            }
        }
        if probs.iter().any(|&p| !(p > 0.0) || !p.is_finite()) {
            return Err(Error::domain("probabilities must be positive and finite"));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::domain(format!("probabilities sum to {total}, not 1")));
        }
        let probs: Vec<f64> = probs.iter().map(|p| p / total).collect();
        let mut cum = Vec::with_capacity(probs.len());
        let mut acc = 0.0;
        for &p in &probs {
            acc += p;
            cum.push(acc);
        }
        *cum.last_mut().unwrap() = 1.0;
        Ok(Self { support, probs, cum })
    }

    pub fn support(&self) -> &[f64] {
        &self.support
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.support.iter().zip(&self.probs).map(|(x, p)| x * p).sum()
    }

    /// Central moment of the given order.
    pub fn central_moment(&self, order: u32) -> f64 {
        let m = self.mean();
        self.support
            .iter()
            .zip(&self.probs)
            .map(|(x, p)| (x - m).powi(order as i32) * p)
            .sum()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u = open_unit(rng);
        let idx = self.cum.partition_point(|&c| c < u);
        self.support[idx.min(self.support.len() - 1)]
    }
}

/// A named data-generating law.
#[derive(Debug, Clone, PartialEq)]
pub enum DataLaw {
    Normal { mean: f64, variance: f64 },
    Uniform01,
    Discrete(DiscreteDistribution),
}

impl DataLaw {
    pub fn standard_normal() -> Self {
        DataLaw::Normal { mean: 0.0, variance: 1.0 }
    }

    pub fn mean(&self) -> f64 {
        match self {
            DataLaw::Normal { mean, .. } => *mean,
            DataLaw::Uniform01 => 0.5,
            DataLaw::Discrete(d) => d.mean(),
        }
    }

    pub fn variance(&self) -> f64 {
        match self {
            DataLaw::Normal { variance, .. } => *variance,
            DataLaw::Uniform01 => 1.0 / 12.0,
            DataLaw::Discrete(d) => d.central_moment(2),
        }
    }

    /// Fourth central moment (needed by the sample-variance closed forms).
    pub fn central_moment4(&self) -> f64 {
        match self {
            DataLaw::Normal { variance, .. } => 3.0 * variance * variance,
            DataLaw::Uniform01 => 1.0 / 80.0,
            DataLaw::Discrete(d) => d.central_moment(4),
        }
    }

    /// Sampling uses the inverse-CDF transform on open-interval uniforms, so
    /// draws are a documented, reproducible function of the stream.
    pub fn sample_into<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [f64]) {
        match self {
            DataLaw::Normal { mean, variance } => {
                let normal = Normal::new(*mean, variance.sqrt()).expect("valid normal");
                for v in out.iter_mut() {
                    *v = normal.inverse_cdf(open_unit(rng));
                }
            }
            DataLaw::Uniform01 => {
                for v in out.iter_mut() {
                    *v = open_unit(rng);
                }
            }
            DataLaw::Discrete(d) => {
                for v in out.iter_mut() {
                    *v = d.sample(rng);
                }
            }
        }
    }

    /// Parse `normal(mu,sigma2)`, `uniform(0,1)`, or
    /// `discrete(x1:p1, x2:p2, ...)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let unknown = || Error::UnknownName {
            kind: "law",
            name: text.to_string(),
            available: "normal(mu,sigma2), uniform(0,1), discrete(x1:p1,...)".into(),
        };
        let inner = |prefix: &str| -> Option<&str> {
            t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
        };
        if let Some(args) = inner("normal") {
            let parts: Vec<&str> = args.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return Err(Error::Parse(format!("normal law needs two arguments: {text:?}")));
            }
            let mean: f64 = parts[0].parse().map_err(|_| Error::Parse(format!("bad mean in {text:?}")))?;
            let variance: f64 =
                parts[1].parse().map_err(|_| Error::Parse(format!("bad variance in {text:?}")))?;
            if variance <= 0.0 {
                return Err(Error::domain(format!("variance must be positive, got {variance}")));
            }
            return Ok(DataLaw::Normal { mean, variance });
        }
        if let Some(args) = inner("uniform") {
            if args.split(',').map(str::trim).collect::<Vec<_>>() != ["0", "1"] {
                return Err(Error::Parse("only uniform(0,1) is supported".into()));
            }
            return Ok(DataLaw::Uniform01);
        }
        if let Some(args) = inner("discrete") {
            let mut support = Vec::new();
            let mut probs = Vec::new();
            for part in args.split(',') {
                let (x, p) = part
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("discrete entries are x:p, got {part:?}")))?;
                support.push(x.trim().parse().map_err(|_| Error::Parse(format!("bad value {x:?}")))?);
                probs.push(p.trim().parse().map_err(|_| Error::Parse(format!("bad prob {p:?}")))?);
            }
            return Ok(DataLaw::Discrete(DiscreteDistribution::new(support, probs)?));
        }
        Err(unknown())
    }
}

impl fmt::Display for DataLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataLaw::Normal { mean, variance } => write!(f, "normal({mean},{variance})"),
            DataLaw::Uniform01 => write!(f, "uniform(0,1)"),
            DataLaw::Discrete(d) => {
                write!(f, "discrete(")?;
                for (i, (x, p)) in d.support().iter().zip(d.probs()).enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}:{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}
