//! The kernel abstraction: a permutation-symmetric statistic of fixed arity,
//! optionally consuming auxiliary randomness omega, plus the built-in
//! statistic/kernel registry.

use crate::error::{Error, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Handle through which a kernel consumes its auxiliary randomness.
///
/// `Stream` draws from a derived ChaCha stream; `Forced` replays one outcome
/// of a finite omega support (used by the exact H-decomposition
/// marginalizer); `None` is for deterministic contexts.
pub enum Omega<'a> {
    None,
    Stream(&'a mut ChaCha8Rng),
    Forced(usize),
}

impl Omega<'_> {
    /// Draw one of `outcomes` equiprobable variants.
    pub fn draw(&mut self, outcomes: usize) -> usize {
        match self {
            Omega::None => panic!("kernel requested omega randomness but none was provided"),
            Omega::Stream(rng) => rng.random_range(0..outcomes),
            Omega::Forced(v) => {
                assert!(*v < outcomes, "forced omega outcome {v} out of range {outcomes}");
                *v
            }
        }
    }

    /// Draw a uniform in (0, 1); only valid for `Stream`.
    pub fn uniform(&mut self) -> f64 {
        match self {
            Omega::Stream(rng) => crate::numeric::open_unit(rng),
            _ => panic!("continuous omega draw requires a stream"),
        }
    }
}

/// A permutation-symmetric real statistic of `arity` real arguments.
///
/// Implementations must be deterministic given (inputs, omega outcome) and
/// invariant under permutation of `xs`; both properties are covered by
/// property tests over the built-in registry.
pub trait Kernel: Sync {
    fn arity(&self) -> usize;

    fn uses_omega(&self) -> bool {
        false
    }

    /// Size of the finite omega support, if the kernel's randomness is a
    /// single equiprobable choice among finitely many variants.
    fn omega_outcomes(&self) -> Option<usize> {
        None
    }

    fn eval(&self, xs: &[f64], omega: &mut Omega) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BuiltinKind {
    /// Arithmetic mean of the arguments.
    Mean,
    /// Unbiased sample variance: the pair kernel (x - y)^2 / 2 averaged over
    /// all pairs, so its bootstrap smoothing is the plug-in variance.
    Variance,
    Max,
    Median,
    /// Product of the arguments.
    Product,
    /// Mean after dropping floor(arity * tail) smallest and largest values.
    TrimmedMean { tail: f64 },
    /// Depth-one regression stump evaluated at a query point. A two-point
    /// omega jitters the split between two candidate order-statistic gaps;
    /// the prediction is the mean of the sorted half containing the query.
    Stump { query: f64 },
}

/// A registry kernel bound to a concrete arity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Builtin {
    kind: BuiltinKind,
    arity: usize,
}

impl Builtin {
    pub fn new(kind: BuiltinKind, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::domain("kernel arity must be positive"));
        }
        match kind {
            BuiltinKind::Variance if arity < 2 => {
                Err(Error::domain("variance kernel needs arity >= 2"))
            }
            BuiltinKind::Stump { .. } if arity < 2 => {
                Err(Error::domain("stump kernel needs arity >= 2"))
            }
            BuiltinKind::TrimmedMean { tail } if !(0.0..0.5).contains(&tail) => {
                Err(Error::domain(format!("trim fraction must be in [0, 0.5), got {tail}")))
            }
            BuiltinKind::TrimmedMean { tail } if arity <= 2 * (arity as f64 * tail) as usize => {
                Err(Error::domain(format!(
                    "trimmed mean of arity {arity} with tail {tail} leaves nothing"
                )))
            }
            _ => Ok(Self { kind, arity }),
        }
    }

    pub fn kind(&self) -> BuiltinKind {
        self.kind
    }
}

impl Kernel for Builtin {
    fn arity(&self) -> usize {
        self.arity
    }

    fn uses_omega(&self) -> bool {
        matches!(self.kind, BuiltinKind::Stump { .. })
    }

    fn omega_outcomes(&self) -> Option<usize> {
        match self.kind {
            BuiltinKind::Stump { .. } => Some(2),
            _ => None,
        }
    }

    fn eval(&self, xs: &[f64], omega: &mut Omega) -> f64 {
        debug_assert_eq!(xs.len(), self.arity);
        match self.kind {
            BuiltinKind::Mean => xs.iter().sum::<f64>() / xs.len() as f64,
            BuiltinKind::Variance => crate::numeric::sample_variance(xs),
            BuiltinKind::Max => xs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            BuiltinKind::Median => crate::numeric::median(xs),
            BuiltinKind::Product => xs.iter().product(),
            BuiltinKind::TrimmedMean { tail } => {
                let mut sorted = xs.to_vec();
                sorted.sort_by(f64::total_cmp);
                let t = (xs.len() as f64 * tail) as usize;
                let kept = &sorted[t..xs.len() - t];
                kept.iter().sum::<f64>() / kept.len() as f64
            }
            BuiltinKind::Stump { query } => {
                let mut sorted = xs.to_vec();
                sorted.sort_by(f64::total_cmp);
                let k = sorted.len();
                let lo = (k / 3).max(1);
                let hi = (2 * k / 3).min(k - 1);
                let pos = if omega.draw(2) == 0 { lo } else { hi };
                let threshold = 0.5 * (sorted[pos - 1] + sorted[pos]);
                let side = if query <= threshold {
                    &sorted[..pos]
                } else {
                    &sorted[pos..]
                };
                side.iter().sum::<f64>() / side.len() as f64
            }
        }
    }
}

pub const KERNEL_NAMES: &[&str] = &[
    "mean",
    "variance",
    "max",
    "median",
    "product",
    "trimmed-mean",
    "stump",
];

/// Parse a registry name like `mean`, `trimmed-mean(0.2)` or `stump(0.7)` and
/// bind it to an arity.
pub fn kernel_by_name(name: &str, arity: usize) -> Result<Builtin> {
    let (base, arg) = match name.find('(') {
        Some(open) if name.ends_with(')') => {
            let inner = &name[open + 1..name.len() - 1];
            let v: f64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad kernel parameter in {name:?}")))?;
            (&name[..open], Some(v))
        }
        _ => (name, None),
    };
    let kind = match (base, arg) {
        ("mean", None) => BuiltinKind::Mean,
        ("variance", None) => BuiltinKind::Variance,
        ("max", None) => BuiltinKind::Max,
        ("median", None) => BuiltinKind::Median,
        ("product", None) => BuiltinKind::Product,
        ("trimmed-mean", tail) => BuiltinKind::TrimmedMean { tail: tail.unwrap_or(0.1) },
        ("stump", q) => BuiltinKind::Stump { query: q.unwrap_or(0.5) },
        _ => {
            return Err(Error::UnknownName {
                kind: "statistic",
                name: name.to_string(),
                available: KERNEL_NAMES.join(", "),
            })
        }
    };
    Builtin::new(kind, arity)
}
