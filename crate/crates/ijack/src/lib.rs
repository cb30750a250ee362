//! Resampling-variance toolkit built around the infinitesimal jackknife.
//!
//! The crate computes the IJ family of variance estimators for
//! bootstrap-smoothed (bagged) statistics and for complete or incomplete
//! U-statistics, together with the exact small-n enumeration and
//! H-decomposition oracles needed to verify the estimators' equivalence,
//! bias, and consistency properties at desk scale:
//!
//! - [`bootstrap::exact`]: all-resamples ground truth (s_0, e_j, Cov_j) and
//!   the equivalent IJ/JK/OLS values.
//! - [`bootstrap::mc`]: the practical B-resample estimators and their Monte
//!   Carlo bias corrections.
//! - [`analytic`]: closed forms for the mean / variance / maximum examples
//!   and the n(1-rho) linearity diagnostic.
//! - [`ustat`]: complete U-statistic estimators (true-IJ with alpha/beta,
//!   pseudo-IJ, higher-order variants) and their coefficient tables.
//! - [`ustat::incomplete`]: Bernoulli-subsampled (generalized, possibly
//!   randomized) U-statistics, zeta estimation, and confidence intervals.
//! - [`hdecomp`]: exact H-decomposition over finite-support laws, the
//!   independent oracle behind every expectation formula.
//! - [`harness`]: deterministic parallel experiment runner emitting the
//!   figure-style summary tables.

pub mod analytic;
pub mod bootstrap;
pub mod combin;
pub mod error;
pub mod harness;
pub mod hdecomp;
pub mod kernel;
pub mod law;
pub mod numeric;
pub mod rng;
pub mod sample;
pub mod ustat;

pub use combin::{SubsetMask, WeightVector};
pub use error::{Error, Result};
pub use kernel::{kernel_by_name, Builtin, BuiltinKind, Kernel, Omega};
pub use law::{DataLaw, DiscreteDistribution};
pub use rng::RandomnessPolicy;
pub use sample::Sample;
