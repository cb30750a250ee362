//! Small numeric helpers: compensated summation, summary statistics,
//! the standard normal quantile, and open-interval uniforms.

use rand::Rng;
use statrs::distribution::{ContinuousCDF, Normal};

/// Neumaier (improved Kahan) compensated accumulator.
///
/// Reductions over enumerations use this so that results are independent of
/// how the enumeration is chunked, down to the last bit.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    let mut acc = Neumaier::new();
    for &x in xs {
        acc.add(x);
    }
    acc.value() / xs.len() as f64
}

/// Unbiased (1/(m-1)) sample variance.
pub fn sample_variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let mut acc = Neumaier::new();
    for &x in xs {
        acc.add((x - m) * (x - m));
    }
    acc.value() / (xs.len() as f64 - 1.0)
}

/// Type-7 (linear interpolation) quantile of a sorted slice.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = p * (n as f64 - 1.0);
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    quantile_sorted(&sorted, 0.5)
}

/// Replication summary used by the experiment runner.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    pub sd: f64,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

pub fn summarize(values: &[f64]) -> Summary {
    assert!(!values.is_empty(), "cannot summarize an empty batch");
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let sd = if values.len() > 1 {
        sample_variance(values).sqrt()
    } else {
        0.0
    };
    Summary {
        count: values.len(),
        mean: mean(values),
        sd,
        min: sorted[0],
        q1: quantile_sorted(&sorted, 0.25),
        median: quantile_sorted(&sorted, 0.5),
        q3: quantile_sorted(&sorted, 0.75),
        max: sorted[sorted.len() - 1],
    }
}

/// Standard normal quantile Phi^{-1}(p), 0 < p < 1.
pub fn normal_quantile(p: f64) -> f64 {
    let std_normal = Normal::new(0.0, 1.0).expect("unit normal");
    std_normal.inverse_cdf(p)
}

/// Uniform draw from the open interval (0, 1).
///
/// 53 random bits shifted into (0,1) so that inverse-CDF transforms never see
/// an endpoint. This is the documented sampling transform for continuous laws.
#[inline]
pub fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    ((rng.random::<u64>() >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neumaier_recovers_cancellation() {
        let mut acc = Neumaier::new();
        acc.add(1e16);
        acc.add(1.0);
        acc.add(-1e16);
        assert_eq!(acc.value(), 1.0);
    }

    #[test]
    fn quartiles_match_linear_interpolation() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let mut sorted = xs.to_vec();
        sorted.sort_by(f64::total_cmp);
        assert_eq!(quantile_sorted(&sorted, 0.5), 2.5);
        assert_eq!(quantile_sorted(&sorted, 0.25), 1.75);
        assert_eq!(quantile_sorted(&sorted, 0.75), 3.25);
    }

    #[test]
    fn normal_quantile_at_975() {
        let z = normal_quantile(0.975);
        assert!((z - 1.959964).abs() < 1e-5, "z = {z}");
    }

    #[test]
    fn open_unit_stays_in_open_interval() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            let u = open_unit(&mut rng);
            assert!(u > 0.0 && u < 1.0);
        }
    }
}
