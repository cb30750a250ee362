//! Exact combinatorics: binomial coefficients, enumeration of bootstrap
//! weight vectors (compositions of n into n non-negative parts with their
//! multinomial probabilities), and lexicographic k-subset enumeration.

use crate::error::{Error, Result};
use crate::numeric::Neumaier;

/// Largest n for which all bootstrap weight vectors are enumerated exactly.
/// C(2n-1, n) at n = 8 is 6435 vectors.
pub const MAX_EXACT_BOOTSTRAP_N: usize = 8;

/// Largest C(n, k) for which k-subsets are enumerated exhaustively.
pub const MAX_SUBSET_ENUM: u128 = 2_000_000;

/// Exact binomial coefficient in wide-integer arithmetic.
///
/// Errors on k > n and on u128 overflow (well past n = 64, the documented
/// exact range; use [`binom_f64`] or [`ln_binom`] beyond).
pub fn binom(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Err(Error::domain(format!("binom({n}, {k}): k exceeds n")));
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - k + i + 1) as u128)
            .ok_or_else(|| Error::capacity(format!("binom({n}, {k}) overflows u128")))?;
        acc /= (i + 1) as u128;
    }
    Ok(acc)
}

/// ln C(n, k) via ln-gamma; relative accuracy ~1e-14.
pub fn ln_binom(n: u64, k: u64) -> Result<f64> {
    if k > n {
        return Err(Error::domain(format!("ln_binom({n}, {k}): k exceeds n")));
    }
    let lg = |x: u64| statrs::function::gamma::ln_gamma(x as f64 + 1.0);
    Ok(lg(n) - lg(k) - lg(n - k))
}

/// C(n, k) as a float: exact wide-integer value when it fits, log-gamma beyond.
pub fn binom_f64(n: u64, k: u64) -> Result<f64> {
    match binom(n, k) {
        Ok(v) => Ok(v as f64),
        Err(Error::Capacity(_)) => Ok(ln_binom(n, k)?.exp()),
        Err(e) => Err(e),
    }
}

/// Bootstrap multiplicity counts w* for one resample; counts sum to the total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    counts: Vec<u32>,
}

impl WeightVector {
    pub fn new(counts: Vec<u32>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// Sorted k-subset of {0, .., n-1} (strictly increasing indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    indices: Vec<usize>,
}

impl SubsetMask {
    /// Indices must be strictly increasing; checked in debug builds.
    pub fn new(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

fn check_bootstrap_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("bootstrap enumeration needs n >= 2, got {n}")));
    }
    if n > MAX_EXACT_BOOTSTRAP_N {
        return Err(Error::capacity(format!(
            "bootstrap enumeration capped at n <= {MAX_EXACT_BOOTSTRAP_N}, got {n}"
        )));
    }
    Ok(())
}

/// Visit every composition of n into n non-negative parts with its
/// multinomial probability n!/(prod w_i!) * n^-n, in lexicographic order.
///
/// The multinomial factor and n^n are exact integers well inside f64 range
/// for n <= 8, so each probability is exact.
pub(crate) fn for_each_weight(n: usize, mut visit: impl FnMut(&[u32], f64)) -> Result<()> {
    check_bootstrap_n(n)?;
    let mut fact = vec![1.0f64; n + 1];
    for i in 1..=n {
        fact[i] = fact[i - 1] * i as f64;
    }
    let n_pow = (n as f64).powi(n as i32);
    let mut w = vec![0u32; n];
    w[n - 1] = n as u32;
    loop {
        let mut denom = 1.0;
        for &c in &w {
            denom *= fact[c as usize];
        }
        visit(&w, fact[n] / denom / n_pow);
        // Lexicographic successor: increment the rightmost position that has
        // mass strictly after it, then flush the remaining mass to the tail.
        let mut suffix: u32 = 0;
        let mut j = n; // position to increment, if any
        for i in (0..n - 1).rev() {
            suffix += w[i + 1];
            if suffix > 0 {
                j = i;
                break;
            }
        }
        if j == n {
            return Ok(()); // all mass at w[0]: last composition
        }
        w[j] += 1;
        for c in w[j + 1..].iter_mut() {
            *c = 0;
        }
        w[n - 1] = suffix - 1;
    }
}

/// Lexicographic stream over all bootstrap weight vectors with probabilities.
pub fn bootstrap_weights(n: usize) -> Result<Vec<(WeightVector, f64)>> {
    let mut out = Vec::new();
    for_each_weight(n, |w, p| out.push((WeightVector::new(w.to_vec()), p)))?;
    Ok(out)
}

/// Number of weight vectors, C(2n-1, n).
pub fn bootstrap_weight_count(n: usize) -> Result<u128> {
    check_bootstrap_n(n)?;
    binom(2 * n as u64 - 1, n as u64)
}

fn check_subset_args(n: usize, k: usize) -> Result<u128> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("subset enumeration needs 1 <= k <= n, got k={k}, n={n}")));
    }
    let count = binom(n as u64, k as u64)?;
    if count > MAX_SUBSET_ENUM {
        return Err(Error::capacity(format!(
            "C({n}, {k}) = {count} exceeds the enumeration cap {MAX_SUBSET_ENUM}"
        )));
    }
    Ok(count)
}

/// Visit every k-subset of {0..n-1} in lexicographic order. The slice passed
/// to the visitor is reused between calls.
pub(crate) fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) -> Result<()> {
    check_subset_args(n, k)?;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        // advance to the lexicographic successor
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return Ok(());
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All k-subsets in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Result<Vec<SubsetMask>> {
    let mut out = Vec::new();
    for_each_subset(n, k, |s| out.push(SubsetMask::new(s.to_vec())))?;
    Ok(out)
}

/// The k-subset at a given lexicographic rank (0-based).
pub(crate) fn subset_at_rank(n: usize, k: usize, mut rank: u128) -> Result<Vec<usize>> {
    let total = check_subset_args(n, k)?;
    if rank >= total {
        return Err(Error::domain(format!("subset rank {rank} out of range {total}")));
    }
    let mut out = Vec::with_capacity(k);
    let mut lo = 0usize;
    for slot in 0..k {
        let remaining = k - slot - 1;
        for cand in lo..n {
            let with_cand = binom((n - cand - 1) as u64, remaining as u64)?;
            if rank < with_cand {
                out.push(cand);
                lo = cand + 1;
                break;
            }
            rank -= with_cand;
        }
    }
    Ok(out)
}

/// Advance a sorted index set to its lexicographic successor in place.
/// Returns false when the input was the last subset.
pub(crate) fn next_subset(n: usize, idx: &mut [usize]) -> bool {
    let k = idx.len();
    let mut i = k;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if idx[i] != i + n - k {
            break;
        }
        if i == 0 {
            return false;
        }
    }
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Colexicographic rank of a sorted d-subset: sum_t C(idx_t, t+1).
pub(crate) fn colex_rank(indices: &[usize]) -> usize {
    let mut rank: u128 = 0;
    for (t, &i) in indices.iter().enumerate() {
        if i > t {
            rank += binom(i as u64, t as u64 + 1).expect("small binomial");
        }
    }
    rank as usize
}

/// Sum of enumerated probabilities, for the probabilities-sum-to-one check.
pub fn bootstrap_probability_total(n: usize) -> Result<f64> {
    let mut acc = Neumaier::new();
    for_each_weight(n, |_, p| acc.add(p))?;
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(20, 10).unwrap(), 184_756);
        assert_eq!(binom(0, 0).unwrap(), 1);
        assert_eq!(binom(12, 4).unwrap(), 495);
        assert!(matches!(binom(3, 5), Err(Error::Domain(_))));
    }

    #[test]
    fn binom_ratio_for_pair_counts() {
        let num = binom(10, 2).unwrap() as f64;
        let den = binom(20, 2).unwrap() as f64;
        assert_eq!(num / den, 45.0 / 190.0);
    }

    #[test]
    fn ln_binom_matches_exact_up_to_64() {
        for n in [10u64, 30, 50, 64] {
            for k in [0u64, 1, n / 3, n / 2, n] {
                let exact = binom(n, k).unwrap() as f64;
                let rel = (ln_binom(n, k).unwrap().exp() - exact).abs() / exact;
                assert!(rel < 1e-12, "n={n} k={k} rel={rel}");
            }
        }
    }

    #[test]
    fn binom_f64_switches_to_log_space() {
        // C(500, 10) does not fit u64 arithmetic pipelines downstream but
        // binom_f64 must still produce ~2.4458e20.
        let v = binom_f64(500, 10).unwrap();
        let exact = binom(500, 10).unwrap() as f64;
        assert!((v - exact).abs() / exact < 1e-12);
    }

    #[test]
    fn weights_n2_exact() {
        let all = bootstrap_weights(2).unwrap();
        let expect = [
            (vec![0u32, 2], 0.25),
            (vec![1, 1], 0.5),
            (vec![2, 0], 0.25),
        ];
        assert_eq!(all.len(), 3);
        for (w, p) in &all {
            let hit = expect
                .iter()
                .find(|(c, _)| c == w.counts())
                .expect("unexpected weight vector");
            assert_eq!(*p, hit.1);
        }
    }

    #[test]
    fn weights_n3_count_and_total() {
        let all = bootstrap_weights(3).unwrap();
        assert_eq!(all.len(), 10);
        let total: f64 = bootstrap_probability_total(3).unwrap();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn weights_n4_count_and_balanced_probability() {
        let all = bootstrap_weights(4).unwrap();
        assert_eq!(all.len(), 35);
        let balanced = all
            .iter()
            .find(|(w, _)| w.counts() == [1, 1, 1, 1])
            .unwrap();
        assert_eq!(balanced.1, 3.0 / 32.0); // 4!/4^4
    }

    #[test]
    fn weights_cap_is_named_in_error() {
        let err = bootstrap_weights(9).unwrap_err();
        match err {
            Error::Capacity(msg) => assert!(msg.contains("n <= 8"), "{msg}"),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn weights_are_unique_and_sum_to_n() {
        for n in 2..=6 {
            let all = bootstrap_weights(n).unwrap();
            assert_eq!(all.len() as u128, bootstrap_weight_count(n).unwrap());
            let mut seen = HashSet::new();
            for (w, p) in &all {
                assert_eq!(w.total() as usize, n);
                assert!(p.is_finite() && *p > 0.0);
                assert!(seen.insert(w.counts().to_vec()), "duplicate {w:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn probabilities_sum_to_one(n in 2usize..=7) {
            let total = bootstrap_probability_total(n).unwrap();
            prop_assert!((total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn subsets_small_cases() {
        let s = subsets(3, 2).unwrap();
        let got: Vec<_> = s.iter().map(|m| m.indices().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(5, 1).unwrap().len(), 5);
        assert_eq!(subsets(12, 4).unwrap().len(), 495);
    }

    #[test]
    fn subsets_cap_error() {
        // C(40, 20) is far past the cap.
        assert!(matches!(subsets(40, 20), Err(Error::Capacity(_))));
    }

    #[test]
    fn subset_rank_round_trip() {
        let all = subsets(10, 4).unwrap();
        for (rank, mask) in all.iter().enumerate() {
            let got = subset_at_rank(10, 4, rank as u128).unwrap();
            assert_eq!(&got, mask.indices());
        }
        let mut idx = subset_at_rank(10, 4, 0).unwrap();
        let mut count = 1;
        while next_subset(10, &mut idx) {
            count += 1;
        }
        assert_eq!(count, 210);
    }

    #[test]
    fn colex_rank_is_a_bijection() {
        for (d, n) in [(1usize, 9usize), (2, 9), (3, 9)] {
            let mut seen = vec![false; binom(n as u64, d as u64).unwrap() as usize];
            for_each_subset(n, d, |s| {
                let r = colex_rank(s);
                assert!(!seen[r]);
                seen[r] = true;
            })
            .unwrap();
            assert!(seen.iter().all(|&b| b));
        }
    }
}
