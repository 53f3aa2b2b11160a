//! Big-integer binomials, Macaulay representations of integers, and the
//! conjectured rank-band arithmetic.
//!
//! The Macaulay representation writes `N` uniquely as a sum of binomials
//! `C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta)` with strictly
//! decreasing tops; the growth operator `N^<d>` shifts every term to
//! `C(k_i + 1, i + 1)` and bounds how fast shadows of monomial spaces grow.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Binomial coefficient `C(a, b)` as a big integer; `0` when `b > a`.
///
/// Total by convention rather than an error, which keeps the greedy Macaulay
/// loop free of case splits.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut result = BigUint::one();
    for i in 1..=b {
        result = result * BigUint::from(a - b + i) / BigUint::from(i);
    }
    result
}

/// `C(a, b)` in fixed width for index arithmetic.
///
/// Panics on overflow, which cannot happen while the value indexes a vector
/// that fits in memory.
pub(crate) fn binom_u128(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut result: u128 = 1;
    for i in 1..=b as u128 {
        let factor = (a - b) as u128 + i;
        result = result.checked_mul(factor).expect("binomial overflows u128") / i;
    }
    result
}

/// The `d`-Macaulay representation of a nonnegative integer.
///
/// `terms` lists pairs `(k_i, i)` with `i` descending from `d`; the tops
/// `k_i` are strictly decreasing and the list is empty exactly when `value`
/// is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub value: u64,
    pub d: u32,
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayRep {
    /// Re-sum the terms; equals `value` by construction.
    pub fn sum(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(k, i)| binomial(k, i as u64))
            .sum()
    }

    /// Strict descent of the tops and the bottoms-step-by-one shape.
    pub fn is_well_formed(&self) -> bool {
        if self.terms.is_empty() {
            return self.value == 0;
        }
        let mut ok = self.terms[0].1 == self.d;
        for w in self.terms.windows(2) {
            ok &= w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1;
        }
        let last = self.terms[self.terms.len() - 1];
        ok && last.0 >= last.1 as u64 && last.1 >= 1
    }
}

/// Greedy construction of the unique `d`-Macaulay representation.
///
/// At each level take the largest `k` with `C(k, i) <= remainder` and recurse
/// on the remainder with `i - 1`.
pub fn macaulay_rep(n_value: u64, d: u32) -> MacaulayRep {
    assert!(d >= 1, "macaulay_rep requires d >= 1");
    let mut terms = Vec::new();
    let mut rem = BigUint::from(n_value);
    let mut i = d;
    while !rem.is_zero() && i >= 1 {
        let k = if i == 1 {
            // C(k, 1) = k.
            rem.to_u64().expect("remainder fits u64")
        } else {
            let mut k = i as u64;
            let mut c = BigUint::one(); // C(i, i)
            loop {
                // C(k+1, i) = C(k, i) * (k+1) / (k+1-i)
                let next = &c * BigUint::from(k + 1) / BigUint::from(k + 1 - i as u64);
                if next > rem {
                    break;
                }
                k += 1;
                c = next;
            }
            k
        };
        rem -= binomial(k, i as u64);
        terms.push((k, i));
        i -= 1;
    }
    MacaulayRep { value: n_value, d, terms }
}

/// The Macaulay growth operator `N^<d>`, with `0^<d> = 0`.
pub fn macaulay_step(n_value: u64, d: u32) -> BigUint {
    macaulay_rep(n_value, d)
        .terms
        .iter()
        .map(|&(k, i)| binomial(k + 1, i as u64 + 1))
        .sum()
}

/// Largest `kappa` with `kappa(kappa+1)/2 < n`.
pub fn kappa0(n: u64) -> u64 {
    debug_assert!(n >= 2);
    let mut k = 0u64;
    while (k + 1) * (k + 2) / 2 < n {
        k += 1;
    }
    k
}

/// Where a prolongation rank sits relative to the conjectured bands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BandClass {
    Zero,
    InBand { kappa: u64 },
    AboveThreshold,
    InGap,
}

/// The conjectured rank intervals for a given number of variables.
///
/// `bands[kappa] = [kappa*n - kappa(kappa-1)/2, kappa*n]` for
/// `kappa = 0..=kappa0`, and `threshold` is the alternative lower bound
/// `(kappa0+1)n - (kappa0+1)kappa0/2 - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandReport {
    pub n: u64,
    pub kappa0: u64,
    pub threshold: u64,
    pub bands: Vec<(u64, u64)>,
}

impl BandReport {
    /// Classify a rank as zero, inside a band, above the threshold, or in a
    /// gap the conjecture predicts to be empty.
    pub fn classify(&self, rank: u64) -> BandClass {
        if rank == 0 {
            return BandClass::Zero;
        }
        for (kappa, &(lo, hi)) in self.bands.iter().enumerate() {
            if lo <= rank && rank <= hi {
                return BandClass::InBand { kappa: kappa as u64 };
            }
        }
        if rank >= self.threshold {
            BandClass::AboveThreshold
        } else {
            BandClass::InGap
        }
    }
}

/// Band intervals and threshold for `n >= 2` variables.
pub fn conjecture_bands(n: u64) -> BandReport {
    let k0 = kappa0(n);
    let bands = (0..=k0)
        .map(|k| (k * n - k * k.saturating_sub(1) / 2, k * n))
        .collect();
    let threshold = (k0 + 1) * n - (k0 + 1) * k0 / 2 - 1;
    BandReport { n, kappa0: k0, threshold, bands }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        // Oracle for C(7,3): direct factorial quotient 5040 / (6 * 24).
        assert_eq!(binomial(7, 3), BigUint::from(5040u32 / (6 * 24)));
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn binomial_is_big() {
        // C(200, 100) has 60 digits; no fixed-width type holds it.
        let c = binomial(200, 100);
        assert!(c.to_string().len() >= 59);
    }

    #[test]
    fn macaulay_rep_examples() {
        // 5 = C(3,2) + C(2,1)
        let rep = macaulay_rep(5, 2);
        assert_eq!(rep.terms, vec![(3, 2), (2, 1)]);
        assert!(rep.is_well_formed());

        let rep = macaulay_rep(0, 3);
        assert!(rep.terms.is_empty());
        assert!(rep.is_well_formed());
    }

    #[test]
    fn macaulay_rep_of_dimension_minus_one() {
        // C(n+d-1, d) - 1 decomposes as C(n+d-2, d) + ... + C(n-1, 1); the
        // same binomials size the identity blocks of the matrix recursion.
        // For n = 3, d = 2: 5 = C(3,2) + C(2,1).
        let (n, d) = (3u64, 2u32);
        let dim = binomial(n + d as u64 - 1, d as u64).to_u64().unwrap();
        let rep = macaulay_rep(dim - 1, d);
        let expected: Vec<(u64, u32)> = (1..=d)
            .rev()
            .map(|i| (n + i as u64 - 2, i))
            .collect();
        assert_eq!(rep.terms, expected);
    }

    #[test]
    fn macaulay_step_examples() {
        // 5^<2> = C(4,3) + C(3,2) = 4 + 3 = 7
        assert_eq!(macaulay_step(5, 2), BigUint::from(7u32));
        for d in 1..8 {
            assert_eq!(macaulay_step(0, d), BigUint::zero());
        }
        // Z^<1> = C(Z+1, 2)
        assert_eq!(macaulay_step(4, 1), BigUint::from(10u32));
        for z in 0..50u64 {
            assert_eq!(macaulay_step(z, 1), binomial(z + 1, 2));
        }
    }

    #[test]
    fn kappa0_examples() {
        assert_eq!(kappa0(2), 1);
        assert_eq!(kappa0(6), 2);
        assert_eq!(kappa0(7), 3);
        for n in 2..200u64 {
            let k = kappa0(n);
            assert!(k * (k + 1) / 2 < n);
            assert!(n <= (k + 1) * (k + 2) / 2);
        }
    }

    #[test]
    fn bands_for_six_variables() {
        let report = conjecture_bands(6);
        assert_eq!(report.kappa0, 2);
        assert_eq!(report.threshold, 14);
        assert_eq!(report.threshold, 3 * 6 - 4);
        assert_eq!(report.bands, vec![(0, 0), (6, 6), (11, 12)]);
        assert_eq!(report.classify(0), BandClass::Zero);
        assert_eq!(report.classify(6), BandClass::InBand { kappa: 1 });
        assert_eq!(report.classify(13), BandClass::InGap);
        assert_eq!(report.classify(14), BandClass::AboveThreshold);
    }

    #[test]
    fn bands_for_two_variables() {
        let report = conjecture_bands(2);
        assert_eq!(report.threshold, 2);
        assert_eq!(report.bands, vec![(0, 0), (2, 2)]);
    }

    #[test]
    fn threshold_against_three_n_minus_four() {
        // The two expressions agree at n = 2, 4, 5, 6. At n = 3 the
        // threshold is 4 while 3n - 4 = 5, so the rank bound strictly
        // exceeds the conjectured floor there; from n = 7 on the threshold
        // pulls ahead for good.
        for n in [2u64, 4, 5, 6] {
            assert_eq!(conjecture_bands(n).threshold, 3 * n - 4);
        }
        assert_eq!(conjecture_bands(3).threshold, 4);
        for n in 7..=20 {
            assert!(conjecture_bands(n).threshold > 3 * n - 4);
        }
    }

    proptest! {
        #[test]
        fn macaulay_roundtrip(n_value in 0u64..1_000_000, d in 1u32..=10) {
            let rep = macaulay_rep(n_value, d);
            prop_assert!(rep.is_well_formed());
            prop_assert_eq!(rep.sum(), BigUint::from(n_value));
        }

        #[test]
        fn macaulay_step_monotone(n_value in 0u64..100_000, d in 1u32..=8) {
            prop_assert!(macaulay_step(n_value, d) <= macaulay_step(n_value + 1, d));
        }
    }
}
