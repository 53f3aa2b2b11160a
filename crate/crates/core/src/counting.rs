//! The sign-counting profile `(P, N, Z)` and the rank `R = P + N`.
//!
//! Zero is an exact comparison, never a tolerance: `Z` counts true
//! cancellations, and every rank identity downstream depends on that.

use serde::{Deserialize, Serialize};

use crate::rational::Rat;

/// Counts of positive, negative, and zero entries of a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingProfile {
    #[serde(rename = "P")]
    pub positive: usize,
    #[serde(rename = "N")]
    pub negative: usize,
    #[serde(rename = "Z")]
    pub zero: usize,
    #[serde(rename = "R")]
    pub rank: usize,
}

impl CountingProfile {
    pub fn len(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Exact sign classification of a rational vector.
pub fn profile(v: &[Rat]) -> CountingProfile {
    let mut p = 0;
    let mut n = 0;
    let mut z = 0;
    for x in v {
        match x.numer().sign() {
            num_bigint::Sign::Plus => p += 1,
            num_bigint::Sign::Minus => n += 1,
            num_bigint::Sign::NoSign => z += 1,
        }
    }
    CountingProfile { positive: p, negative: n, zero: z, rank: p + n }
}

/// Number of nonzero entries.
pub fn rank(v: &[Rat]) -> usize {
    profile(v).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prolongation::{build_direct, CoeffVector};
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn profile_examples() {
        let p = profile(&[rat(1), rat(-1), rat(0)]);
        assert_eq!((p.positive, p.negative, p.zero, p.rank), (1, 1, 1, 2));

        let p = profile(&[]);
        assert_eq!((p.positive, p.negative, p.zero, p.rank), (0, 0, 0, 0));
    }

    #[test]
    fn profile_serializes_with_short_keys() {
        let p = profile(&[rat(1), rat(-1), rat(0)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"P":1,"N":1,"Z":1,"R":2}"#);
    }

    #[test]
    fn profile_of_prolonged_vector() {
        // (x1 - x2)(x1 + x2 + x3) = x1^2 + x1x3 - x2^2 - x2x3
        let h = CoeffVector::from_ints(3, 1, &[1, -1, 0]).unwrap();
        let jh = build_direct(3, 1).apply(&h).unwrap();
        assert_eq!(
            jh.entries(),
            CoeffVector::from_ints(3, 2, &[1, 0, 1, -1, -1, 0]).unwrap().entries()
        );
        let p = profile(jh.entries());
        assert_eq!((p.positive, p.negative, p.zero), (2, 2, 2));
    }

    fn arb_vec() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-4i64..=4, 0..12)
    }

    proptest! {
        // Subadditivity: P(x+y) <= P(x) + P(y).
        #[test]
        fn subadditive(x in arb_vec(), y in arb_vec()) {
            let k = x.len().min(y.len());
            let xr: Vec<Rat> = x[..k].iter().map(|&v| rat(v)).collect();
            let yr: Vec<Rat> = y[..k].iter().map(|&v| rat(v)).collect();
            let sum: Vec<Rat> = xr.iter().zip(&yr).map(|(a, b)| a + b).collect();
            prop_assert!(profile(&sum).positive <= profile(&xr).positive + profile(&yr).positive);
        }

        // Monotonicity: x >= 0 implies P(y) <= P(x+y).
        #[test]
        fn monotone_under_nonneg_shift(x in arb_vec(), y in arb_vec()) {
            let k = x.len().min(y.len());
            let xr: Vec<Rat> = x[..k].iter().map(|&v| rat(v.abs())).collect();
            let yr: Vec<Rat> = y[..k].iter().map(|&v| rat(v)).collect();
            let sum: Vec<Rat> = xr.iter().zip(&yr).map(|(a, b)| a + b).collect();
            prop_assert!(profile(&yr).positive <= profile(&sum).positive);
        }

        // Triangle: |R(x) - R(y)| <= R(x+y) <= R(x) + R(y).
        #[test]
        fn rank_triangle(x in arb_vec(), y in arb_vec()) {
            let k = x.len().min(y.len());
            let xr: Vec<Rat> = x[..k].iter().map(|&v| rat(v)).collect();
            let yr: Vec<Rat> = y[..k].iter().map(|&v| rat(v)).collect();
            let sum: Vec<Rat> = xr.iter().zip(&yr).map(|(a, b)| a + b).collect();
            let (rx, ry, rs) = (rank(&xr), rank(&yr), rank(&sum));
            prop_assert!(rx.abs_diff(ry) <= rs);
            prop_assert!(rs <= rx + ry);
        }
    }
}
