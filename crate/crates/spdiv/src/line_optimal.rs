//! Closed-form continuous optima on intervals and the Jensen certificate.
//!
//! The per-gap contribution `f(t) = tanh(beta * t / 2)` is strictly increasing
//! and strictly concave on `(0, inf)`. Increasing monotonicity forces an
//! optimal set to span the whole interval; strict concavity then makes equal
//! gaps the unique optimum: among all gap vectors with a fixed span, the
//! uniform one maximizes the sum of contributions, with equality only when
//! every gap equals the mean. [`jensen_certificate`] makes that inequality
//! checkable for any concrete gap vector.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::GapVector;

/// Relative deviation from the mean gap below which a gap vector counts as
/// uniform when deciding Jensen equality.
pub const JENSEN_EQUALITY_RELATIVE_TOLERANCE: f64 = 1e-10;

/// The uniformly spaced k-point set on an interval and its closed-form
/// diversity `1 + (k-1) tanh(beta L / (2(k-1)))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContinuousOptimum {
    pub k: usize,
    pub length: f64,
    pub beta: f64,
    pub points: Vec<f64>,
    pub value: f64,
}

/// The unique diversity maximizer among k-point subsets of `[lo, hi]`.
/// Both endpoints are returned bit-exactly; interior points are
/// `lo + i (hi - lo) / (k - 1)`.
pub fn uniform_optimum(k: usize, lo: f64, hi: f64, beta: f64) -> Result<ContinuousOptimum> {
    if k < 2 {
        return Err(Error::Argument(format!(
            "a continuous optimum needs k >= 2 points, got {k}"
        )));
    }
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Error::Argument(format!(
            "interval [{lo}, {hi}] must be finite and nonempty"
        )));
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Argument(format!(
            "beta must be a positive finite real, got {beta}"
        )));
    }
    let length = hi - lo;
    let segments = (k - 1) as f64;
    let points = (0..k)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == k - 1 {
                hi
            } else {
                lo + length * i as f64 / segments
            }
        })
        .collect();
    let value = 1.0 + segments * (beta * length / (2.0 * segments)).tanh();
    Ok(ContinuousOptimum {
        k,
        length,
        beta,
        points,
        value,
    })
}

/// Both sides of the Jensen bound for a concrete gap vector.
///
/// `lhs` is the realized excess `sum f(delta_i)`; `rhs` is the uniform bound
/// `n f(mean)`. Concavity guarantees `slack = rhs - lhs >= 0` up to rounding,
/// and `tight` reports whether the gaps are equal within
/// [`JENSEN_EQUALITY_RELATIVE_TOLERANCE`], the only case with zero slack.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JensenCertificate {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tight: bool,
}

pub fn jensen_certificate(gaps: &GapVector, beta: f64) -> JensenCertificate {
    assert!(
        beta.is_finite() && beta > 0.0,
        "jensen certificate needs a positive finite beta, got {beta}"
    );
    if gaps.is_empty() {
        return JensenCertificate {
            lhs: 0.0,
            rhs: 0.0,
            slack: 0.0,
            tight: true,
        };
    }
    let mean = gaps.mean();
    let lhs: f64 = gaps.gaps().iter().map(|&g| gap_contribution(g, beta)).sum();
    let rhs = gaps.len() as f64 * gap_contribution(mean, beta);
    let max_deviation = gaps
        .gaps()
        .iter()
        .map(|&g| (g - mean).abs())
        .fold(0.0, f64::max);
    JensenCertificate {
        lhs,
        rhs,
        slack: rhs - lhs,
        tight: max_deviation <= JENSEN_EQUALITY_RELATIVE_TOLERANCE * mean,
    }
}

/// Per-gap contribution `f(t) = tanh(beta * t / 2)`.
pub fn gap_contribution(t: f64, beta: f64) -> f64 {
    (beta * t / 2.0).tanh()
}

/// Second derivative `f''(t) = -(beta^2 / 2) sech^2(beta t / 2) tanh(beta t / 2)`,
/// strictly negative for `t > 0`.
pub fn gap_contribution_second_derivative(t: f64, beta: f64) -> f64 {
    let half = beta * t / 2.0;
    let sech = 1.0 / half.cosh();
    -(beta * beta / 2.0) * sech * sech * half.tanh()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn two_point_optimum_on_unit_interval() {
        let opt = uniform_optimum(2, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(opt.points, vec![0.0, 1.0]);
        assert!((opt.value - (1.0 + 0.5f64.tanh())).abs() < 1e-15);
    }

    #[test]
    fn ten_point_optimum_on_symmetric_interval() {
        let opt = uniform_optimum(10, -1.0, 1.0, 1.0).unwrap();
        assert_eq!(opt.points[0], -1.0);
        assert_eq!(opt.points[9], 1.0);
        assert!((opt.value - 1.995905).abs() < 1e-6);
        let expected = 1.0 + 9.0 * (1.0f64 / 9.0).tanh();
        assert_eq!(opt.value, expected);
    }

    #[test]
    fn endpoints_are_bit_exact() {
        let (lo, hi) = (0.1 + 0.2, 7.3 / 3.0);
        let opt = uniform_optimum(7, lo, hi, 2.0).unwrap();
        assert_eq!(opt.points[0].to_bits(), lo.to_bits());
        assert_eq!(opt.points[6].to_bits(), hi.to_bits());
    }

    #[test]
    fn argument_errors() {
        assert!(uniform_optimum(1, 0.0, 1.0, 1.0).is_err());
        assert!(uniform_optimum(3, 1.0, 1.0, 1.0).is_err());
        assert!(uniform_optimum(3, 2.0, 1.0, 1.0).is_err());
        assert!(uniform_optimum(3, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn optimum_value_is_monotone_in_length_and_cardinality() {
        let mut prev = f64::MIN;
        for length in [0.5, 1.0, 2.0, 4.0, 8.0] {
            let v = uniform_optimum(6, 0.0, length, 1.0).unwrap().value;
            assert!(v > prev);
            prev = v;
        }
        let mut prev = f64::MIN;
        for k in [2, 3, 5, 9, 17, 33] {
            let v = uniform_optimum(k, 0.0, 2.0, 1.0).unwrap().value;
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn equal_gaps_certify_tight() {
        let gaps = GapVector::from_gaps(vec![0.25; 8]).unwrap();
        let cert = jensen_certificate(&gaps, 1.0);
        assert!(cert.tight);
        assert!(cert.slack.abs() < 1e-15);
    }

    #[test]
    fn unequal_gaps_have_strict_slack() {
        let gaps = GapVector::from_gaps(vec![0.9, 0.1]).unwrap();
        let cert = jensen_certificate(&gaps, 1.0);
        assert!(!cert.tight);
        assert!(cert.slack > 0.0);
        // Frozen from direct evaluation of both sides.
        assert!((cert.lhs - 0.471857380207888).abs() < 1e-13);
        assert!((cert.rhs - 0.489837324807418).abs() < 1e-13);
        assert!((cert.slack - 0.017979944599530).abs() < 1e-13);
    }

    #[test]
    fn random_gap_vectors_satisfy_the_bound() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..500 {
            let n = rng.gen_range(1..=30);
            let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..1.0)).collect();
            let scale = 3.0 / raw.iter().sum::<f64>();
            let gaps = GapVector::from_gaps(raw.iter().map(|g| g * scale).collect()).unwrap();
            let cert = jensen_certificate(&gaps, 1.0);
            assert!(cert.slack >= -1e-12);
        }
    }

    #[test]
    fn contribution_and_second_derivative_at_origin() {
        assert_eq!(gap_contribution(0.0, 1.0), 0.0);
        assert_eq!(gap_contribution_second_derivative(0.0, 1.0), 0.0);
    }

    #[test]
    fn second_derivative_is_negative_and_matches_finite_differences() {
        let beta = 1.0;
        let h = 1e-4;
        for step in 0..100 {
            let t = 0.1 + 9.9 * step as f64 / 99.0;
            let exact = gap_contribution_second_derivative(t, beta);
            assert!(exact < 0.0);
            let fd = (gap_contribution(t + h, beta) - 2.0 * gap_contribution(t, beta)
                + gap_contribution(t - h, beta))
                / (h * h);
            assert!((exact - fd).abs() < 1e-6, "t={t}: {exact} vs {fd}");
        }
    }
}
