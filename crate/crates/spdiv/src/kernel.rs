//! Similarity kernels: normalized non-increasing maps from distance to similarity.
//!
//! A kernel turns a nonnegative distance `t` into a similarity in `(0, 1]`
//! with `K(0) = 1`. The exponential family `K(t) = exp(-beta * t)` is the one
//! with closed-form line diversity; arbitrary custom kernels are supported so
//! that non-exponential behavior can be probed and certified.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Number of probe points used when validating monotonicity of a custom
/// kernel over a distance range. Opaque evaluators cannot be validated
/// exhaustively; a fixed grid is the documented compromise.
pub const MONOTONICITY_PROBES: usize = 1024;

/// Floor applied by [`Kernel::truncated_linear`] so the kernel stays inside
/// the required `(0, 1]` codomain.
pub const TRUNCATED_LINEAR_FLOOR: f64 = 1e-6;

type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A normalized non-increasing similarity kernel.
#[derive(Clone)]
pub enum Kernel {
    /// `K(t) = exp(-beta * t)` with `beta > 0`.
    Exponential { beta: f64 },
    /// An opaque evaluator with `K(0) = 1`, labeled for reports.
    Custom { name: String, eval: Evaluator },
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kernel({})", self.name())
    }
}

impl Kernel {
    /// Exponential kernel at scale `beta`.
    pub fn exponential(beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::InvalidKernel(format!(
                "exponential scale beta must be a positive finite real, got {beta}"
            )));
        }
        Ok(Kernel::Exponential { beta })
    }

    /// Custom kernel from an evaluator. `K(0)` must be exactly 1; the
    /// non-increasing property is only checked later, on a probe grid over
    /// the distance range actually used.
    pub fn custom(name: impl Into<String>, eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Result<Self> {
        let at_zero = eval(0.0);
        if at_zero != 1.0 {
            return Err(Error::InvalidKernel(format!(
                "kernel must be normalized: K(0) = {at_zero}, expected exactly 1"
            )));
        }
        Ok(Kernel::Custom {
            name: name.into(),
            eval: Arc::new(eval),
        })
    }

    /// Gaussian reference kernel `K(t) = exp(-t^2)`. Not exponential in `t`,
    /// so it violates adjacent-gap additivity.
    pub fn gaussian() -> Self {
        Kernel::custom("gaussian", |t| (-t * t).exp()).expect("gaussian kernel is normalized")
    }

    /// Rational reference kernel `K(t) = 1 / (1 + t)`.
    pub fn rational() -> Self {
        Kernel::custom("rational", |t| 1.0 / (1.0 + t)).expect("rational kernel is normalized")
    }

    /// Truncated-linear reference kernel `K(t) = max(eps, 1 - t/2)`, floored
    /// at [`TRUNCATED_LINEAR_FLOOR`] to stay within `(0, 1]`.
    pub fn truncated_linear() -> Self {
        Kernel::custom("truncated-linear", |t| (1.0 - t / 2.0).max(TRUNCATED_LINEAR_FLOOR))
            .expect("truncated-linear kernel is normalized")
    }

    /// Similarity at distance `t >= 0`.
    pub fn evaluate(&self, t: f64) -> f64 {
        match self {
            Kernel::Exponential { beta } => (-beta * t).exp(),
            Kernel::Custom { eval, .. } => eval(t),
        }
    }

    /// The scale parameter, when the kernel is exponential.
    pub fn beta(&self) -> Option<f64> {
        match self {
            Kernel::Exponential { beta } => Some(*beta),
            Kernel::Custom { .. } => None,
        }
    }

    /// Human-readable label used in reports.
    pub fn name(&self) -> String {
        match self {
            Kernel::Exponential { beta } => format!("exponential(beta={beta})"),
            Kernel::Custom { name, .. } => name.clone(),
        }
    }

    /// Check the kernel on a [`MONOTONICITY_PROBES`]-point grid over
    /// `[0, max_distance]`: every value must lie in `(0, 1]` and the sequence
    /// must be non-increasing. Exponential kernels are analytically monotone
    /// and skip the probe.
    pub fn validate_non_increasing(&self, max_distance: f64) -> Result<()> {
        if matches!(self, Kernel::Exponential { .. }) {
            return Ok(());
        }
        if !(max_distance.is_finite() && max_distance >= 0.0) {
            return Err(Error::Domain(format!(
                "kernel probe range must be a nonnegative finite real, got {max_distance}"
            )));
        }
        let mut prev = f64::INFINITY;
        for step in 0..MONOTONICITY_PROBES {
            let t = max_distance * step as f64 / (MONOTONICITY_PROBES - 1) as f64;
            let value = self.evaluate(t);
            if !(value.is_finite() && value > 0.0 && value <= 1.0) {
                return Err(Error::InvalidKernel(format!(
                    "K({t}) = {value} is outside the required (0, 1] codomain"
                )));
            }
            if value > prev {
                return Err(Error::InvalidKernel(format!(
                    "kernel is not non-increasing on the probe grid: K({t}) = {value} exceeds the previous probe {prev}"
                )));
            }
            prev = value;
        }
        Ok(())
    }
}
