//! Problem instances on the real line and the values we compute for them.

use serde::Serialize;

use crate::error::{Error, Result};

/// Strictly increasing scalar coordinates: the canonical problem form.
///
/// Duplicates are rejected up front. The inverse-matrix diversity path is
/// singular for duplicated points and the gap-sum path would silently dedupe
/// them, so construction fails loudly instead; use
/// [`LineInstance::dedupe_then_build`] when ingesting raw data.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct LineInstance {
    coords: Vec<f64>,
}

impl LineInstance {
    /// Build from strictly increasing finite coordinates (at least one).
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInstance);
        }
        for (index, &value) in coords.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::Argument(format!(
                    "coordinate {} is not finite: {value}",
                    index + 1
                )));
            }
        }
        for index in 0..coords.len() - 1 {
            if coords[index + 1] <= coords[index] {
                return Err(Error::NotStrictlyIncreasing {
                    index: index + 1,
                    prev: coords[index],
                    next: coords[index + 1],
                });
            }
        }
        Ok(LineInstance { coords })
    }

    /// Ingestion convenience: sort and collapse exact duplicates, then build.
    pub fn dedupe_then_build(mut coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|c| c.is_nan()) {
            return Err(Error::Argument("coordinates contain NaN".into()));
        }
        coords.sort_by(|a, b| a.partial_cmp(b).expect("NaN filtered above"));
        coords.dedup();
        LineInstance::new(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one point
    }

    /// Total extent `max - min`; zero for a singleton.
    pub fn span(&self) -> f64 {
        self.coords[self.coords.len() - 1] - self.coords[0]
    }

    /// Consecutive gaps; empty for a singleton.
    pub fn gaps(&self) -> GapVector {
        GapVector::from_instance(self)
    }

    /// Sub-instance given strictly increasing 1-based indices.
    pub fn select(&self, indices: &[usize]) -> Result<LineInstance> {
        let mut coords = Vec::with_capacity(indices.len());
        for &index in indices {
            if index == 0 || index > self.coords.len() {
                return Err(Error::Argument(format!(
                    "selection index {index} is outside 1..={}",
                    self.coords.len()
                )));
            }
            coords.push(self.coords[index - 1]);
        }
        LineInstance::new(coords)
    }
}

/// Consecutive differences of an ordered point set. The diversity objective
/// is separable over these gaps, which is what every solver here exploits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapVector {
    gaps: Vec<f64>,
    span: f64,
}

impl GapVector {
    /// Gaps of an instance. The span is taken as `last - first`, which the
    /// per-gap sum reproduces only up to rounding.
    pub fn from_instance(instance: &LineInstance) -> Self {
        let coords = instance.coords();
        let gaps = coords.windows(2).map(|w| w[1] - w[0]).collect();
        GapVector {
            gaps,
            span: instance.span(),
        }
    }

    /// Build directly from positive gap lengths; the span is their sum.
    pub fn from_gaps(gaps: Vec<f64>) -> Result<Self> {
        for (index, &gap) in gaps.iter().enumerate() {
            if !(gap.is_finite() && gap > 0.0) {
                return Err(Error::Argument(format!(
                    "gap {} must be a positive finite real, got {gap}",
                    index + 1
                )));
            }
        }
        let span = gaps.iter().sum();
        Ok(GapVector { gaps, span })
    }

    pub fn gaps(&self) -> &[f64] {
        &self.gaps
    }

    pub fn span(&self) -> f64 {
        self.span
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Mean gap `span / count`.
    pub fn mean(&self) -> f64 {
        self.span / self.gaps.len() as f64
    }
}

/// A diversity value together with its excess over the singleton baseline.
///
/// Every normalized kernel assigns a singleton diversity of exactly 1, so the
/// excess `value - 1` is the quantity that adds up over adjacent gaps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiversityValue {
    pub value: f64,
    pub excess: f64,
}

impl DiversityValue {
    /// From a raw diversity value; the excess is `value - 1`.
    pub fn from_value(value: f64) -> Self {
        DiversityValue {
            value,
            excess: value - 1.0,
        }
    }

    /// From an accumulated excess. The stored excess is recomputed as
    /// `value - 1` so the two fields agree exactly, which rounds away any
    /// excess below f64 resolution around 1.
    pub fn from_excess(excess: f64) -> Self {
        let value = 1.0 + excess;
        DiversityValue {
            value,
            excess: value - 1.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_increasing() {
        assert!(matches!(LineInstance::new(vec![]), Err(Error::EmptyInstance)));
        let err = LineInstance::new(vec![0.0, 1.0, 1.0]).unwrap_err();
        assert!(matches!(err, Error::NotStrictlyIncreasing { index: 2, .. }));
        assert!(LineInstance::new(vec![0.0, -1.0]).is_err());
        assert!(LineInstance::new(vec![0.0, f64::NAN]).is_err());
    }

    #[test]
    fn dedupe_sorts_and_collapses_exact_duplicates() {
        let instance = LineInstance::dedupe_then_build(vec![1.0, 0.5, 1.0, 0.0, 0.5]).unwrap();
        assert_eq!(instance.coords(), &[0.0, 0.5, 1.0]);
    }

    #[test]
    fn gaps_and_span() {
        let instance = LineInstance::new(vec![-1.0, -0.25, 0.5, 2.0]).unwrap();
        let gaps = instance.gaps();
        assert_eq!(gaps.gaps(), &[0.75, 0.75, 1.5]);
        assert_eq!(gaps.span(), 3.0);
        assert!((gaps.span() - gaps.gaps().iter().sum::<f64>()).abs() < 1e-15);
        assert_eq!(gaps.mean(), 1.0);
    }

    #[test]
    fn singleton_has_no_gaps() {
        let instance = LineInstance::new(vec![42.0]).unwrap();
        assert!(instance.gaps().is_empty());
        assert_eq!(instance.span(), 0.0);
    }

    #[test]
    fn gap_vector_rejects_nonpositive_gaps() {
        assert!(GapVector::from_gaps(vec![0.1, 0.0]).is_err());
        assert!(GapVector::from_gaps(vec![-0.1]).is_err());
        assert!(GapVector::from_gaps(vec![0.3, 0.7]).is_ok());
    }

    #[test]
    fn select_is_one_based() {
        let instance = LineInstance::new(vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        let sub = instance.select(&[1, 3, 4]).unwrap();
        assert_eq!(sub.coords(), &[0.0, 2.0, 3.0]);
        assert!(instance.select(&[0]).is_err());
        assert!(instance.select(&[5]).is_err());
    }

    #[test]
    fn diversity_value_fields_agree_exactly() {
        let d = DiversityValue::from_excess(0.75);
        assert_eq!(d.value, 1.75);
        assert_eq!(d.excess, d.value - 1.0);
        let singleton = DiversityValue::from_value(1.0);
        assert_eq!(singleton.excess, 0.0);
    }
}
