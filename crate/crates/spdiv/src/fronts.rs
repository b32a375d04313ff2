//! Built-in benchmark Pareto fronts.
//!
//! Two ordered biobjective fronts used throughout the tests and the
//! `reproduce` command: a dense connected parabola front and the
//! disconnected ZDT3 front.

use std::f64::consts::PI;

use crate::reduce::OrderedCurveSample;

/// The five f1-intervals of the Pareto-optimal part of the ZDT3 front,
/// stored as the conventional 10-digit decimal constants rather than
/// recomputed roots, so the generated instance is reproducible bit for bit.
pub const ZDT3_COMPONENTS: [(f64, f64); 5] = [
    (0.0, 0.0830015349),
    (0.1822287280, 0.2577623634),
    (0.4093136748, 0.4538821041),
    (0.6183967944, 0.6525117038),
    (0.8233317983, 0.8518328654),
];

/// Second objective of the ZDT3 front: `f2 = 1 - sqrt(f1) - f1 sin(10 pi f1)`.
pub fn zdt3_f2(f1: f64) -> f64 {
    1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin()
}

/// Dense connected front on the curve `f2 = 1 - f1^2`:
/// points `(x_i, 1 - x_i^2)` with `x_i = (i-1)/(n-1)`, `i = 1..n`.
///
/// The induced line coordinate is `x^2 + x - 1` up to the anchoring shift,
/// spanning a length-2 interval.
pub fn generate_parabola_front(n: usize) -> OrderedCurveSample {
    assert!(n >= 2, "parabola front needs n >= 2 points, got {n}");
    let points = (0..n)
        .map(|i| {
            let x = i as f64 / (n - 1) as f64;
            vec![x, 1.0 - x * x]
        })
        .collect();
    OrderedCurveSample::new(points).expect("parabola front is ordered by construction")
}

/// Disconnected ZDT3 front: `per_component` uniformly spaced f1 values on
/// each of the five [`ZDT3_COMPONENTS`] (both interval ends included),
/// mapped through [`zdt3_f2`] and concatenated in increasing f1.
///
/// The induced line coordinate is `f1 - f2` up to the anchoring shift.
pub fn generate_zdt3_front(per_component: usize) -> OrderedCurveSample {
    assert!(
        per_component >= 2,
        "ZDT3 front needs at least 2 points per component, got {per_component}"
    );
    let mut points = Vec::with_capacity(5 * per_component);
    for (lo, hi) in ZDT3_COMPONENTS {
        for i in 0..per_component {
            let f1 = if i == per_component - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (per_component - 1) as f64
            };
            points.push(vec![f1, zdt3_f2(f1)]);
        }
    }
    OrderedCurveSample::new(points).expect("ZDT3 front is ordered by construction")
}
