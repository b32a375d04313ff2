//! Solow-Polasky diversity by both of its computation routes.
//!
//! For a finite set with similarity matrix `Z`, the diversity is the scalar
//! `1' Z^{-1} 1`, evaluated here by a factor-and-solve with the all-ones
//! right-hand side. For strictly increasing points on a line under the
//! exponential kernel, the same quantity collapses to a linear-time sum over
//! consecutive gaps,
//!
//! ```text
//! D = 1 + sum_i tanh(beta * delta_i / 2),
//! ```
//!
//! because the similarity of two points factorizes over the gaps between
//! them and the inverse matrix becomes tridiagonal. The two routes are kept
//! independent so each can serve as an oracle for the other.

use crate::error::{Error, Result};
use crate::instance::{DiversityValue, LineInstance};
use crate::kernel::Kernel;

/// A pivot below this fraction of the column's largest entry marks the
/// similarity matrix as numerically singular.
pub const PIVOT_RELATIVE_TOLERANCE: f64 = 1e-12;

/// Three-point determinants below this magnitude are treated as degenerate.
pub const TRIPLE_DETERMINANT_TOLERANCE: f64 = 1e-12;

/// Dense symmetric similarity matrix with unit diagonal and entries in (0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    n: usize,
    entries: Vec<f64>, // row-major
}

impl SimilarityMatrix {
    /// Build from a pairwise distance function. Custom kernels are probed for
    /// monotonicity over the instance's distance range; every entry is
    /// checked against the `(0, 1]` codomain.
    pub fn from_distances(
        n: usize,
        distance: impl Fn(usize, usize) -> f64,
        kernel: &Kernel,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInstance);
        }
        let mut max_distance: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                max_distance = max_distance.max(distance(i, j));
            }
        }
        kernel.validate_non_increasing(max_distance)?;

        let mut entries = vec![1.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = distance(i, j);
                if !(d.is_finite() && d >= 0.0) {
                    return Err(Error::Domain(format!(
                        "distance between points {} and {} must be a nonnegative finite real, got {d}",
                        i + 1,
                        j + 1
                    )));
                }
                let similarity = kernel.evaluate(d);
                if !(similarity.is_finite() && similarity > 0.0 && similarity <= 1.0) {
                    return Err(Error::InvalidKernel(format!(
                        "K({d}) = {similarity} is outside the required (0, 1] codomain"
                    )));
                }
                entries[i * n + j] = similarity;
                entries[j * n + i] = similarity;
            }
        }
        Ok(SimilarityMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// `1' Z^{-1} 1` via LU factorization with partial pivoting and the
    /// all-ones right-hand side. A pivot below [`PIVOT_RELATIVE_TOLERANCE`]
    /// relative to the column's largest original entry reports
    /// [`Error::SingularMatrix`].
    pub fn diversity(&self) -> Result<DiversityValue> {
        let solution = self.solve_ones()?;
        Ok(DiversityValue::from_value(solution.iter().sum()))
    }

    fn solve_ones(&self) -> Result<Vec<f64>> {
        let n = self.n;
        let mut lu = self.entries.clone();
        let mut rhs = vec![1.0; n];

        let mut column_scale = vec![0.0f64; n];
        for j in 0..n {
            for i in 0..n {
                column_scale[j] = column_scale[j].max(lu[i * n + j].abs());
            }
        }

        for col in 0..n {
            // Partial pivoting: bring the largest remaining entry up.
            let mut pivot_row = col;
            let mut pivot_mag = lu[col * n + col].abs();
            for row in (col + 1)..n {
                let mag = lu[row * n + col].abs();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = row;
                }
            }
            if pivot_mag <= PIVOT_RELATIVE_TOLERANCE * column_scale[col] {
                return Err(Error::SingularMatrix {
                    pivot: pivot_mag,
                    column: col + 1,
                });
            }
            if pivot_row != col {
                for j in 0..n {
                    lu.swap(col * n + j, pivot_row * n + j);
                }
                rhs.swap(col, pivot_row);
            }
            let pivot = lu[col * n + col];
            for row in (col + 1)..n {
                let factor = lu[row * n + col] / pivot;
                if factor == 0.0 {
                    continue;
                }
                for j in (col + 1)..n {
                    lu[row * n + j] -= factor * lu[col * n + j];
                }
                rhs[row] -= factor * rhs[col];
            }
        }

        // Back substitution.
        let mut solution = vec![0.0; n];
        for row in (0..n).rev() {
            let mut acc = rhs[row];
            for j in (row + 1)..n {
                acc -= lu[row * n + j] * solution[j];
            }
            solution[row] = acc / lu[row * n + row];
        }
        Ok(solution)
    }
}

/// Similarity matrix of a line instance: `entries[i][j] = K(|x_i - x_j|)`.
pub fn build_similarity_matrix(points: &LineInstance, kernel: &Kernel) -> Result<SimilarityMatrix> {
    let coords = points.coords();
    SimilarityMatrix::from_distances(coords.len(), |i, j| (coords[i] - coords[j]).abs(), kernel)
}

/// Diversity by the inverse-matrix definition `1' Z^{-1} 1`.
pub fn diversity_matrix(points: &LineInstance, kernel: &Kernel) -> Result<DiversityValue> {
    build_similarity_matrix(points, kernel)?.diversity()
}

/// Diversity by the ordered-line gap sum, `1 + sum tanh(beta * delta / 2)`.
/// Exponential kernel only; linear time in the number of points.
pub fn diversity_gap_sum(points: &LineInstance, beta: f64) -> DiversityValue {
    assert!(
        beta.is_finite() && beta > 0.0,
        "gap-sum diversity needs a positive finite beta, got {beta}"
    );
    let excess: f64 = points
        .coords()
        .windows(2)
        .map(|w| (beta * (w[1] - w[0]) / 2.0).tanh())
        .sum();
    DiversityValue::from_excess(excess)
}

/// Excess diversity of a two-point set with similarity `r`: `(1 - r) / (1 + r)`.
/// For `r = exp(-beta * t)` this equals `tanh(beta * t / 2)`.
pub fn two_point_excess(r: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!(
            "two-point similarity must lie strictly inside (0, 1), got {r}"
        )));
    }
    Ok((1.0 - r) / (1.0 + r))
}

/// Excess diversity of a three-point set `{0, a, a+b}` with similarities
/// `u = K(a)`, `v = K(b)`, `w = K(a+b)`:
///
/// ```text
/// E3 = 2 (1-u)(1-v)(1-w) / (1 + 2uvw - u^2 - v^2 - w^2).
/// ```
pub fn three_point_excess(u: f64, v: f64, w: f64) -> Result<f64> {
    for (label, s) in [("u", u), ("v", v), ("w", w)] {
        if !(s.is_finite() && s > 0.0 && s < 1.0) {
            return Err(Error::Domain(format!(
                "three-point similarity {label} must lie strictly inside (0, 1), got {s}"
            )));
        }
    }
    let determinant = 1.0 + 2.0 * u * v * w - u * u - v * v - w * w;
    if determinant.abs() < TRIPLE_DETERMINANT_TOLERANCE {
        return Err(Error::DegenerateTriple { determinant });
    }
    Ok(2.0 * (1.0 - u) * (1.0 - v) * (1.0 - w) / determinant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn exponential(beta: f64) -> Kernel {
        Kernel::exponential(beta).unwrap()
    }

    #[test]
    fn singleton_matrix_and_diversity() {
        let instance = LineInstance::new(vec![3.5]).unwrap();
        let z = build_similarity_matrix(&instance, &exponential(1.0)).unwrap();
        assert_eq!(z.size(), 1);
        assert_eq!(z.get(0, 0), 1.0);
        let d = diversity_matrix(&instance, &exponential(1.0)).unwrap();
        assert_eq!(d.value, 1.0);
        assert_eq!(diversity_gap_sum(&instance, 1.0).value, 1.0);
    }

    #[test]
    fn two_point_matrix_entries() {
        let t = 0.7;
        let beta = 1.3;
        let instance = LineInstance::new(vec![0.0, t]).unwrap();
        let z = build_similarity_matrix(&instance, &exponential(beta)).unwrap();
        let r = (-beta * t).exp();
        assert_eq!(z.get(0, 1), r);
        assert_eq!(z.get(1, 0), r);
        assert_eq!(z.get(0, 0), 1.0);
        assert_eq!(z.get(1, 1), 1.0);

        // Two points at distance t: diversity 2 / (1 + r).
        let d = diversity_matrix(&instance, &exponential(beta)).unwrap();
        assert!((d.value - 2.0 / (1.0 + r)).abs() < 1e-14);
    }

    #[test]
    fn three_point_custom_kernel_entries() {
        let (a, b) = (0.6, 0.9);
        let kernel = Kernel::gaussian();
        let instance = LineInstance::new(vec![0.0, a, a + b]).unwrap();
        let z = build_similarity_matrix(&instance, &kernel).unwrap();
        assert_eq!(z.get(0, 1), kernel.evaluate(a));
        assert_eq!(z.get(1, 2), kernel.evaluate(b));
        assert_eq!(z.get(0, 2), kernel.evaluate(a + b));
    }

    #[test]
    fn matrix_path_agrees_with_gap_sum_on_random_points() {
        let mut rng = StdRng::seed_from_u64(7);
        let coords: Vec<f64> = {
            let mut c: Vec<f64> = (0..8).map(|_| rng.gen_range(-4.0..4.0)).collect();
            c.sort_by(|a, b| a.partial_cmp(b).unwrap());
            c
        };
        let instance = LineInstance::new(coords).unwrap();
        let by_matrix = diversity_matrix(&instance, &exponential(1.0)).unwrap();
        let by_gaps = diversity_gap_sum(&instance, 1.0);
        assert!((by_matrix.value - by_gaps.value).abs() < 1e-10);
    }

    #[test]
    fn near_duplicate_points_trip_the_pivot_check() {
        let instance = LineInstance::new(vec![0.0, 1e-14, 1.0]).unwrap();
        let err = diversity_matrix(&instance, &exponential(1.0)).unwrap_err();
        assert!(matches!(err, Error::SingularMatrix { .. }));
    }

    #[test]
    fn adding_a_point_beyond_the_maximum_increases_diversity() {
        let base = LineInstance::new(vec![0.0, 0.3, 1.1]).unwrap();
        let extended = LineInstance::new(vec![0.0, 0.3, 1.1, 2.0]).unwrap();
        for beta in [0.1, 1.0, 10.0] {
            assert!(
                diversity_gap_sum(&extended, beta).value > diversity_gap_sum(&base, beta).value
            );
        }
    }

    #[test]
    fn reflection_and_translation_invariance() {
        let coords = vec![-0.7, 0.1, 0.4, 2.3];
        let instance = LineInstance::new(coords.clone()).unwrap();
        let reflected = LineInstance::new(coords.iter().rev().map(|c| -c).collect()).unwrap();
        let shifted = LineInstance::new(coords.iter().map(|c| c + 17.25).collect()).unwrap();
        let d = diversity_gap_sum(&instance, 1.7).value;
        assert!((diversity_gap_sum(&reflected, 1.7).value - d).abs() < 1e-12);
        assert!((diversity_gap_sum(&shifted, 1.7).value - d).abs() < 1e-12);
    }

    #[test]
    fn two_point_excess_formula_and_domain() {
        assert!((two_point_excess(1.0 / 3.0).unwrap() - 0.5).abs() < 1e-15);
        // r -> 1 gives vanishing excess (coincident points).
        assert!(two_point_excess(1.0 - 1e-12).unwrap() < 1e-11);
        // Against the hyperbolic form: (1 - e^{-bt}) / (1 + e^{-bt}) = tanh(bt/2).
        for (beta, t) in [(1.0f64, 0.5f64), (2.5, 1.7), (0.3, 4.0)] {
            let r = (-beta * t).exp();
            assert!((two_point_excess(r).unwrap() - (beta * t / 2.0).tanh()).abs() < 1e-15);
        }
        assert!(two_point_excess(0.0).is_err());
        assert!(two_point_excess(1.0).is_err());
        assert!(two_point_excess(1.5).is_err());
    }

    #[test]
    fn three_point_excess_additivity_for_exponential_triples() {
        for (a, b) in [(0.4f64, 0.9f64), (1.0, 1.0), (2.5, 0.2)] {
            let (u, v) = ((-a).exp(), (-b).exp());
            let w = u * v;
            let lhs = three_point_excess(u, v, w).unwrap();
            let rhs = two_point_excess(u).unwrap() + two_point_excess(v).unwrap();
            assert!((lhs - rhs).abs() < 1e-12, "a={a} b={b}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn three_point_excess_gaussian_is_not_additive() {
        // Gaussian kernel at a = b = 1.
        let u = (-1.0f64).exp();
        let w = (-4.0f64).exp();
        let lhs = three_point_excess(u, u, w).unwrap();
        let rhs = 2.0 * two_point_excess(u).unwrap();
        assert!((lhs - rhs).abs() > 1e-3);
    }

    #[test]
    fn three_point_excess_near_coincident_is_small() {
        let eps = 1e-6;
        let s = 1.0 - eps;
        // u = v = w -> 1 makes the excess O(eps).
        let e = three_point_excess(s, s, s - eps).unwrap();
        assert!(e.abs() < 10.0 * eps);
    }

    #[test]
    fn three_point_excess_degenerate_denominator() {
        // u = v = w = 1 - eps has determinant O(eps^2), far below tolerance.
        let s = 1.0 - 1e-13;
        let err = three_point_excess(s, s, s).unwrap_err();
        assert!(matches!(err, Error::DegenerateTriple { .. }));
    }

    #[test]
    fn uniform_unit_grid_value() {
        // Ten equally spaced points on [0, 1]: nine gaps of 1/9.
        let coords: Vec<f64> = (0..10).map(|i| i as f64 / 9.0).collect();
        let instance = LineInstance::new(coords).unwrap();
        let value = diversity_gap_sum(&instance, 1.0).value;
        let closed_form = 1.0 + 9.0 * (1.0f64 / 18.0).tanh();
        assert!((value - closed_form).abs() < 1e-12);
        assert!((value - 1.4994862309812373).abs() < 1e-12);
    }

    #[test]
    fn gap_sum_oracle_equivalence_across_sizes_and_scales() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..25 {
            let n = rng.gen_range(1..=50);
            let mut coords = Vec::with_capacity(n);
            let mut x = rng.gen_range(-3.0..3.0);
            coords.push(x);
            for _ in 1..n {
                x += rng.gen_range(0.01..2.0);
                coords.push(x);
            }
            let instance = LineInstance::new(coords).unwrap();
            for beta in [0.1, 1.0, 10.0] {
                let by_matrix = diversity_matrix(&instance, &exponential(beta)).unwrap();
                let by_gaps = diversity_gap_sum(&instance, beta);
                assert!(
                    (by_matrix.value - by_gaps.value).abs() <= 1e-9 * n as f64,
                    "n={n} beta={beta}: {} vs {}",
                    by_matrix.value,
                    by_gaps.value
                );
            }
        }
    }
}
