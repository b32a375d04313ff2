//! # spdiv
//!
//! Solow-Polasky diversity — the inverse-matrix quantity `1' Z^{-1} 1`,
//! identical to finite metric-space magnitude under the exponential kernel —
//! on ordered one-dimensional data.
//!
//! For strictly increasing points on a line with `K(t) = exp(-beta t)`, the
//! diversity collapses to a sum over consecutive gaps,
//!
//! ```text
//! D = 1 + sum_i tanh(beta * delta_i / 2),
//! ```
//!
//! which makes three things cheap and exact:
//!
//! * **Evaluation** in linear time, with the dense inverse-matrix route kept
//!   around as an independent cross-check ([`diversity`]).
//! * **Continuous optima**: the unique diversity maximizer among k-point
//!   subsets of an interval is the equally spaced grid, by strict concavity
//!   of the gap contribution ([`line_optimal`]).
//! * **Exact discrete selection**: picking the best k of n ordered
//!   candidates is a small dynamic program over gap transitions ([`dp`]).
//!
//! Curves whose coordinates are all monotone — biobjective Pareto fronts in
//! particular — are line instances in disguise: accumulated coordinate-wise
//! change preserves every pairwise l1 distance ([`mod@reduce`]), so the same
//! machinery covers front subset selection. The exponential kernel is not
//! an arbitrary choice: adjacent-gap additivity of the excess diversity
//! forces it among normalized non-increasing kernels, and [`characterize`]
//! certifies that numerically for any kernel you hand it.
//!
//! ## Quick start
//!
//! ```rust
//! use spdiv::{diversity_gap_sum, diversity_matrix, solve, Kernel, LineInstance};
//!
//! let instance = LineInstance::new(vec![0.0, 0.21, 0.3, 0.65, 0.8, 1.0])?;
//!
//! // Both computation routes agree.
//! let fast = diversity_gap_sum(&instance, 1.0);
//! let dense = diversity_matrix(&instance, &Kernel::exponential(1.0)?)?;
//! assert!((fast.value - dense.value).abs() < 1e-10);
//!
//! // Best 4 of 6 candidates, exactly.
//! let selection = solve(&instance, 4, 1.0)?;
//! assert_eq!(selection.indices.first(), Some(&1));
//! assert_eq!(selection.indices.last(), Some(&6));
//! # Ok::<(), spdiv::Error>(())
//! ```
//!
//! The `examples/` directory has one runnable example per capability; the
//! `spdiv` binary exposes the same operations as subcommands (`evaluate`,
//! `optimize`, `reduce`, `certify-kernel`, `reproduce`).

#![forbid(unsafe_code)]

pub mod characterize;
pub mod cli;
pub mod diversity;
pub mod dp;
mod error;
pub mod fronts;
pub mod instance;
pub mod io;
pub mod kernel;
pub mod line_optimal;
pub mod reduce;

pub use characterize::{
    additivity_residual, cauchy_linearity_check, certify_kernel, default_probes,
    factorization_residual, fit_beta_from_unit_value, second_branch_gap, AdditivityReport,
    FactorizationResidual, Verdict,
};
pub use diversity::{
    build_similarity_matrix, diversity_gap_sum, diversity_matrix, three_point_excess,
    two_point_excess, SimilarityMatrix,
};
pub use dp::{brute_force, solve, solve_with_stats, state_transition_counts, DpStats, Selection};
pub use error::{Error, Result};
pub use fronts::{generate_parabola_front, generate_zdt3_front, zdt3_f2, ZDT3_COMPONENTS};
pub use instance::{DiversityValue, GapVector, LineInstance};
pub use kernel::Kernel;
pub use line_optimal::{
    gap_contribution, gap_contribution_second_derivative, jensen_certificate, uniform_optimum,
    ContinuousOptimum, JensenCertificate,
};
pub use reduce::{detect_signs, l1_distance, reduce, Direction, OrderedCurveSample, ScalarReduction};
