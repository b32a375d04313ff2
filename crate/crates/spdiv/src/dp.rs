//! Exact fixed-cardinality subset selection on an ordered line instance.
//!
//! Because the objective separates over consecutive gaps, the best size-j
//! subset ending at candidate i extends a best size-(j-1) subset ending at
//! some earlier candidate p:
//!
//! ```text
//! best[i][1] = 0
//! best[i][j] = max_{p < i} best[p][j-1] + tanh(beta (t_i - t_p) / 2)
//! ```
//!
//! The table has `k * n` states and examines `(k-1) n (n-1) / 2` predecessor
//! transitions; [`solve_with_stats`] exposes both counters. Transition costs
//! are computed on demand, keeping memory at `O(k n)`. A brute-force
//! enumerator over all subsets backs the recursion as an oracle on small
//! instances.

use itertools::Itertools;
use serde::Serialize;

use crate::diversity::diversity_gap_sum;
use crate::error::{Error, Result};
use crate::instance::{DiversityValue, GapVector, LineInstance};

/// Largest instance [`brute_force`] will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 22;

/// Accumulated-excess differences at or below this value count as ties.
/// Ties prefer the smaller predecessor index, and the final answer prefers
/// the lexicographically smallest index set, so results are deterministic
/// across platforms.
pub const TIE_TOLERANCE: f64 = 1e-15;

/// An index subset of a line instance together with its diversity value and
/// gap diagnostics. Indices are 1-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Selection {
    pub indices: Vec<usize>,
    pub coords: Vec<f64>,
    pub value: DiversityValue,
    pub gaps: GapVector,
    pub target_spacing: f64,
    pub max_gap_deviation: f64,
}

impl Selection {
    /// Assemble a selection from 1-based indices, recomputing the diversity
    /// of the selected coordinates as the single source of truth.
    fn from_indices(instance: &LineInstance, indices: Vec<usize>, beta: f64) -> Result<Self> {
        let selected = instance.select(&indices)?;
        let coords = selected.coords().to_vec();
        let value = diversity_gap_sum(&selected, beta);
        let gaps = selected.gaps();
        let target_spacing = gaps.span() / gaps.len() as f64;
        let max_gap_deviation = gaps
            .gaps()
            .iter()
            .map(|&g| (g - target_spacing).abs())
            .fold(0.0, f64::max);
        Ok(Selection {
            indices,
            coords,
            value,
            gaps,
            target_spacing,
            max_gap_deviation,
        })
    }
}

/// Instrumented work counters of one [`solve`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DpStats {
    pub states: u64,
    pub transitions: u64,
}

/// Closed-form state and transition counts: `k n` states and
/// `(k-1) n (n-1) / 2` examined predecessor pairs.
pub fn state_transition_counts(n: usize, k: usize) -> DpStats {
    assert!(2 <= k && k <= n, "need 2 <= k <= n, got k={k}, n={n}");
    let (n, k) = (n as u64, k as u64);
    DpStats {
        states: k * n,
        transitions: (k - 1) * n * (n - 1) / 2,
    }
}

/// Maximize gap-sum diversity over all size-k subsets of the instance.
pub fn solve(instance: &LineInstance, k: usize, beta: f64) -> Result<Selection> {
    solve_with_stats(instance, k, beta).map(|(selection, _)| selection)
}

/// [`solve`], also returning the instrumented state and transition counters.
pub fn solve_with_stats(
    instance: &LineInstance,
    k: usize,
    beta: f64,
) -> Result<(Selection, DpStats)> {
    let n = instance.len();
    check_cardinality(k, n)?;
    check_beta(beta)?;
    let coords = instance.coords();

    // Layer-major tables: entry (j, i) lives at (j-1) * n + i.
    let mut best = vec![f64::NEG_INFINITY; k * n];
    let mut parent = vec![usize::MAX; k * n];
    let mut states: u64 = 0;
    let mut transitions: u64 = 0;

    for cell in best.iter_mut().take(n) {
        *cell = 0.0;
        states += 1;
    }
    for j in 2..=k {
        let (prev_layer, layer) = ((j - 2) * n, (j - 1) * n);
        for i in 0..n {
            let mut best_value = f64::NEG_INFINITY;
            let mut best_parent = usize::MAX;
            for p in 0..i {
                transitions += 1;
                let prev = best[prev_layer + p];
                if prev == f64::NEG_INFINITY {
                    continue;
                }
                let candidate = prev + (beta * (coords[i] - coords[p]) / 2.0).tanh();
                if candidate > best_value + TIE_TOLERANCE {
                    best_value = candidate;
                    best_parent = p;
                }
            }
            best[layer + i] = best_value;
            parent[layer + i] = best_parent;
            states += 1;
        }
    }

    let last_layer = (k - 1) * n;
    let best_excess = best[last_layer..last_layer + n]
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    debug_assert!(best_excess.is_finite(), "k <= n guarantees a feasible path");

    // Reconstruct every end index within tie range and keep the
    // lexicographically smallest index set.
    let mut winner: Option<Vec<usize>> = None;
    for end in 0..n {
        if best[last_layer + end] < best_excess - TIE_TOLERANCE {
            continue;
        }
        let mut path = vec![0usize; k];
        let mut node = end;
        for j in (1..=k).rev() {
            path[j - 1] = node + 1; // 1-based
            node = parent[(j - 1) * n + node];
        }
        match &winner {
            Some(current) if current <= &path => {}
            _ => winner = Some(path),
        }
    }
    let indices = winner.expect("at least one end index attains the maximum");

    let selection = Selection::from_indices(instance, indices, beta)?;
    let recomputed = selection.value.value;
    let accumulated = 1.0 + best_excess;
    assert!(
        (recomputed - accumulated).abs() <= 1e-12,
        "table value {accumulated} disagrees with recomputed diversity {recomputed}"
    );

    let stats = DpStats { states, transitions };
    debug_assert_eq!(stats, state_transition_counts(n, k));
    Ok((selection, stats))
}

/// Exhaustive oracle: enumerate all size-k subsets in lexicographic order and
/// keep the best, so value ties resolve to the lexicographically smallest
/// index set. Guarded to `n <=` [`BRUTE_FORCE_LIMIT`].
pub fn brute_force(instance: &LineInstance, k: usize, beta: f64) -> Result<Selection> {
    let n = instance.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::InstanceTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    check_cardinality(k, n)?;
    check_beta(beta)?;
    let coords = instance.coords();

    let mut best_excess = f64::NEG_INFINITY;
    let mut best_subset: Option<Vec<usize>> = None;
    for subset in (0..n).combinations(k) {
        let excess: f64 = subset
            .windows(2)
            .map(|w| (beta * (coords[w[1]] - coords[w[0]]) / 2.0).tanh())
            .sum();
        if excess > best_excess + TIE_TOLERANCE {
            best_excess = excess;
            best_subset = Some(subset);
        }
    }
    let indices = best_subset
        .expect("k <= n guarantees at least one subset")
        .into_iter()
        .map(|i| i + 1)
        .collect();
    Selection::from_indices(instance, indices, beta)
}

fn check_cardinality(k: usize, n: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Argument(format!(
            "subset selection needs k >= 2, got {k}"
        )));
    }
    if k > n {
        return Err(Error::Argument(format!(
            "cannot select {k} points from an instance of {n}"
        )));
    }
    Ok(())
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Argument(format!(
            "beta must be a positive finite real, got {beta}"
        )));
    }
    Ok(())
}
