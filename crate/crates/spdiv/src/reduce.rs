//! Reduction of ordered l1 curves to line instances.
//!
//! A curve sample is "ordered" when every coordinate moves monotonically
//! along it. Picking per-coordinate signs that make each coordinate
//! nondecreasing, the scalar coordinate
//!
//! ```text
//! phi_i = sum_r sigma_r (p_i[r] - p_0[r])
//! ```
//!
//! preserves all pairwise l1 distances, so the curve is a line interval in
//! disguise and every line result applies verbatim. Biobjective Pareto
//! fronts (f1 up, f2 down) are the motivating case.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::LineInstance;

/// Adjacent moves against a coordinate's direction are tolerated as ties up
/// to this fraction of the coordinate's range; anything larger is an
/// ordering error. The value is sized to absorb the rounding that published
/// benchmark coordinates carry (interval constants printed to 10 digits
/// perturb adjacent values by up to ~1e-9), while still failing loudly on
/// genuinely unordered data.
pub const MONOTONE_TIE_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Base relative tolerance of the isometry self-check run at reduction time.
/// Each coordinate additionally gets an allowance of twice its monotonicity
/// tie tolerance, since a tolerated tie of size eps can move the l1 distance
/// and the scalar difference apart by 2 eps.
pub const ISOMETRY_RELATIVE_TOLERANCE: f64 = 1e-10;

/// At most this many point pairs are checked by the isometry self-check;
/// smaller samples are checked exhaustively.
pub const ISOMETRY_SAMPLE_PAIRS: usize = 10_000;

const ISOMETRY_SAMPLE_SEED: u64 = 0x5d1f_11aa;

/// Monotonicity direction of one coordinate along the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

impl Direction {
    /// The sign sigma_r in {+1, -1} applied to the coordinate.
    pub fn sign(self) -> f64 {
        match self {
            Direction::NonDecreasing => 1.0,
            Direction::NonIncreasing => -1.0,
        }
    }
}

/// Per-coordinate directions of a sample already in curve order. Constant
/// coordinates count as nondecreasing. A coordinate that moves both ways by
/// more than the tie tolerance fails with [`Error::NotOrdered`] naming the
/// coordinate and the violating adjacent pair (both 1-based).
pub fn detect_signs(points: &[Vec<f64>]) -> Result<Vec<Direction>> {
    let dims = check_rectangular(points)?;
    let mut signs = Vec::with_capacity(dims);
    for r in 0..dims {
        let range = coordinate_range(points, r);
        let tolerance = MONOTONE_TIE_RELATIVE_TOLERANCE * range;
        let mut direction: Option<(Direction, usize)> = None;
        for i in 0..points.len() - 1 {
            let step = points[i + 1][r] - points[i][r];
            let observed = if step > tolerance {
                Direction::NonDecreasing
            } else if step < -tolerance {
                Direction::NonIncreasing
            } else {
                continue; // tie
            };
            match direction {
                None => direction = Some((observed, i)),
                Some((established, _)) if established == observed => {}
                Some(_) => {
                    return Err(Error::NotOrdered {
                        coordinate: r + 1,
                        first: i + 1,
                        second: i + 2,
                    });
                }
            }
        }
        signs.push(direction.map_or(Direction::NonDecreasing, |(d, _)| d));
    }
    Ok(signs)
}

/// A finite sample of an ordered curve in objective space, held in curve
/// order together with its detected coordinate directions.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedCurveSample {
    points: Vec<Vec<f64>>,
    sigma: Vec<Direction>,
    order: Vec<usize>, // curve position -> original input index (0-based)
}

impl OrderedCurveSample {
    /// Take the input order as the curve order. Ambiguous orders fail loudly
    /// through [`detect_signs`]; use [`OrderedCurveSample::sorted_by_first_varying`]
    /// to opt into sorting first.
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let sigma = detect_signs(&points)?;
        let order = (0..points.len()).collect();
        Ok(OrderedCurveSample {
            points,
            sigma,
            order,
        })
    }

    /// Opt-in ingestion helper: stable-sort by the first coordinate that
    /// actually varies, then treat the sorted order as the curve order.
    pub fn sorted_by_first_varying(points: Vec<Vec<f64>>) -> Result<Self> {
        let dims = check_rectangular(&points)?;
        let sort_key = (0..dims)
            .find(|&r| coordinate_range(&points, r) > 0.0)
            .unwrap_or(0);
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| {
            points[a][sort_key]
                .partial_cmp(&points[b][sort_key])
                .expect("finite coordinates")
        });
        let sorted: Vec<Vec<f64>> = order.iter().map(|&i| points[i].clone()).collect();
        let sigma = detect_signs(&sorted)?;
        Ok(OrderedCurveSample {
            points: sorted,
            sigma,
            order,
        })
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn sigma(&self) -> &[Direction] {
        &self.sigma
    }

    /// Original input index (0-based) of each curve position.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dims(&self) -> usize {
        self.sigma.len()
    }
}

/// The induced line instance of an ordered curve sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalarReduction {
    /// Induced coordinates, anchored at 0 for the first sample and strictly
    /// increasing after collapsing zero-l1 runs.
    pub instance: LineInstance,
    /// Endpoint-to-endpoint l1 length `sum_r |last[r] - first[r]|`.
    pub length: f64,
    /// 1-based original sample index behind each instance coordinate.
    pub index_map: Vec<usize>,
    /// 1-based original sample indices dropped as zero-l1 duplicates.
    pub collapsed: Vec<usize>,
    /// Curve positions (0-based) behind each instance coordinate.
    #[serde(skip)]
    pub kept_positions: Vec<usize>,
}

/// Map an ordered sample to its induced line coordinates, collapsing
/// zero-l1 runs onto their first sample. The pairwise-distance identity is
/// re-verified on up to [`ISOMETRY_SAMPLE_PAIRS`] pairs before returning.
pub fn reduce(sample: &OrderedCurveSample) -> Result<ScalarReduction> {
    let points = sample.points();
    let n = points.len();
    let dims = sample.dims();
    let first = &points[0];

    let mut scalar = Vec::with_capacity(n);
    for point in points {
        let mut phi = 0.0;
        for r in 0..dims {
            phi += sample.sigma()[r].sign() * (point[r] - first[r]);
        }
        scalar.push(phi);
    }

    // Zero-l1 runs collapse onto their first member. Kept coordinates are
    // strictly increasing by construction.
    let mut kept_positions = vec![0usize];
    let mut collapsed = Vec::new();
    for i in 1..n {
        if scalar[i] > scalar[*kept_positions.last().unwrap()] {
            kept_positions.push(i);
        } else {
            collapsed.push(sample.order()[i] + 1);
        }
    }

    let coords: Vec<f64> = kept_positions.iter().map(|&i| scalar[i]).collect();
    let index_map: Vec<usize> = kept_positions
        .iter()
        .map(|&i| sample.order()[i] + 1)
        .collect();
    let length: f64 = (0..dims)
        .map(|r| (points[n - 1][r] - points[0][r]).abs())
        .sum();

    verify_isometry(sample, &kept_positions, &scalar)?;

    Ok(ScalarReduction {
        instance: LineInstance::new(coords)?,
        length,
        index_map,
        collapsed,
        kept_positions,
    })
}

/// The l1 (Manhattan) distance between two points of equal dimension.
pub fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

fn verify_isometry(
    sample: &OrderedCurveSample,
    kept_positions: &[usize],
    scalar: &[f64],
) -> Result<()> {
    let points = sample.points();
    let n = kept_positions.len();
    if n < 2 {
        return Ok(());
    }
    // A tolerated per-coordinate tie of size eps_r can displace l1 distance
    // and scalar difference by 2 eps_r each.
    let tie_allowance: f64 = (0..sample.dims())
        .map(|r| 2.0 * MONOTONE_TIE_RELATIVE_TOLERANCE * coordinate_range(points, r))
        .sum();

    let check = |a: usize, b: usize| -> Result<()> {
        let (i, j) = (kept_positions[a], kept_positions[b]);
        let l1 = l1_distance(&points[i], &points[j]);
        let phi = (scalar[i] - scalar[j]).abs();
        if (l1 - phi).abs() > ISOMETRY_RELATIVE_TOLERANCE * l1 + tie_allowance {
            return Err(Error::IsometryViolation {
                first: sample.order()[i] + 1,
                second: sample.order()[j] + 1,
                l1,
                scalar: phi,
            });
        }
        Ok(())
    };

    let total_pairs = n * (n - 1) / 2;
    if total_pairs <= ISOMETRY_SAMPLE_PAIRS {
        for a in 0..n {
            for b in (a + 1)..n {
                check(a, b)?;
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(ISOMETRY_SAMPLE_SEED);
        let mut checked = 0;
        while checked < ISOMETRY_SAMPLE_PAIRS {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a == b {
                continue;
            }
            check(a.min(b), a.max(b))?;
            checked += 1;
        }
    }
    Ok(())
}

fn check_rectangular(points: &[Vec<f64>]) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::Argument("a curve sample needs at least one point".into()));
    }
    let dims = points[0].len();
    if dims == 0 {
        return Err(Error::Argument("curve points need at least one coordinate".into()));
    }
    for (i, point) in points.iter().enumerate() {
        if point.len() != dims {
            return Err(Error::Argument(format!(
                "point {} has {} coordinates, expected {dims}",
                i + 1,
                point.len()
            )));
        }
        for (r, &value) in point.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::Argument(format!(
                    "coordinate {} of point {} is not finite: {value}",
                    r + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(dims)
}

fn coordinate_range(points: &[Vec<f64>], r: usize) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for point in points {
        lo = lo.min(point[r]);
        hi = hi.max(point[r]);
    }
    hi - lo
}
