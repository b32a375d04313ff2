//! Ordered fronts are line instances in disguise: the accumulated
//! coordinate-wise change preserves every pairwise l1 distance, so front
//! subset selection reduces to the ordered line problem.
//!
//! Run: `cargo run --example pareto_front_reduction`

use spdiv::{detect_signs, l1_distance, reduce, solve, OrderedCurveSample};

fn main() -> spdiv::Result<()> {
    // A biobjective front on f2 = 1 - sqrt(f1), sampled at 40 points.
    let points: Vec<Vec<f64>> = (0..40)
        .map(|i| {
            let x = i as f64 / 39.0;
            vec![x, 1.0 - x.sqrt()]
        })
        .collect();

    let signs = detect_signs(&points)?;
    println!("detected directions: {signs:?}");

    let sample = OrderedCurveSample::new(points.clone())?;
    let reduction = reduce(&sample)?;
    println!(
        "reduced {} points to a line instance of length {:.6}",
        sample.len(),
        reduction.length
    );

    // Spot-check the isometry on a few pairs.
    for (i, j) in [(0, 39), (5, 20), (11, 12)] {
        let l1 = l1_distance(&points[i], &points[j]);
        let coords = reduction.instance.coords();
        let phi = (coords[j] - coords[i]).abs();
        println!("  l1(p{i}, p{j}) = {l1:.12} = |phi_{j} - phi_{i}| = {phi:.12}");
    }

    // Select 6 points, uniformly spread in accumulated objective change.
    let selection = solve(&reduction.instance, 6, 1.0)?;
    println!("\nselected candidates (index, f1, f2):");
    for &index in &selection.indices {
        let p = &points[index - 1];
        println!("  {:>2}  {:.6}  {:.6}", index, p[0], p[1]);
    }
    println!("diversity: {:.9}", selection.value.value);
    println!("max deviation from uniform l1 spacing: {:.6}", selection.max_gap_deviation);
    Ok(())
}
