//! Evaluate Solow-Polasky diversity of a point set on the line by both
//! routes: the dense inverse-matrix definition and the linear-time gap sum.
//!
//! Run: `cargo run --example evaluate_line`

use spdiv::{diversity_gap_sum, diversity_matrix, Kernel, LineInstance};

fn main() -> spdiv::Result<()> {
    let instance = LineInstance::new(vec![0.0, 0.21, 0.3, 0.65, 0.8, 1.0])?;
    let beta = 1.0;

    let by_gaps = diversity_gap_sum(&instance, beta);
    let by_matrix = diversity_matrix(&instance, &Kernel::exponential(beta)?)?;

    println!("points:        {:?}", instance.coords());
    println!("gap sum:       {:.15}", by_gaps.value);
    println!("matrix route:  {:.15}", by_matrix.value);
    println!("difference:    {:.3e}", (by_gaps.value - by_matrix.value).abs());
    println!();

    println!("per-gap contributions (tanh(beta * gap / 2)):");
    for (i, gap) in instance.gaps().gaps().iter().enumerate() {
        println!(
            "  gap {}: {:.4}  ->  {:.6}",
            i + 1,
            gap,
            (beta * gap / 2.0).tanh()
        );
    }

    // The singleton baseline is exactly 1; every gap adds its own excess.
    let singleton = LineInstance::new(vec![42.0])?;
    assert_eq!(diversity_gap_sum(&singleton, beta).value, 1.0);
    println!("\nsingleton baseline: {}", diversity_gap_sum(&singleton, beta).value);
    Ok(())
}
