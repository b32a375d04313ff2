//! Subset selection on the disconnected ZDT3 front. The induced line
//! coordinate jumps across component boundaries, and the solver balances
//! gaps around those jumps exactly.
//!
//! Run: `cargo run --example disconnected_front`

use spdiv::{generate_zdt3_front, reduce, solve_with_stats, uniform_optimum};

fn main() -> spdiv::Result<()> {
    let sample = generate_zdt3_front(20);
    let reduction = reduce(&sample)?;
    println!(
        "ZDT3 front: {} candidates on 5 components, induced length {:.6}",
        sample.len(),
        reduction.length
    );

    let k = 20;
    let (selection, stats) = solve_with_stats(&reduction.instance, k, 1.0)?;
    println!("\nbest {k}-point subset (beta = 1):");
    println!("  indices:        {:?}", selection.indices);
    println!("  diversity:      {:.9}", selection.value.value);
    println!("  target spacing: {:.9}", selection.target_spacing);
    println!("  max deviation:  {:.9}", selection.max_gap_deviation);
    println!("  work:           {} states, {} transitions", stats.states, stats.transitions);

    // The continuous reference on an interval of the same induced length.
    let reference = uniform_optimum(k, 0.0, reduction.instance.span(), 1.0)?;
    println!(
        "\ncontinuous reference 1 + {} tanh(L / {}) = {:.9}",
        k - 1,
        2 * (k - 1),
        reference.value
    );
    println!(
        "shortfall of the discrete optimum: {:.3e}",
        reference.value - selection.value.value
    );

    println!("\nselected objective vectors:");
    for &index in &selection.indices {
        let p = &sample.points()[index - 1];
        println!("  {:>3}  ({:.9}, {:.9})", index, p[0], p[1]);
    }
    Ok(())
}
