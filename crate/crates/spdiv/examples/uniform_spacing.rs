//! The continuous optimum on an interval is the equally spaced grid, and the
//! Jensen certificate quantifies how far any other gap vector falls short.
//!
//! Run: `cargo run --example uniform_spacing`

use spdiv::{
    gap_contribution_second_derivative, jensen_certificate, uniform_optimum, GapVector,
};

fn main() -> spdiv::Result<()> {
    // Ten points on [-1, 1] at scale beta = 1.
    let optimum = uniform_optimum(10, -1.0, 1.0, 1.0)?;
    println!("uniform 10-point grid on [-1, 1]:");
    println!("  points: {:?}", optimum.points);
    println!("  value:  {:.9}  (= 1 + 9 tanh(1/9))", optimum.value);

    // Perturb one gap while keeping the span: the certificate shows strict slack.
    let uniform = GapVector::from_gaps(vec![2.0 / 9.0; 9])?;
    let mut shifted = vec![2.0 / 9.0; 9];
    shifted[0] += 0.05;
    shifted[1] -= 0.05;
    let perturbed = GapVector::from_gaps(shifted)?;

    for (label, gaps) in [("uniform", &uniform), ("perturbed", &perturbed)] {
        let cert = jensen_certificate(gaps, 1.0);
        println!(
            "\n{label}: lhs = {:.12}, rhs = {:.12}, slack = {:.3e}, tight = {}",
            cert.lhs, cert.rhs, cert.slack, cert.tight
        );
    }

    // The mechanism behind uniqueness: strictly concave gap contributions.
    println!("\nsecond derivative of the gap contribution (beta = 1):");
    for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
        println!("  f''({t}) = {:.6}", gap_contribution_second_derivative(t, 1.0));
    }
    Ok(())
}
