//! Property tests for the structural invariants.

use proptest::prelude::*;

use spdiv::{
    brute_force, diversity_gap_sum, diversity_matrix, jensen_certificate, l1_distance, reduce,
    solve, two_point_excess, uniform_optimum, GapVector, Kernel, LineInstance,
    OrderedCurveSample,
};

fn instance_from_gaps(start: f64, gaps: &[f64]) -> LineInstance {
    let mut coords = vec![start];
    let mut x = start;
    for &g in gaps {
        x += g;
        coords.push(x);
    }
    LineInstance::new(coords).unwrap()
}

fn gap_vec(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01f64..2.0, 1..max_len)
}

proptest! {
    #[test]
    fn diversity_is_translation_and_reflection_invariant(
        gaps in gap_vec(20),
        start in -10.0f64..10.0,
        shift in -10.0f64..10.0,
        beta in 0.1f64..5.0,
    ) {
        let instance = instance_from_gaps(start, &gaps);
        let value = diversity_gap_sum(&instance, beta).value;

        let shifted = LineInstance::new(
            instance.coords().iter().map(|c| c + shift).collect()
        ).unwrap();
        prop_assert!((diversity_gap_sum(&shifted, beta).value - value).abs() <= 1e-12);

        let reflected = LineInstance::new(
            instance.coords().iter().rev().map(|c| -c).collect()
        ).unwrap();
        prop_assert!((diversity_gap_sum(&reflected, beta).value - value).abs() <= 1e-12);
    }

    #[test]
    fn appending_a_farther_point_increases_diversity(
        gaps in gap_vec(15),
        extra in 0.01f64..3.0,
        beta in 0.1f64..5.0,
    ) {
        let instance = instance_from_gaps(0.0, &gaps);
        let mut coords = instance.coords().to_vec();
        coords.push(coords.last().unwrap() + extra);
        let extended = LineInstance::new(coords).unwrap();
        prop_assert!(
            diversity_gap_sum(&extended, beta).value > diversity_gap_sum(&instance, beta).value
        );
    }

    #[test]
    fn matrix_route_agrees_with_gap_sum(
        gaps in gap_vec(12),
        beta in 0.1f64..5.0,
    ) {
        let instance = instance_from_gaps(-1.0, &gaps);
        let kernel = Kernel::exponential(beta).unwrap();
        let dense = diversity_matrix(&instance, &kernel).unwrap().value;
        let fast = diversity_gap_sum(&instance, beta).value;
        prop_assert!((dense - fast).abs() <= 1e-9 * instance.len() as f64);
    }

    #[test]
    fn jensen_bound_holds_with_equality_only_at_uniform(
        gaps in gap_vec(25),
        beta in 0.1f64..5.0,
    ) {
        let vector = GapVector::from_gaps(gaps).unwrap();
        let cert = jensen_certificate(&vector, beta);
        prop_assert!(cert.slack >= -1e-12);
        if cert.slack.abs() <= 1e-10 {
            prop_assert!(cert.tight);
        }
    }

    #[test]
    fn two_point_excess_matches_the_hyperbolic_form(
        t in 0.01f64..20.0,
        beta in 0.1f64..5.0,
    ) {
        let r = (-beta * t).exp();
        prop_assume!(r > 0.0 && r < 1.0);
        let excess = two_point_excess(r).unwrap();
        prop_assert!((excess - (beta * t / 2.0).tanh()).abs() <= 1e-12);
    }

    #[test]
    fn uniform_optimum_value_matches_its_own_points(
        k in 2usize..30,
        lo in -5.0f64..5.0,
        length in 0.1f64..10.0,
        beta in 0.1f64..5.0,
    ) {
        let optimum = uniform_optimum(k, lo, lo + length, beta).unwrap();
        let instance = LineInstance::new(optimum.points.clone()).unwrap();
        prop_assert!(
            (diversity_gap_sum(&instance, beta).value - optimum.value).abs() <= 1e-12
        );
    }

    #[test]
    fn full_span_rescaling_dominates(
        gaps in gap_vec(15),
        margin in 0.05f64..2.0,
        beta in 0.1f64..5.0,
    ) {
        // An instance strictly inside [lo, hi] loses to its rescaled copy
        // spanning the whole interval with the same gap ratios.
        let instance = instance_from_gaps(0.0, &gaps);
        let span = instance.span();
        let scale = (span + margin) / span;
        let rescaled = LineInstance::new(
            instance.coords().iter().map(|c| c * scale).collect()
        ).unwrap();
        prop_assert!(
            diversity_gap_sum(&rescaled, beta).value > diversity_gap_sum(&instance, beta).value
        );
    }

    #[test]
    fn reduction_preserves_pairwise_l1_distances(
        steps in (1usize..=4).prop_flat_map(|dims| {
            prop::collection::vec(prop::collection::vec(1e-4f64..0.5, dims..=dims), 1..30)
        }),
        flips in prop::collection::vec(any::<bool>(), 4),
    ) {
        let dims = steps[0].len();
        let signs: Vec<f64> = (0..dims).map(|r| if flips[r] { -1.0 } else { 1.0 }).collect();
        let mut point = vec![0.0; dims];
        let mut points = vec![point.clone()];
        for step in &steps {
            for r in 0..dims {
                point[r] += signs[r] * step[r];
            }
            points.push(point.clone());
        }
        let sample = OrderedCurveSample::new(points.clone()).unwrap();
        let reduction = reduce(&sample).unwrap();
        let coords = reduction.instance.coords();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let l1 = l1_distance(&points[i], &points[j]);
                let phi = (coords[j] - coords[i]).abs();
                prop_assert!((l1 - phi).abs() <= 1e-10 * l1);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn dp_equals_enumeration(
        gaps in prop::collection::vec(0.02f64..1.0, 1..10),
        k_seed in any::<u64>(),
    ) {
        let instance = instance_from_gaps(0.0, &gaps);
        let n = instance.len();
        prop_assume!(n >= 2);
        let k = 2 + (k_seed as usize) % (n - 1);
        let by_dp = solve(&instance, k, 1.0).unwrap();
        let by_enum = brute_force(&instance, k, 1.0).unwrap();
        prop_assert!((by_dp.value.value - by_enum.value.value).abs() <= 1e-12);
        prop_assert_eq!(by_dp.indices, by_enum.indices);
    }
}
