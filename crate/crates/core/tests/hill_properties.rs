use abc_stability::discretization::{assemble_scalar_operator, Grid, ScalarOperatorKind};
use abc_stability::hill::{
    hill_nonnegativity_test, hill_spectrum_closed_form, poeschl_teller_levels, HillSpec,
};
use abc_stability::wave::{sech2, AbcParameters};
use faer::{Mat, Side};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dense_levels(spec: HillSpec, n: usize, half_length: f64) -> Vec<f64> {
    let grid = Grid::new(n, half_length).unwrap();
    // The parameter set only matters for the standing-wave kinds.
    let params = AbcParameters::traveling(1.0).unwrap();
    assemble_scalar_operator(ScalarOperatorKind::Generic(spec), &params, &grid)
        .unwrap()
        .symmetric_eigenvalues()
        .unwrap()
}

/// Second-order finite differences with Dirichlet ends, independent of the
/// spectral machinery.
fn finite_difference_levels(z: f64, n: usize, half_length: f64) -> Vec<f64> {
    let h = 2.0 * half_length / (n + 1) as f64;
    let x = |i: usize| -half_length + h * (i + 1) as f64;
    let m = Mat::from_fn(n, n, |i, j| {
        if i == j {
            2.0 / (h * h) - z * sech2(x(i))
        } else if i.abs_diff(j) == 1 {
            -1.0 / (h * h)
        } else {
            0.0
        }
    });
    let mut v = m.self_adjoint_eigenvalues(Side::Lower).unwrap();
    v.sort_by(f64::total_cmp);
    v
}

#[test]
fn single_bound_state_against_finite_differences() {
    assert_eq!(poeschl_teller_levels(2.0), vec![-1.0]);
    let fd = finite_difference_levels(2.0, 1200, 20.0);
    assert!((fd[0] + 1.0).abs() < 2e-4, "{}", fd[0]);
    assert!(fd[1] > -1e-3);
}

#[test]
fn three_bound_states_against_finite_differences() {
    let fd = finite_difference_levels(12.0, 1200, 20.0);
    for (got, want) in fd.iter().zip([-9.0, -4.0, -1.0]) {
        assert!((got - want).abs() < 5e-3, "{got} vs {want}");
    }
}

#[test]
fn random_specs_against_dense_eigensolve() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_917);
    let mut compared = 0;
    for _ in 0..50 {
        let spec = HillSpec::new(rng.gen_range(0.4..1.6), rng.gen_range(0.4..1.4), rng.gen_range(-2.0..10.0)).unwrap();
        let closed = hill_spectrum_closed_form(&spec);
        let edge = closed.essential_edge;
        let half_length = 40.0 / spec.lam;
        let dense = dense_levels(spec, 512, half_length);
        for (i, &level) in closed.discrete_eigenvalues.iter().enumerate() {
            if edge - level >= 0.25 {
                assert!((dense[i] - level).abs() < 1e-6, "{spec:?}: level {i} {} vs {level}", dense[i]);
                compared += 1;
            }
        }
        let margin = closed
            .discrete_eigenvalues
            .iter()
            .map(|e| e.abs())
            .fold(f64::INFINITY, f64::min);
        if margin > 1e-3 {
            let dense_negative = dense.iter().filter(|&&e| e < 0.0).count();
            assert_eq!(dense_negative, closed.negative_count, "{spec:?}");
        }
    }
    assert!(compared > 30);
}

proptest! {
    #[test]
    fn nonnegativity_matches_the_lowest_level(alpha in 0.0_f64..3.0, lam in 0.1_f64..3.0, q in -5.0_f64..20.0) {
        let spec = HillSpec::new(alpha, lam, q).unwrap();
        let slack = alpha * alpha + alpha * lam - q;
        prop_assume!(slack.abs() > 1e-9 * (1.0 + q.abs()));
        let spectrum = hill_spectrum_closed_form(&spec);
        prop_assert_eq!(hill_nonnegativity_test(&spec), spectrum.negative_count == 0);
    }

    #[test]
    fn levels_are_ordered_and_below_the_edge(alpha in 0.0_f64..3.0, lam in 0.1_f64..3.0, q in -5.0_f64..40.0) {
        let spec = HillSpec::new(alpha, lam, q).unwrap();
        let s = hill_spectrum_closed_form(&spec);
        prop_assert!(s.discrete_eigenvalues.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(s.discrete_eigenvalues.iter().all(|&e| e < s.essential_edge));
        let z = spec.coupling();
        let expected_count = if z > 0.0 { ((z + 0.25).sqrt() - 0.5).ceil() as usize } else { 0 };
        let n = s.discrete_eigenvalues.len();
        prop_assert!(n == expected_count || n + 1 == expected_count);
    }

    #[test]
    fn width_scaling_is_exact(alpha in 0.0_f64..3.0, lam in 0.1_f64..3.0, q in -5.0_f64..40.0) {
        let spec = HillSpec::new(alpha, lam, q).unwrap();
        let direct = hill_spectrum_closed_form(&spec).discrete_eigenvalues;
        let lam2 = lam * lam;
        let scaled: Vec<f64> = hill_spectrum_closed_form(&spec.rescaled())
            .discrete_eigenvalues
            .into_iter()
            .map(|e| lam2 * e)
            .collect();
        prop_assert_eq!(direct.len(), scaled.len());
        for (d, s) in direct.iter().zip(&scaled) {
            prop_assert!((d - s).abs() <= 1e-12 * lam2 * (1.0 + q.abs() / lam2 + alpha * alpha / lam2));
        }
    }
}
