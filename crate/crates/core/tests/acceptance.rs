//! Acceptance suite. Runs every criterion, prints one `[PASS]`/`[FAIL]` line
//! per criterion and exits non-zero if any criterion fails.
//!
//! Run with `cargo test -p abc-stability --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use abc_stability::discretization::{
    assemble_scalar_operator, standing_profile, Grid, ScalarOperatorKind,
};
use abc_stability::hill::{case1_diagonal_reduction, hill_spectrum_closed_form};
use abc_stability::index::{
    case1_index_closed_form, case2_index, closed_form_inner_products, critical_ratio_bisection,
    general_index_numeric, kdv_index_numeric, standing_phi_a,
};
use abc_stability::spectrum::{
    combine_verdict, discrete_spectrum_tilde_l, essential_spectrum_gap, symbol_determinant, unstable_modes_jl,
    DEFAULT_INDEX_TOL,
};
use abc_stability::wave::{
    resolve_wave_parameters, sample_wave, traveling_residual, AbcParameters, SampledWave, SignBranch, WaveSpec,
};
use abc_stability::{Result, StabilityError};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn traveling(b: f64, eta0: f64, sign: SignBranch) -> (AbcParameters, WaveSpec) {
    let p = AbcParameters::traveling(b).unwrap();
    let s = resolve_wave_parameters(&p, eta0, sign).unwrap();
    (p, s)
}

fn standing(z: f64) -> (AbcParameters, WaveSpec) {
    let p = AbcParameters::standing(-1.0, z).unwrap();
    let s = resolve_wave_parameters(&p, -1.5, SignBranch::Plus).unwrap();
    (p, s)
}

fn sampled(spec: &WaveSpec, n: usize, half_length: f64) -> SampledWave {
    let g = Grid::new(n, half_length).unwrap();
    sample_wave(spec, &g).unwrap()
}

fn ac1_wave_exactness() -> Result<Outcome> {
    let start = Instant::now();
    let mut sets = Vec::new();
    for (i, &b) in [0.5, 1.0, 2.0].iter().enumerate() {
        for (j, &eta0) in [-2.0, -1.5, -1.0, -0.5, -0.1].iter().enumerate() {
            let sign = if (i + j) % 2 == 0 { SignBranch::Plus } else { SignBranch::Minus };
            sets.push(traveling(b, eta0, sign));
        }
    }
    for b in [0.5, 1.0, 4.0, 8.0, 10.0] {
        sets.push(standing(b));
    }
    let mut worst = 0.0_f64;
    for (p, s) in &sets {
        let wave = sampled(s, 512, s.min_half_length());
        let (r1, r2) = traveling_residual(&wave, s, p);
        worst = worst.max(r1).max(r2);
    }
    let elapsed = start.elapsed();
    Ok(outcome(
        sets.len() == 20 && worst < 1e-9 && elapsed < Duration::from_secs(5),
        format!("{} sets, max residual {worst:.2e}, {:.2?}", sets.len(), elapsed),
    ))
}

fn ac2_first_reduced_spectrum() -> Result<Outcome> {
    let mut pass = true;
    let mut details = Vec::new();
    for b in [0.5, 1.0, 2.0] {
        let red = case1_diagonal_reduction(-1.0, b)?;
        let closed = hill_spectrum_closed_form(&red.first).discrete_eigenvalues;
        let expect = [-5.0 / (4.0 * b), 0.0, 3.0 / (4.0 * b)];
        let closed_ok = closed.len() == 3
            && closed[1] == 0.0
            && closed.iter().zip(expect).all(|(g, w)| (g - w).abs() <= 4.0 * f64::EPSILON * w.abs());
        let grid = Grid::new(1024, 40.0 / red.first.lam)?;
        let op = assemble_scalar_operator(ScalarOperatorKind::Generic(red.first), &AbcParameters::traveling(b)?, &grid)?;
        let dense = op.symmetric_eigenvalues()?;
        let dense_err = dense.iter().zip(expect).map(|(g, w)| (g - w).abs()).fold(0.0, f64::max);
        pass &= closed_ok && dense_err < 1e-6;
        details.push(format!("b={b}: lambda1={:e}, dense err {dense_err:.1e}", closed[1]));
    }
    Ok(outcome(pass, details.join("; ")))
}

fn ac3_inertia() -> Result<Outcome> {
    let mut cases: Vec<(String, AbcParameters, WaveSpec)> = [-2.0, -1.5, -1.0, -0.5]
        .iter()
        .map(|&eta0| {
            let (p, s) = traveling(1.0, eta0, SignBranch::Plus);
            (format!("eta0={eta0}"), p, s)
        })
        .collect();
    for z in [0.5, 1.0, 4.0] {
        let (p, s) = standing(z);
        cases.push((format!("z={z}"), p, s));
    }
    let mut pass = true;
    let mut bad = Vec::new();
    for (label, p, s) in &cases {
        let mut counts = Vec::new();
        for n in [512, 1024] {
            let wave = sampled(s, n, s.min_half_length());
            let r = discrete_spectrum_tilde_l(p, s, &wave, Some(1e-6))?;
            counts.push((r.negative_count, r.zero_modes));
        }
        let ok = counts.iter().all(|&c| c == (1, 1)) && counts[0] == counts[1];
        if !ok {
            bad.push(format!("{label}: {counts:?}"));
        }
        pass &= ok;
    }
    Ok(outcome(
        pass,
        if bad.is_empty() {
            format!("{} waves: n=1, one zero mode at N=512 and N=1024", cases.len())
        } else {
            bad.join("; ")
        },
    ))
}

fn ac4_inner_product_table() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for a in [-0.5, -1.0, -2.0] {
        let t = closed_form_inner_products(a)?;
        let grid = Grid::new(1024, 80.0 * (-a).sqrt())?;
        let phi = standing_profile(a, &grid);
        let phipp = grid.differentiate(&phi, 2)?;
        let phi_a = standing_phi_a(a, &grid);
        let pairs = [
            (grid.inner_product(&phi_a, &phi)?, t.phi_a_phi),
            (grid.inner_product(&phi, &phipp)?, t.phi_phipp),
            (grid.inner_product(&phi_a, &phipp)?, t.phi_a_phipp),
            (grid.inner_product(&phi, &phi)?, t.phi_phi),
            (grid.inner_product(&phipp, &phipp)?, t.phipp_phipp),
        ];
        for (q, c) in pairs {
            worst = worst.max(rel_err(q, c));
        }
    }
    Ok(outcome(worst < 1e-8, format!("max relative error {worst:.2e}")))
}

/// The closed form as stated: `sqrt(-a)(-9/2 - 12z/5 + 3z^2/10)`.
fn stated_kdv_form(z: f64) -> f64 {
    -4.5 - 2.4 * z + 0.3 * z * z
}

/// The bound polynomials as stated for `3I / sqrt(-a)`.
fn stated_bounds(z: f64) -> (f64, f64) {
    let k = 2.0 / 45.0;
    (
        k * (56.0 * z * z - 409.0 * z - 754.0),
        k * (65.0 * z * z - 427.0 * z - 745.0),
    )
}

fn standing_grid() -> Grid {
    Grid::new(1024, 80.0).unwrap()
}

fn ac5_kdv_part() -> Result<Outcome> {
    let grid = standing_grid();
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for z in [0.1, 1.0, 5.0, 10.0] {
        let numeric = kdv_index_numeric(-1.0, z, &grid)?;
        let stated = stated_kdv_form(z);
        worst = worst.max(rel_err(numeric, stated));
        details.push(format!("z={z}: {numeric:.6} vs {stated:.6}"));
    }
    Ok(outcome(worst < 1e-6, format!("{} (max rel {worst:.2e})", details.join(", "))))
}

fn ac6_coincidence() -> Result<Outcome> {
    let r = case2_index(-1.0, 1.0, &standing_grid())?;
    let three_i = 3.0 * r.index_value;
    let target = 2.0 / 45.0 * -1107.0;
    let (lo, hi) = stated_bounds(1.0);
    let pass = (three_i - target).abs() < 1e-4 && (lo - target).abs() < 1e-12 && (hi - target).abs() < 1e-12;
    Ok(outcome(
        pass,
        format!("3I = {three_i:.6}, target {target:.6}, stated bounds ({lo:.6}, {hi:.6})"),
    ))
}

fn ac7_sandwich() -> Result<Outcome> {
    let grid = standing_grid();
    let mut outside = Vec::new();
    for i in 0..30 {
        let z = 0.1 + (12.0 - 0.1) * i as f64 / 29.0;
        let three_i = 3.0 * case2_index(-1.0, z, &grid)?.index_value;
        let (lo, hi) = stated_bounds(z);
        if three_i < lo - 1e-6 || three_i > hi + 1e-6 {
            outside.push(format!("z={z:.3}: {three_i:.3} not in [{lo:.3}, {hi:.3}]"));
        }
    }
    let detail = match outside.len() {
        0 => "all 30 points inside".to_string(),
        n => format!("{n}/30 points outside, e.g. {}", outside[0]),
    };
    Ok(outcome(outside.is_empty(), detail))
}

fn ac8_threshold() -> Result<Outcome> {
    let start = Instant::now();
    let lo = (427.0 + 3.0 * 41_781.0_f64.sqrt()) / 130.0;
    let hi = (409.0 + 3.0 * 37_353.0_f64.sqrt()) / 112.0;
    let result = critical_ratio_bisection(8.0, 8.9, 1e-3, &standing_grid());
    let elapsed = start.elapsed();
    Ok(match result {
        Ok(r) => outcome(
            r.z_star > lo && r.z_star < hi && r.bracket.1 - r.bracket.0 < 1e-3 && elapsed < Duration::from_secs(120),
            format!("z* = {:.5} in ({lo:.5}, {hi:.5})?, {elapsed:.2?}", r.z_star),
        ),
        Err(e @ StabilityError::NoSignChange { .. }) => outcome(false, format!("{e}; {elapsed:.2?}")),
        Err(e) => return Err(e),
    })
}

fn ac9_case1_index() -> Result<Outcome> {
    let mut all_negative = true;
    let mut worst = 0.0_f64;
    for i in 1..=20 {
        let eta0 = -2.25 * i as f64 / 21.0;
        let sign = if i % 2 == 0 { SignBranch::Plus } else { SignBranch::Minus };
        let closed = case1_index_closed_form(eta0, 1.0, sign)?;
        all_negative &= closed < 0.0;
        let (p, s) = traveling(1.0, eta0, sign);
        let wave = sampled(&s, 512, s.min_half_length());
        let numeric = general_index_numeric(&p, &s, &wave)?;
        worst = worst.max(rel_err(numeric, closed));
    }
    Ok(outcome(
        all_negative && worst < 1e-4,
        format!("d(w) < 0 at all 20 points: {all_negative}; max rel mismatch {worst:.2e}"),
    ))
}

fn ac10_direct_spectra() -> Result<Outcome> {
    let (p1, s1) = traveling(1.0, -1.0, SignBranch::Plus);
    let w1 = sampled(&s1, 512, s1.min_half_length());
    let m1 = unstable_modes_jl(&p1, &s1, &w1, 1e-6)?.max_real_part.unwrap();

    let (p2, s2) = standing(1.0);
    let w2 = sampled(&s2, 512, s2.min_half_length());
    let m2 = unstable_modes_jl(&p2, &s2, &w2, 1e-6)?.max_real_part.unwrap();

    let (p3, s3) = standing(12.0);
    let w3 = sampled(&s3, 1024, 200.0);
    let r3 = unstable_modes_jl(&p3, &s3, &w3, 1e-6)?;
    let real_growth = match &r3.eigenvalues {
        abc_stability::spectrum::Eigenvalues::Complex(v) => v
            .iter()
            .filter(|e| e[1].abs() < 1e-6)
            .map(|e| e[0])
            .fold(f64::NEG_INFINITY, f64::max),
        abc_stability::spectrum::Eigenvalues::Real(_) => f64::NAN,
    };
    Ok(outcome(
        m1 < 1e-6 && m2 < 1e-6 && real_growth > 1e-3,
        format!("max Re: eta0=-1 {m1:.1e}, z=1 {m2:.1e}; z=12 real eigenvalue {real_growth:.4e}"),
    ))
}

fn ac11_parity() -> Result<Outcome> {
    let stable = (0..10).map(|i| 0.5 + 8.0 * i as f64 / 9.0);
    let unstable = (0..10).map(|i| 13.0 + 17.0 * i as f64 / 9.0);
    let index_grid = standing_grid();
    let mut mismatches = Vec::new();
    let (mut n_stable, mut n_unstable) = (0, 0);
    for z in stable.chain(unstable) {
        let (p, s) = standing(z);
        let wave = sampled(&s, 600, 120.0);
        let tilde = discrete_spectrum_tilde_l(&p, &s, &wave, None)?;
        let index = case2_index(-1.0, z, &index_grid)?.index_value;
        let direct = unstable_modes_jl(&p, &s, &wave, 1e-6)?.unstable_count.unwrap();
        let (_, parity_rhs, _) = combine_verdict(tilde.negative_count, index, DEFAULT_INDEX_TOL, direct);
        if direct == 0 {
            n_stable += 1;
        } else {
            n_unstable += 1;
        }
        if direct % 2 != parity_rhs {
            mismatches.push(format!("z={z:.2}: direct {direct}, rhs {parity_rhs}"));
        }
    }
    Ok(outcome(
        mismatches.is_empty() && n_stable > 0 && n_unstable > 0,
        format!("{n_stable} stable, {n_unstable} unstable points; mismatches: {mismatches:?}"),
    ))
}

fn ac12_essential_gap() -> Result<Outcome> {
    let mut min_gap = f64::INFINITY;
    let mut points: Vec<(AbcParameters, WaveSpec)> = Vec::new();
    for b in [0.5, 1.0, 2.0] {
        for i in 1..=10 {
            points.push(traveling(b, -2.25 * i as f64 / 11.0, SignBranch::Plus));
        }
    }
    for z in [0.5, 1.0, 4.0, 8.0, 10.0, 12.0] {
        points.push(standing(z));
    }
    for (p, s) in &points {
        let grid = Grid::new(512, s.min_half_length())?;
        min_gap = min_gap.min(essential_spectrum_gap(p, s, &grid.wavenumbers)?);
    }
    let (p, s) = traveling(1.0, -1.0, SignBranch::Plus);
    let grid = Grid::new(512, s.min_half_length())?;
    let w2 = s.w * s.w;
    let det_err = grid
        .wavenumbers
        .iter()
        .map(|&xi| (symbol_determinant(&p, s.w, xi) - (1.0 - w2) * (1.0 + xi * xi).powi(2)).abs())
        .fold(0.0, f64::max);
    Ok(outcome(
        min_gap > 0.0 && det_err < 1e-10 && (s.w - 1.0 / 6.0_f64.sqrt()).abs() < 1e-15,
        format!("{} points, min kappa {min_gap:.4}, factorization error {det_err:.1e}", points.len()),
    ))
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC-1 wave exactness", ac1_wave_exactness),
        ("AC-2 reduced Hill spectrum", ac2_first_reduced_spectrum),
        ("AC-3 inertia of smoothed linearization", ac3_inertia),
        ("AC-4 inner-product table", ac4_inner_product_table),
        ("AC-5 KdV part closed form", ac5_kdv_part),
        ("AC-6 bound coincidence at z=1", ac6_coincidence),
        ("AC-7 bound sandwich", ac7_sandwich),
        ("AC-8 critical ratio bracket", ac8_threshold),
        ("AC-9 traveling-family index", ac9_case1_index),
        ("AC-10 direct spectra", ac10_direct_spectra),
        ("AC-11 parity identity", ac11_parity),
        ("AC-12 essential-spectrum gap", ac12_essential_gap),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = run().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        let tag = if result.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!result.pass);
        println!("[{tag}] {name}: {} ({:.1?})", result.detail, start.elapsed());
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
