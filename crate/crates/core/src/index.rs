//! The instability index `I = <L^-1 R, R>` with `R = (1 - b d_xx)(psi, phi)`.
//!
//! `I < 0` together with a single negative direction of the smoothed
//! linearization forces spectral stability. For the traveling family
//! `a = c = -b` the index has a closed form in the amplitude. For standing
//! waves (`a = c`, `eta0 = -3/2`) it splits into
//! `I = (8 <L_KdV^-1 f, f> + <L_Hill^-1 f, f>) / 3` with `f = phi - b phi''`,
//! where `L_KdV = a d_xx + 1 + 2 phi` and `L_Hill = a d_xx + 1 - phi`. The KdV
//! part is explicit through `L_KdV^-1 f = (a + b) phi_a - phi`; the Hill part
//! is solved numerically and bracketed by quadratics in `z = b / |a|`.

use faer::linalg::solvers::Solve;
use faer::{Mat, Side};
use serde::Serialize;

use crate::discretization::{
    assemble_scalar_operator, assemble_system_operator_l, stack, standing_profile, Grid, ScalarOperatorKind,
};
use crate::error::{Result, StabilityError};
use crate::wave::{sech2, AbcParameters, SampledWave, SignBranch, WaveSpec, DECAY_MARGIN};

/// Tolerance on `||L_KdV v - f||_inf` for the explicit KdV inverse.
pub const KDV_RESIDUAL_TOL: f64 = 1e-7;
/// Tolerance on the projection coefficient of `f` onto `a phi'' + phi`.
pub const PROJECTION_TOL: f64 = 1e-8;
/// Relative kernel component allowed in the right-hand side.
pub const KERNEL_DEFECT_TOL: f64 = 1e-8;
/// Relative residual allowed for the deflated solve.
pub const DEFLATED_RESIDUAL_TOL: f64 = 1e-6;

/// Closed-form integrals of the standing profile `phi = -3/2 sech^2(x / (2 sqrt(-a)))`
/// and its `a`-derivative `phi_a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InnerProductTable {
    pub phi_a_phi: f64,
    pub phi_phipp: f64,
    pub phi_a_phipp: f64,
    pub phi_phi: f64,
    pub phipp_phipp: f64,
}

pub fn closed_form_inner_products(a: f64) -> Result<InnerProductTable> {
    check_a(a)?;
    let s = (-a).sqrt();
    let s3 = s * s * s;
    Ok(InnerProductTable {
        phi_a_phi: -1.5 / s,
        phi_phipp: -1.2 / s,
        phi_a_phipp: -0.3 / s3,
        phi_phi: 6.0 * s,
        phipp_phipp: 6.0 / (7.0 * s3),
    })
}

fn check_a(a: f64) -> Result<()> {
    if !(a < 0.0) || !a.is_finite() {
        return Err(StabilityError::Domain(format!("a must be negative, got {a}")));
    }
    Ok(())
}

fn check_standing(a: f64, b: f64) -> Result<AbcParameters> {
    check_a(a)?;
    if !(b > 0.0) || !b.is_finite() {
        return Err(StabilityError::Domain(format!("b must be positive, got {b}")));
    }
    AbcParameters::standing(a, b / -a)
}

fn check_standing_grid(a: f64, grid: &Grid) -> Result<()> {
    let required = DECAY_MARGIN * 2.0 * (-a).sqrt();
    if grid.half_length < required * (1.0 - 1e-12) {
        return Err(StabilityError::GridTooSmall {
            half_length: grid.half_length,
            required,
        });
    }
    Ok(())
}

/// `d phi / d a` of the standing profile, exact.
pub fn standing_phi_a(a: f64, grid: &Grid) -> Vec<f64> {
    let s = (-a).sqrt();
    let lam = 0.5 / s;
    let scale = 0.75 / (s * s * s);
    grid.sample(|x| scale * x * sech2(lam * x) * (lam * x).tanh())
}

/// Centered difference of the standing profile in `a` with step `1e-5 |a|`.
pub fn standing_phi_a_fd(a: f64, grid: &Grid) -> Vec<f64> {
    let h = 1e-5 * a.abs();
    let up = standing_profile(a + h, grid);
    let down = standing_profile(a - h, grid);
    up.iter().zip(&down).map(|(u, d)| (u - d) / (2.0 * h)).collect()
}

struct StandingSamples {
    phi: Vec<f64>,
    phi_xx: Vec<f64>,
    /// `f = phi - b phi''`.
    f: Vec<f64>,
}

fn standing_samples(a: f64, b: f64, grid: &Grid) -> Result<StandingSamples> {
    check_standing_grid(a, grid)?;
    let phi = standing_profile(a, grid);
    let phi_xx = grid.differentiate(&phi, 2)?;
    let f = phi.iter().zip(&phi_xx).map(|(p, q)| p - b * q).collect();
    Ok(StandingSamples { phi, phi_xx, f })
}

fn apply_kdv(a: f64, phi: &[f64], v: &[f64], grid: &Grid) -> Result<Vec<f64>> {
    let v_xx = grid.differentiate(v, 2)?;
    Ok(v.iter()
        .zip(&v_xx)
        .zip(phi)
        .map(|((v, vxx), p)| a * vxx + v + 2.0 * p * v)
        .collect())
}

fn sup_distance(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `L_KdV^-1 f = (a + b) phi_a - phi`, checked against the spectral operator.
pub fn kdv_inverse_apply(a: f64, b: f64, grid: &Grid) -> Result<Vec<f64>> {
    check_standing(a, b)?;
    let st = standing_samples(a, b, grid)?;
    let phi_a = standing_phi_a(a, grid);
    let v: Vec<f64> = phi_a.iter().zip(&st.phi).map(|(pa, p)| (a + b) * pa - p).collect();
    let residual = sup_distance(&apply_kdv(a, &st.phi, &v, grid)?, &st.f);
    if !(residual < KDV_RESIDUAL_TOL) {
        return Err(StabilityError::Residual {
            what: "KdV inverse",
            residual,
            tolerance: KDV_RESIDUAL_TOL,
        });
    }
    Ok(v)
}

/// `L_KdV phi_a + phi''`, which vanishes for the exact profile.
pub fn kdv_derivative_identity_residual(a: f64, grid: &Grid) -> Result<f64> {
    check_a(a)?;
    check_standing_grid(a, grid)?;
    let phi = standing_profile(a, grid);
    let phi_xx = grid.differentiate(&phi, 2)?;
    let lhs = apply_kdv(a, &phi, &standing_phi_a(a, grid), grid)?;
    Ok(lhs.iter().zip(&phi_xx).map(|(l, p)| (l + p).abs()).fold(0.0, f64::max))
}

/// `<L_KdV^-1 f, f> = sqrt(-a) (3 z^2 / 10 - 3 z - 9/2)` with `z = b / |a|`.
pub fn kdv_index_closed_form(a: f64, b: f64) -> Result<f64> {
    check_standing(a, b)?;
    let z = b / -a;
    Ok((-a).sqrt() * (0.3 * z * z - 3.0 * z - 4.5))
}

/// Quadrature value of `<L_KdV^-1 f, f>`.
pub fn kdv_index_numeric(a: f64, b: f64, grid: &Grid) -> Result<f64> {
    let v = kdv_inverse_apply(a, b, grid)?;
    let st = standing_samples(a, b, grid)?;
    grid.inner_product(&v, &st.f)
}

/// Result of the numeric Hill solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HillPart {
    pub hill_part: f64,
    /// Coefficient of `f` along `a phi'' + phi`, present when split.
    pub projection_coeff: Option<f64>,
    /// `||g||^2` of the remainder `g = f - c (a phi'' + phi)`, present when split.
    pub g_norm_sq: Option<f64>,
}

/// Expected projection coefficient `7/9 + 2z/9`.
pub fn projection_coeff_closed_form(z: f64) -> f64 {
    (7.0 + 2.0 * z) / 9.0
}

/// `<L_Hill^-1 f, f>` by a Cholesky solve.
pub fn hill_index_numeric(a: f64, b: f64, grid: &Grid, split: bool) -> Result<HillPart> {
    let params = check_standing(a, b)?;
    let st = standing_samples(a, b, grid)?;
    let op = assemble_scalar_operator(ScalarOperatorKind::Hill, &params, grid)?;
    let llt = op
        .entries
        .llt(Side::Lower)
        .map_err(|e| StabilityError::SolveFailure(format!("L_Hill is not positive definite: {e:?}")))?;
    let rhs = Mat::from_fn(grid.n_points, 1, |i, _| st.f[i]);
    let sol = llt.solve(&rhs);
    let u: Vec<f64> = (0..grid.n_points).map(|i| sol[(i, 0)]).collect();
    let hill_part = grid.inner_product(&u, &st.f)?;
    if !split {
        return Ok(HillPart {
            hill_part,
            projection_coeff: None,
            g_norm_sq: None,
        });
    }
    let e: Vec<f64> = st.phi.iter().zip(&st.phi_xx).map(|(p, q)| a * q + p).collect();
    let c = grid.inner_product(&st.f, &e)? / grid.norm_sq(&e);
    let expected = projection_coeff_closed_form(params.ratio_z);
    if (c - expected).abs() > PROJECTION_TOL * expected.abs().max(1.0) {
        return Err(StabilityError::Residual {
            what: "projection coefficient",
            residual: (c - expected).abs(),
            tolerance: PROJECTION_TOL,
        });
    }
    let g: Vec<f64> = st.f.iter().zip(&e).map(|(f, e)| f - c * e).collect();
    Ok(HillPart {
        hill_part,
        projection_coeff: Some(c),
        g_norm_sq: Some(grid.norm_sq(&g)),
    })
}

/// Bounds on `<L_Hill^-1 f, f>`: `sqrt(-a) (4z^2 + 46z + 112)/45` from below and
/// `sqrt(-a) (22z^2 + 10z + 130)/45` from above.
pub fn hill_part_bounds(a: f64, b: f64) -> Result<(f64, f64)> {
    check_standing(a, b)?;
    let z = b / -a;
    let s = (-a).sqrt();
    Ok((
        s * (4.0 * z * z + 46.0 * z + 112.0) / 45.0,
        s * (22.0 * z * z + 10.0 * z + 130.0) / 45.0,
    ))
}

/// Bounds on `3 I / sqrt(-a)`: `(2/45)(56z^2 - 517z - 754)` and
/// `(2/45)(65z^2 - 535z - 745)`. They touch at `z = 1`.
pub fn index_bounds_3i(z: f64) -> (f64, f64) {
    let k = 2.0 / 45.0;
    (
        k * (56.0 * z * z - 517.0 * z - 754.0),
        k * (65.0 * z * z - 535.0 * z - 745.0),
    )
}

/// Roots of the two bound polynomials: stability below the first, instability
/// above the second.
pub fn analytic_threshold_bracket() -> (f64, f64) {
    (
        (535.0 + 479_925.0_f64.sqrt()) / 130.0,
        (517.0 + 436_185.0_f64.sqrt()) / 112.0,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexMethod {
    ClosedForm,
    Numeric,
    Hybrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndexReport {
    pub index_value: f64,
    pub kdv_part: Option<f64>,
    pub hill_part: Option<f64>,
    #[serde(rename = "lower_bound_3I")]
    pub lower_bound_3i: Option<f64>,
    #[serde(rename = "upper_bound_3I")]
    pub upper_bound_3i: Option<f64>,
    pub method: IndexMethod,
    pub stable_by_index: bool,
}

impl IndexReport {
    fn closed_form(index_value: f64) -> Self {
        IndexReport {
            index_value,
            kdv_part: None,
            hill_part: None,
            lower_bound_3i: None,
            upper_bound_3i: None,
            method: IndexMethod::ClosedForm,
            stable_by_index: index_value < 0.0,
        }
    }

    fn numeric(index_value: f64) -> Self {
        IndexReport {
            method: IndexMethod::Numeric,
            ..Self::closed_form(index_value)
        }
    }
}

/// Standing-wave index with the KdV part from the explicit inverse and the
/// Hill part from a numeric solve.
pub fn case2_index(a: f64, b: f64, grid: &Grid) -> Result<IndexReport> {
    let kdv_part = kdv_index_numeric(a, b, grid)?;
    let hill_part = hill_index_numeric(a, b, grid, false)?.hill_part;
    let index_value = (8.0 * kdv_part + hill_part) / 3.0;
    let (lo, hi) = index_bounds_3i(b / -a);
    Ok(IndexReport {
        index_value,
        kdv_part: Some(kdv_part),
        hill_part: Some(hill_part),
        lower_bound_3i: Some(lo),
        upper_bound_3i: Some(hi),
        method: IndexMethod::Hybrid,
        stable_by_index: index_value < 0.0,
    })
}

/// Traveling-family index `(16 sqrt(b) / 5) (2B + eta0 dB/deta0) eta0 deta0/dw`,
/// which reduces to `(144 sqrt(b) / 5) eta0 (4 + eta0) / (2 eta0 + 9)` on both branches.
pub fn case1_index_closed_form(eta0: f64, b: f64, sign_branch: SignBranch) -> Result<f64> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(StabilityError::Domain(format!("b must be positive, got {b}")));
    }
    if !(eta0 > -2.25 && eta0 < 0.0) {
        return Err(StabilityError::Domain(format!("eta0 must lie in (-9/4, 0), got {eta0}")));
    }
    let sigma = sign_branch.value();
    let base = 3.0 + eta0;
    let sqrt3 = 3.0_f64.sqrt();
    let ratio = sigma * sqrt3 / base.sqrt();
    let d_ratio = -sigma * 0.5 * sqrt3 * base.powf(-1.5);
    let d_eta_dw = sigma * 2.0 * sqrt3 * base.powf(1.5) / (2.0 * eta0 + 9.0);
    Ok(3.2 * b.sqrt() * (2.0 * ratio + eta0 * d_ratio) * eta0 * d_eta_dw)
}

/// Simplified traveling-family index.
pub fn case1_index_simplified(eta0: f64, b: f64) -> f64 {
    28.8 * b.sqrt() * eta0 * (4.0 + eta0) / (2.0 * eta0 + 9.0)
}

/// `(1 - b d_xx)(psi, phi)` stacked.
pub fn index_rhs(params: &AbcParameters, wave: &SampledWave) -> Result<Vec<f64>> {
    let grid = &wave.grid;
    Ok(stack(
        &grid.smooth(&wave.psi, params.b, 1.0)?,
        &grid.smooth(&wave.phi, params.b, 1.0)?,
    ))
}

fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn normalize(v: &mut [f64]) {
    let n = dot(v, v).sqrt();
    v.iter_mut().for_each(|x| *x /= n);
}

fn column(v: &[f64]) -> Mat<f64> {
    Mat::from_fn(v.len(), 1, |i, _| v[i])
}

/// Numeric kernel vector of the discrete `L`, refined from the translation mode
/// by shifted inverse iteration.
pub fn numeric_kernel(entries: &Mat<f64>, start: &[f64], shift: f64) -> Result<Vec<f64>> {
    let n = entries.nrows();
    let shifted = Mat::from_fn(n, n, |i, j| entries[(i, j)] - if i == j { shift } else { 0.0 });
    let lu = shifted.partial_piv_lu();
    let mut k = start.to_vec();
    normalize(&mut k);
    for _ in 0..3 {
        let next = lu.solve(&column(&k));
        k = (0..n).map(|i| next[(i, 0)]).collect();
        if !k.iter().all(|x| x.is_finite()) {
            return Err(StabilityError::SolveFailure("inverse iteration diverged".into()));
        }
        normalize(&mut k);
    }
    Ok(k)
}

/// `<L^-1 R, R>` with the kernel of `L` deflated.
pub fn general_index_numeric(params: &AbcParameters, spec: &WaveSpec, wave: &SampledWave) -> Result<f64> {
    let op = assemble_system_operator_l(params, spec, wave)?;
    let rhs = index_rhs(params, wave)?;
    let scale = op.inf_norm();
    let k = numeric_kernel(&op.entries, &wave.translation_mode(), -1e-10 * scale)?;
    let rhs_norm = dot(&rhs, &rhs).sqrt();
    let along = dot(&k, &rhs);
    let defect = along.abs() / rhs_norm;
    if defect > KERNEL_DEFECT_TOL {
        return Err(StabilityError::KernelDefect {
            defect,
            tolerance: KERNEL_DEFECT_TOL,
        });
    }
    let projected: Vec<f64> = rhs.iter().zip(&k).map(|(r, k)| r - along * k).collect();
    let n = op.dim();
    let deflated = Mat::from_fn(n, n, |i, j| op.entries[(i, j)] + scale * k[i] * k[j]);
    let sol = deflated.partial_piv_lu().solve(&column(&projected));
    let mut u: Vec<f64> = (0..n).map(|i| sol[(i, 0)]).collect();
    let along_u = dot(&k, &u);
    u.iter_mut().zip(&k).for_each(|(x, k)| *x -= along_u * k);

    let lu = op.apply(&u)?;
    let residual = sup_distance(&lu, &projected) / projected.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if !(residual < DEFLATED_RESIDUAL_TOL) {
        return Err(StabilityError::IllConditioned {
            residual,
            tolerance: DEFLATED_RESIDUAL_TOL,
        });
    }
    Ok(wave.grid.quad_weight * dot(&u, &rhs))
}

/// Index report for any supported wave: closed form on the traveling family,
/// the split evaluation for standing waves and the deflated solve otherwise.
pub fn index_report(params: &AbcParameters, spec: &WaveSpec, wave: &SampledWave) -> Result<IndexReport> {
    use crate::wave::WaveCase;
    match spec.case {
        WaveCase::Traveling => Ok(IndexReport::closed_form(case1_index_closed_form(
            spec.eta0,
            params.b,
            spec.sign_branch,
        )?)),
        WaveCase::Standing => case2_index(params.a, params.b, &wave.grid),
        WaveCase::Pinned => Ok(IndexReport::numeric(general_index_numeric(params, spec, wave)?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BisectionResult {
    pub z_star: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub index_lo: f64,
    pub index_hi: f64,
}

/// Locates the sign change of the standing-wave index in `z = b / |a|` with `a = -1`.
pub fn critical_ratio_bisection(z_lo: f64, z_hi: f64, tol: f64, grid: &Grid) -> Result<BisectionResult> {
    if !(tol > 0.0) {
        return Err(StabilityError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if !(z_lo > 0.0 && z_hi > z_lo) {
        return Err(StabilityError::Domain(format!("need 0 < z_lo < z_hi, got [{z_lo}, {z_hi}]")));
    }
    let index = |z: f64| case2_index(-1.0, z, grid).map(|r| r.index_value);
    let (mut lo, mut hi) = (z_lo, z_hi);
    let (mut f_lo, mut f_hi) = (index(lo)?, index(hi)?);
    if f_lo.signum() == f_hi.signum() {
        return Err(StabilityError::NoSignChange { z_lo, z_hi, f_lo, f_hi });
    }
    let mut iterations = 0;
    while hi - lo >= tol {
        let mid = 0.5 * (lo + hi);
        let f_mid = index(mid)?;
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        iterations += 1;
    }
    Ok(BisectionResult {
        z_star: 0.5 * (lo + hi),
        bracket: (lo, hi),
        iterations,
        index_lo: f_lo,
        index_hi: f_hi,
    })
}
