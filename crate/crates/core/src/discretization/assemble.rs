//! Dense assembly of the linearized operators on a periodic grid.
//!
//! Constant-coefficient parts are circulants built from their Fourier
//! symbols; potentials enter as diagonals. Products with the smoothing
//! multiplier `(1 - b d_xx)^p` are formed symbol-wise where both factors are
//! circulant and by explicit products otherwise.

use faer::Mat;
use rustfft::num_complex::Complex64;

use super::grid::Grid;
use super::operator::{add_diagonal, block2, scale_columns, BlockStructure, DiscreteOperator, SymmetryTag};
use crate::error::{Result, StabilityError};
use crate::hill::HillSpec;
use crate::wave::{sech2, AbcParameters, SampledWave, WaveSpec};

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

pub fn spectral_derivative(grid: &Grid, order: u32) -> Result<DiscreteOperator> {
    match order {
        1 => Ok(DiscreteOperator::new(
            grid.circulant(true, |xi| Complex64::new(0.0, xi)),
            SymmetryTag::General,
            BlockStructure::Scalar,
        )),
        2 => Ok(DiscreteOperator::new(
            grid.circulant(false, |xi| real(-xi * xi)),
            SymmetryTag::Symmetric,
            BlockStructure::Scalar,
        )),
        _ => Err(StabilityError::Domain(format!("derivative order must be 1 or 2, got {order}"))),
    }
}

/// `(1 - b d_xx)^power` as a Fourier multiplier.
pub fn smoother_power(grid: &Grid, b: f64, power: f64) -> Result<DiscreteOperator> {
    if !(b > 0.0) {
        return Err(StabilityError::Domain(format!("smoother needs b > 0, got {b}")));
    }
    Ok(DiscreteOperator::new(
        grid.circulant(false, |xi| real((1.0 + b * xi * xi).powf(power))),
        SymmetryTag::Symmetric,
        BlockStructure::Scalar,
    ))
}

/// Symbols of the constant-coefficient blocks of `L`.
#[derive(Clone, Copy)]
struct LSymbols {
    a: f64,
    b: f64,
    c: f64,
    w: f64,
}

impl LSymbols {
    fn new(params: &AbcParameters, w: f64) -> Self {
        LSymbols { a: params.a, b: params.b, c: params.c, w }
    }

    fn s11(&self, xi: f64) -> f64 {
        1.0 - self.c * xi * xi
    }

    fn s12(&self, xi: f64) -> f64 {
        -self.b * self.w * xi * xi - self.w
    }

    fn s22(&self, xi: f64) -> f64 {
        1.0 - self.a * xi * xi
    }
}

fn check_wave(params: &AbcParameters, wave: &SampledWave) -> Result<()> {
    if wave.phi.len() != wave.grid.n_points || wave.psi.len() != wave.grid.n_points {
        return Err(StabilityError::LengthMismatch {
            left: wave.phi.len(),
            right: wave.grid.n_points,
        });
    }
    if !(params.b > 0.0) {
        return Err(StabilityError::Domain("b must be positive".into()));
    }
    Ok(())
}

/// The self-adjoint linearization
/// `[[1 + c d_xx, b w d_xx + psi - w], [b w d_xx + psi - w, 1 + a d_xx + phi]]`.
pub fn assemble_system_operator_l(params: &AbcParameters, spec: &WaveSpec, wave: &SampledWave) -> Result<DiscreteOperator> {
    check_wave(params, wave)?;
    let grid = &wave.grid;
    let sym = LSymbols::new(params, spec.w);
    let l11 = grid.circulant(false, |xi| real(sym.s11(xi)));
    let mut l12 = grid.circulant(false, |xi| real(sym.s12(xi)));
    add_diagonal(&mut l12, &wave.psi);
    let mut l22 = grid.circulant(false, |xi| real(sym.s22(xi)));
    add_diagonal(&mut l22, &wave.phi);
    Ok(DiscreteOperator::new(
        block2(&l11, &l12, &l12, &l22),
        SymmetryTag::Symmetric,
        BlockStructure::TwoComponent,
    ))
}

/// `(1 - b d_xx)^(-1/2) L (1 - b d_xx)^(-1/2)`.
pub fn assemble_tilde_l(params: &AbcParameters, spec: &WaveSpec, wave: &SampledWave) -> Result<DiscreteOperator> {
    check_wave(params, wave)?;
    let grid = &wave.grid;
    let b = params.b;
    let weight = |xi: f64| 1.0 / (1.0 + b * xi * xi);
    let sym = LSymbols::new(params, spec.w);
    let half = grid.circulant(false, |xi| real(weight(xi).sqrt()));
    let sandwich = |d: &[f64]| -> Mat<f64> { &scale_columns(&half, d) * &half };

    let t11 = grid.circulant(false, |xi| real(sym.s11(xi) * weight(xi)));
    let t12 = grid.circulant(false, |xi| real(sym.s12(xi) * weight(xi))) + sandwich(&wave.psi);
    let t22 = grid.circulant(false, |xi| real(sym.s22(xi) * weight(xi))) + sandwich(&wave.phi);
    Ok(DiscreteOperator::new(
        block2(&t11, &t12, &t12, &t22),
        SymmetryTag::Symmetric,
        BlockStructure::TwoComponent,
    ))
}

/// Symbol of `-d_x (1 - b d_xx)^(-1)`.
fn j_symbol(b: f64) -> impl Fn(f64) -> Complex64 {
    move |xi| Complex64::new(0.0, -xi / (1.0 + b * xi * xi))
}

/// The skew operator `J = -d_x (1 - b d_xx)^(-1) [[0, 1], [1, 0]]`.
pub fn assemble_j(params: &AbcParameters, grid: &Grid) -> DiscreteOperator {
    let c = grid.circulant(true, j_symbol(params.b));
    let z = Mat::<f64>::zeros(grid.n_points, grid.n_points);
    DiscreteOperator::new(block2(&z, &c, &c, &z), SymmetryTag::General, BlockStructure::TwoComponent)
}

/// `J L`, the generator of the linearized flow.
pub fn assemble_jl(params: &AbcParameters, spec: &WaveSpec, wave: &SampledWave) -> Result<DiscreteOperator> {
    check_wave(params, wave)?;
    let grid = &wave.grid;
    let js = j_symbol(params.b);
    let sym = LSymbols::new(params, spec.w);
    let c = grid.circulant(true, &js);
    // J L = [[C L21, C L22], [C L11, C L12]] with C the off-diagonal block of J.
    let cl11 = grid.circulant(true, |xi| js(xi) * sym.s11(xi));
    let cl12 = grid.circulant(true, |xi| js(xi) * sym.s12(xi)) + scale_columns(&c, &wave.psi);
    let cl22 = grid.circulant(true, |xi| js(xi) * sym.s22(xi)) + scale_columns(&c, &wave.phi);
    Ok(DiscreteOperator::new(
        block2(&cl12, &cl22, &cl11, &cl12),
        SymmetryTag::General,
        BlockStructure::TwoComponent,
    ))
}

/// Orthogonally rotated form of `L` for `a = c`:
/// `[[-(-a - b w) d_xx + 1 - w + psi + phi/2, phi/2], [phi/2, -(-a + b w) d_xx + 1 + w - psi + phi/2]]`.
pub fn assemble_rotated_m(params: &AbcParameters, spec: &WaveSpec, wave: &SampledWave) -> Result<DiscreteOperator> {
    check_wave(params, wave)?;
    if !params.equal_dispersion() {
        return Err(StabilityError::Domain("the rotated form needs a = c".into()));
    }
    let grid = &wave.grid;
    let (a, b, w) = (params.a, params.b, spec.w);
    let half_phi: Vec<f64> = wave.phi.iter().map(|p| 0.5 * p).collect();
    let mut m11 = grid.circulant(false, |xi| real((-a - b * w) * xi * xi + 1.0 - w));
    let d11: Vec<f64> = wave.psi.iter().zip(&half_phi).map(|(s, h)| s + h).collect();
    add_diagonal(&mut m11, &d11);
    let mut m22 = grid.circulant(false, |xi| real((-a + b * w) * xi * xi + 1.0 + w));
    let d22: Vec<f64> = wave.psi.iter().zip(&half_phi).map(|(s, h)| h - s).collect();
    add_diagonal(&mut m22, &d22);
    let mut m12 = Mat::<f64>::zeros(grid.n_points, grid.n_points);
    add_diagonal(&mut m12, &half_phi);
    Ok(DiscreteOperator::new(
        block2(&m11, &m12, &m12, &m22),
        SymmetryTag::Symmetric,
        BlockStructure::TwoComponent,
    ))
}

/// Scalar operators of the standing-wave analysis and generic Hill operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalarOperatorKind {
    /// `a d_xx + 1 + 2 phi`.
    KdV,
    /// `a d_xx + 1 - phi`.
    Hill,
    /// `-d_xx + alpha^2 - Q sech^2(lambda x)`.
    Generic(HillSpec),
}

/// Standing-wave profile `phi = -3/2 sech^2(x / (2 sqrt(-a)))` sampled on `grid`.
pub fn standing_profile(a: f64, grid: &Grid) -> Vec<f64> {
    let lam = 0.5 / (-a).sqrt();
    grid.sample(|x| -1.5 * sech2(lam * x))
}

pub fn assemble_scalar_operator(kind: ScalarOperatorKind, params: &AbcParameters, grid: &Grid) -> Result<DiscreteOperator> {
    let (symbol, potential): (Box<dyn Fn(f64) -> f64>, Vec<f64>) = match kind {
        ScalarOperatorKind::KdV | ScalarOperatorKind::Hill => {
            if !params.equal_dispersion() {
                return Err(StabilityError::Domain("KdV/Hill operators need a = c".into()));
            }
            let a = params.a;
            let phi = standing_profile(a, grid);
            let scale = if kind == ScalarOperatorKind::KdV { 2.0 } else { -1.0 };
            (
                Box::new(move |xi: f64| 1.0 - a * xi * xi),
                phi.iter().map(|p| scale * p).collect(),
            )
        }
        ScalarOperatorKind::Generic(spec) => {
            let alpha2 = spec.alpha * spec.alpha;
            (
                Box::new(move |xi: f64| xi * xi + alpha2),
                grid.sample(|x| -spec.q * sech2(spec.lam * x)),
            )
        }
    };
    let mut m = grid.circulant(false, |xi| real(symbol(xi)));
    add_diagonal(&mut m, &potential);
    Ok(DiscreteOperator::new(m, SymmetryTag::Symmetric, BlockStructure::Scalar))
}

/// Stacks two grid functions into a two-component vector.
pub fn stack(u: &[f64], v: &[f64]) -> Vec<f64> {
    u.iter().chain(v).copied().collect()
}
