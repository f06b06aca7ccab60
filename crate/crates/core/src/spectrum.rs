//! Direct eigenvalue computations and the combined stability verdict.

use serde::Serialize;

use crate::discretization::{
    assemble_jl, assemble_rotated_m, assemble_system_operator_l, assemble_tilde_l, DiscreteOperator,
};
use crate::error::{Result, StabilityError};
use crate::hill::{case1_diagonal_reduction, standing_diagonal_pair};
use crate::index::{index_report, IndexReport};
use crate::wave::{AbcParameters, SampledWave, WaveCase, WaveSpec};

pub const DEFAULT_RE_TOL: f64 = 1e-6;
pub const DEFAULT_INDEX_TOL: f64 = 1e-8;
/// Relative zero threshold for the smoothed linearization.
pub const DEFAULT_ZERO_TOL_REL: f64 = 1e-6;
/// Eigenvalues with `|Re|` above this enter the four-fold symmetry check.
pub const HAMILTONIAN_RE_FLOOR: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Eigenvalues {
    Real(Vec<f64>),
    /// `[re, im]` pairs.
    Complex(Vec<[f64; 2]>),
}

impl Eigenvalues {
    pub fn len(&self) -> usize {
        match self {
            Eigenvalues::Real(v) => v.len(),
            Eigenvalues::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub eigenvalues: Eigenvalues,
    pub negative_count: usize,
    pub zero_modes: usize,
    pub unstable_count: Option<usize>,
    pub max_real_part: Option<f64>,
    pub ess_spectrum_gap: f64,
    /// Transpose defect for the smoothed linearization, four-fold symmetry
    /// defect of the spectrum for the flow generator.
    pub symmetry_defect: f64,
    pub zero_tol: f64,
}

/// `det L0(xi) = xi^4 (ac - b^2 w^2) + xi^2 (-a - c - 2 b w^2) + 1 - w^2`.
pub fn symbol_determinant(params: &AbcParameters, w: f64, xi: f64) -> f64 {
    let (a, b, c) = (params.a, params.b, params.c);
    let x2 = xi * xi;
    x2 * x2 * (a * c - b * b * w * w) + x2 * (-a - c - 2.0 * b * w * w) + 1.0 - w * w
}

/// Smaller eigenvalue of `L0(xi) / (1 + b xi^2)`.
pub fn smoothed_symbol_min_eigenvalue(params: &AbcParameters, w: f64, xi: f64) -> f64 {
    let (a, b, c) = (params.a, params.b, params.c);
    let x2 = xi * xi;
    let weight = 1.0 / (1.0 + b * x2);
    let p = (1.0 - c * x2) * weight;
    let r = (1.0 - a * x2) * weight;
    let q = -w * (b * x2 + 1.0) * weight;
    0.5 * (p + r) - (0.25 * (p - r) * (p - r) + q * q).sqrt()
}

/// `kappa = min_xi` of the smaller smoothed symbol eigenvalue over the grid wavenumbers.
pub fn essential_spectrum_gap(params: &AbcParameters, spec: &WaveSpec, wavenumbers: &[f64]) -> Result<f64> {
    if !spec.is_subsonic(params) {
        return Err(StabilityError::NotSubsonic {
            speed: spec.w.abs(),
            bound: params.subsonic_bound,
        });
    }
    Ok(wavenumbers
        .iter()
        .map(|&xi| smoothed_symbol_min_eigenvalue(params, spec.w, xi))
        .fold(f64::INFINITY, f64::min))
}

fn count_signs(values: &[f64], zero_tol: f64) -> (usize, usize) {
    let negative = values.iter().filter(|&&v| v < -zero_tol).count();
    let zero = values.iter().filter(|&&v| v.abs() <= zero_tol).count();
    (negative, zero)
}

fn resolve_zero_tol(values: &[f64], zero_tol: Option<f64>) -> f64 {
    zero_tol.unwrap_or_else(|| {
        let norm = values.iter().map(|v| v.abs()).fold(0.0, f64::max);
        DEFAULT_ZERO_TOL_REL * norm.max(1.0)
    })
}

/// Eigenvalues of the smoothed linearization below the essential gap.
pub fn discrete_spectrum_tilde_l(
    params: &AbcParameters,
    spec: &WaveSpec,
    wave: &SampledWave,
    zero_tol: Option<f64>,
) -> Result<SpectrumReport> {
    let op = assemble_tilde_l(params, spec, wave)?;
    let all = op.symmetric_eigenvalues()?;
    let zero_tol = resolve_zero_tol(&all, zero_tol);
    let (negative_count, zero_modes) = count_signs(&all, zero_tol);
    let gap = essential_spectrum_gap(params, spec, &wave.grid.wavenumbers)?;
    Ok(SpectrumReport {
        eigenvalues: Eigenvalues::Real(all.into_iter().filter(|&v| v < gap).collect()),
        negative_count,
        zero_modes,
        unstable_count: None,
        max_real_part: None,
        ess_spectrum_gap: gap,
        symmetry_defect: op.symmetry_defect(),
        zero_tol,
    })
}

/// Largest distance from an eigenvalue with `|Re| > HAMILTONIAN_RE_FLOOR` to the
/// nearest of its reflections `-l`, `conj l`, `-conj l`.
pub fn hamiltonian_symmetry_defect(values: &[[f64; 2]]) -> f64 {
    let nearest = |re: f64, im: f64| {
        values
            .iter()
            .map(|v| (v[0] - re).hypot(v[1] - im))
            .fold(f64::INFINITY, f64::min)
    };
    values
        .iter()
        .filter(|v| v[0].abs() > HAMILTONIAN_RE_FLOOR)
        .map(|v| {
            nearest(-v[0], -v[1])
                .max(nearest(v[0], -v[1]))
                .max(nearest(-v[0], v[1]))
        })
        .fold(0.0, f64::max)
}

/// Spectrum of `JL`. Eigenvalues inside the disc of radius `sqrt(re_tol)` are
/// the split translational block and are not counted as unstable.
pub fn unstable_modes_jl(
    params: &AbcParameters,
    spec: &WaveSpec,
    wave: &SampledWave,
    re_tol: f64,
) -> Result<SpectrumReport> {
    if !(re_tol > 0.0) {
        return Err(StabilityError::Domain(format!("re_tol must be positive, got {re_tol}")));
    }
    let op = assemble_jl(params, spec, wave)?;
    let values: Vec<[f64; 2]> = op.general_eigenvalues()?.into_iter().map(|z| [z.re, z.im]).collect();
    let zero_radius = re_tol.sqrt();
    let unstable_count = values
        .iter()
        .filter(|v| v[0] > re_tol && v[0].hypot(v[1]) > zero_radius)
        .count();
    let zero_modes = values.iter().filter(|v| v[0].hypot(v[1]) <= zero_radius).count();
    let max_real_part = values.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max);
    let gap = essential_spectrum_gap(params, spec, &wave.grid.wavenumbers)?;
    Ok(SpectrumReport {
        symmetry_defect: hamiltonian_symmetry_defect(&values),
        eigenvalues: Eigenvalues::Complex(values),
        negative_count: 0,
        zero_modes,
        unstable_count: Some(unstable_count),
        max_real_part: Some(max_real_part),
        ess_spectrum_gap: gap,
        zero_tol: zero_radius,
    })
}

/// Negative counts of the congruent forms of the linearization on one grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InertiaComparison {
    pub tilde_l: usize,
    pub system_l: usize,
    /// Rotated form, available for `a = c`.
    pub rotated_m: Option<usize>,
    /// Closed-form count from the diagonal Hill pair.
    pub hill_pair: Option<usize>,
}

impl InertiaComparison {
    pub fn consistent(&self) -> bool {
        self.tilde_l == self.system_l
            && self.rotated_m.is_none_or(|m| m == self.tilde_l)
            && self.hill_pair.is_none_or(|h| h == self.tilde_l)
    }
}

fn negative_count(op: &DiscreteOperator, zero_tol: Option<f64>) -> Result<usize> {
    let values = op.symmetric_eigenvalues()?;
    let tol = resolve_zero_tol(&values, zero_tol);
    Ok(count_signs(&values, tol).0)
}

pub fn inertia_comparison(params: &AbcParameters, spec: &WaveSpec, wave: &SampledWave) -> Result<InertiaComparison> {
    // The unsmoothed operator is unbounded; its zero threshold is taken from
    // the smoothed one so that the translational mode is excluded in both.
    let tilde = assemble_tilde_l(params, spec, wave)?;
    let tilde_values = tilde.symmetric_eigenvalues()?;
    let tol = resolve_zero_tol(&tilde_values, None);
    let tilde_l = count_signs(&tilde_values, tol).0;
    let system_l = negative_count(&assemble_system_operator_l(params, spec, wave)?, Some(tol))?;
    let rotated_m = if params.equal_dispersion() {
        Some(negative_count(&assemble_rotated_m(params, spec, wave)?, Some(tol))?)
    } else {
        None
    };
    let hill_pair = match spec.case {
        WaveCase::Traveling => Some(case1_diagonal_reduction(spec.eta0, params.b)?.n_tilde_l),
        WaveCase::Standing => Some(standing_diagonal_pair(params.a)?.n_tilde_l),
        WaveCase::Pinned => None,
    };
    Ok(InertiaComparison {
        tilde_l,
        system_l,
        rotated_m,
        hill_pair,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexSign {
    Neg,
    Pos,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Stable,
    Unstable,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityVerdict {
    #[serde(rename = "n_tilde_L")]
    pub n_tilde_l: usize,
    pub index_sign: IndexSign,
    pub parity_rhs: usize,
    pub n_unstable_direct: usize,
    pub verdict: Verdict,
    pub parity_consistent: bool,
    pub index: IndexReport,
    pub max_real_jl: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerdictOptions {
    pub zero_tol: Option<f64>,
    pub re_tol: f64,
    pub index_tol: f64,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        VerdictOptions {
            zero_tol: None,
            re_tol: DEFAULT_RE_TOL,
            index_tol: DEFAULT_INDEX_TOL,
        }
    }
}

/// Combines the inputs of the parity formula
/// `n_unstable = n(tilde L) - n(I) mod 2` into a verdict.
pub fn combine_verdict(
    n_tilde_l: usize,
    index_value: f64,
    index_tol: f64,
    n_unstable_direct: usize,
) -> (IndexSign, usize, Verdict) {
    let index_sign = if index_value.abs() <= index_tol {
        IndexSign::Indeterminate
    } else if index_value < 0.0 {
        IndexSign::Neg
    } else {
        IndexSign::Pos
    };
    let n_index = usize::from(index_sign == IndexSign::Neg);
    let parity_rhs = (n_tilde_l + n_index) % 2;
    let verdict = match index_sign {
        IndexSign::Indeterminate => Verdict::Inconclusive,
        IndexSign::Pos => Verdict::Unstable,
        IndexSign::Neg if n_unstable_direct > 0 => Verdict::Unstable,
        IndexSign::Neg if n_tilde_l == 1 => Verdict::Stable,
        IndexSign::Neg => Verdict::Inconclusive,
    };
    (index_sign, parity_rhs, verdict)
}

pub fn stability_verdict(
    params: &AbcParameters,
    spec: &WaveSpec,
    wave: &SampledWave,
    options: &VerdictOptions,
) -> Result<StabilityVerdict> {
    let tilde = discrete_spectrum_tilde_l(params, spec, wave, options.zero_tol)?;
    let index = index_report(params, spec, wave)?;
    let jl = unstable_modes_jl(params, spec, wave, options.re_tol)?;
    Ok(verdict_from_parts(&tilde, index, &jl, options.index_tol))
}

/// Verdict assembled from an already computed smoothed spectrum, index and
/// flow spectrum.
pub fn verdict_from_parts(
    tilde: &SpectrumReport,
    index: IndexReport,
    jl: &SpectrumReport,
    index_tol: f64,
) -> StabilityVerdict {
    let n_unstable_direct = jl.unstable_count.unwrap_or(0);
    let (index_sign, parity_rhs, verdict) =
        combine_verdict(tilde.negative_count, index.index_value, index_tol, n_unstable_direct);
    StabilityVerdict {
        n_tilde_l: tilde.negative_count,
        index_sign,
        parity_rhs,
        n_unstable_direct,
        verdict,
        parity_consistent: index_sign == IndexSign::Indeterminate || n_unstable_direct % 2 == parity_rhs,
        index,
        max_real_jl: jl.max_real_part.unwrap_or(f64::NAN),
    }
}
