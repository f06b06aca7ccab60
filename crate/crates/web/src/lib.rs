//! Browser bindings for the stability workbench: wave profiles, closed-form
//! Hill levels and the standing-wave index curve.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use abc_stability::discretization::Grid;
use abc_stability::hill::{hill_spectrum_closed_form, HillSpec};
use abc_stability::index::{case2_index, index_bounds_3i};
use abc_stability::wave::{resolve_wave_parameters, sample_wave, traveling_residual, AbcParameters, SignBranch};
use abc_stability::StabilityError;
use wasm_bindgen::prelude::*;

/// Index curves are evaluated at `a = -1` on this grid.
const CURVE_POINTS: usize = 512;
const CURVE_HALF_LENGTH: f64 = 80.0;

#[wasm_bindgen]
pub struct WaveProfile {
    x: Vec<f64>,
    phi: Vec<f64>,
    psi: Vec<f64>,
    w: f64,
    lambda: f64,
    amplitude_ratio: f64,
    residual: f64,
    subsonic: bool,
}

#[wasm_bindgen]
impl WaveProfile {
    pub fn x(&self) -> Vec<f64> {
        self.x.clone()
    }
    pub fn phi(&self) -> Vec<f64> {
        self.phi.clone()
    }
    pub fn psi(&self) -> Vec<f64> {
        self.psi.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn w(&self) -> f64 {
        self.w
    }
    #[wasm_bindgen(getter)]
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    #[wasm_bindgen(getter)]
    pub fn amplitude_ratio(&self) -> f64 {
        self.amplitude_ratio
    }
    /// Larger of the two sup-norm equation residuals.
    #[wasm_bindgen(getter)]
    pub fn residual(&self) -> f64 {
        self.residual
    }
    #[wasm_bindgen(getter)]
    pub fn subsonic(&self) -> bool {
        self.subsonic
    }
}

#[wasm_bindgen]
pub struct HillLevels {
    levels: Vec<f64>,
    essential_edge: f64,
    negative_count: usize,
}

#[wasm_bindgen]
impl HillLevels {
    pub fn levels(&self) -> Vec<f64> {
        self.levels.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn essential_edge(&self) -> f64 {
        self.essential_edge
    }
    #[wasm_bindgen(getter)]
    pub fn negative_count(&self) -> usize {
        self.negative_count
    }
}

/// `3I` together with its two bounds, all divided by `sqrt(-a)`.
#[wasm_bindgen]
pub struct IndexCurve {
    z: Vec<f64>,
    index_3i: Vec<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

#[wasm_bindgen]
impl IndexCurve {
    pub fn z(&self) -> Vec<f64> {
        self.z.clone()
    }
    pub fn index_3i(&self) -> Vec<f64> {
        self.index_3i.clone()
    }
    pub fn lower(&self) -> Vec<f64> {
        self.lower.clone()
    }
    pub fn upper(&self) -> Vec<f64> {
        self.upper.clone()
    }
    /// First sampled sign change of the index, or NaN.
    #[wasm_bindgen(getter)]
    pub fn sign_change(&self) -> f64 {
        self.index_3i
            .windows(2)
            .position(|p| p[0] < 0.0 && p[1] >= 0.0)
            .map(|i| {
                let (f0, f1) = (self.index_3i[i], self.index_3i[i + 1]);
                self.z[i] + (self.z[i + 1] - self.z[i]) * f0 / (f0 - f1)
            })
            .unwrap_or(f64::NAN)
    }
}

pub fn compute_wave(a: f64, b: f64, c: f64, eta0: f64, plus: bool, n: usize) -> Result<WaveProfile, StabilityError> {
    let params = AbcParameters::new(a, b, c)?;
    let sign = if plus { SignBranch::Plus } else { SignBranch::Minus };
    let spec = resolve_wave_parameters(&params, eta0, sign)?;
    let grid = Grid::new(n, spec.min_half_length())?;
    let wave = sample_wave(&spec, &grid)?;
    let (r1, r2) = traveling_residual(&wave, &spec, &params);
    Ok(WaveProfile {
        x: grid.nodes.clone(),
        phi: wave.phi,
        psi: wave.psi,
        w: spec.w,
        lambda: spec.lambda,
        amplitude_ratio: spec.amplitude_ratio,
        residual: r1.max(r2),
        subsonic: spec.is_subsonic(&params),
    })
}

pub fn compute_hill_levels(alpha: f64, lam: f64, q: f64) -> Result<HillLevels, StabilityError> {
    let s = hill_spectrum_closed_form(&HillSpec::new(alpha, lam, q)?);
    Ok(HillLevels {
        levels: s.discrete_eigenvalues,
        essential_edge: s.essential_edge,
        negative_count: s.negative_count,
    })
}

pub fn compute_index_curve(z_min: f64, z_max: f64, points: usize) -> Result<IndexCurve, StabilityError> {
    if !(z_min > 0.0 && z_max > z_min) || points < 2 {
        return Err(StabilityError::Domain(format!(
            "need 0 < z_min < z_max and at least two points, got [{z_min}, {z_max}] with {points}"
        )));
    }
    let grid = Grid::new(CURVE_POINTS, CURVE_HALF_LENGTH)?;
    let mut curve = IndexCurve { z: Vec::new(), index_3i: Vec::new(), lower: Vec::new(), upper: Vec::new() };
    for i in 0..points {
        let z = z_min + (z_max - z_min) * i as f64 / (points - 1) as f64;
        let report = case2_index(-1.0, z, &grid)?;
        let (lo, hi) = index_bounds_3i(z);
        curve.z.push(z);
        curve.index_3i.push(3.0 * report.index_value);
        curve.lower.push(lo);
        curve.upper.push(hi);
    }
    Ok(curve)
}

fn to_js(e: StabilityError) -> JsError {
    JsError::new(&e.to_string())
}

/// Sampled wave on `N` points of the shortest admissible domain.
#[wasm_bindgen]
pub fn wave_profile(a: f64, b: f64, c: f64, eta0: f64, plus: bool, n: usize) -> Result<WaveProfile, JsError> {
    compute_wave(a, b, c, eta0, plus, n).map_err(to_js)
}

#[wasm_bindgen]
pub fn hill_levels(alpha: f64, lam: f64, q: f64) -> Result<HillLevels, JsError> {
    compute_hill_levels(alpha, lam, q).map_err(to_js)
}

#[wasm_bindgen]
pub fn index_curve(z_min: f64, z_max: f64, points: usize) -> Result<IndexCurve, JsError> {
    compute_index_curve(z_min, z_max, points).map_err(to_js)
}
