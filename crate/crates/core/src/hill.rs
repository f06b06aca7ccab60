//! Hill operators `-d_xx + alpha^2 - Q sech^2(lambda x)`.
//!
//! After the substitution `y = lambda x` the bound states come from the
//! Poeschl-Teller levels of `-d_yy - Z sech^2(y)` with `Z = Q / lambda^2`:
//! `k_m = -[(Z + 1/4)^(1/2) - m - 1/2]^2` for every `m` keeping the bracket
//! positive. A zero bracket is a threshold resonance and is not listed.

use serde::Serialize;

use crate::error::{Result, StabilityError};

/// Levels within this relative distance of zero are reported as exact zeros.
const LEVEL_ROUNDOFF: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HillSpec {
    pub alpha: f64,
    pub lam: f64,
    #[serde(rename = "Q")]
    pub q: f64,
}

impl HillSpec {
    pub fn new(alpha: f64, lam: f64, q: f64) -> Result<Self> {
        if !(lam > 0.0) || !lam.is_finite() {
            return Err(StabilityError::Domain(format!("potential width must be positive, got {lam}")));
        }
        if !(alpha >= 0.0) || !alpha.is_finite() || !q.is_finite() {
            return Err(StabilityError::Domain(format!("need alpha >= 0 and finite Q, got alpha={alpha}, Q={q}")));
        }
        Ok(HillSpec { alpha, lam, q })
    }

    /// Coupling `Z = Q / lambda^2` of the rescaled operator.
    pub fn coupling(&self) -> f64 {
        self.q / (self.lam * self.lam)
    }

    /// The same operator after `y = lambda x`, divided by `lambda^2`.
    pub fn rescaled(&self) -> HillSpec {
        HillSpec {
            alpha: self.alpha / self.lam,
            lam: 1.0,
            q: self.coupling(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HillSpectrum {
    pub discrete_eigenvalues: Vec<f64>,
    pub negative_count: usize,
    pub essential_edge: f64,
}

/// Bound-state energies of `-d_yy - Z sech^2(y)`, most negative first.
pub fn poeschl_teller_levels(z: f64) -> Vec<f64> {
    if !(z > 0.0) {
        return Vec::new();
    }
    let root = (z + 0.25).sqrt();
    (0..)
        .map(|m| root - m as f64 - 0.5)
        .take_while(|&gap| gap > LEVEL_ROUNDOFF * root)
        .map(|gap| -gap * gap)
        .collect()
}

pub fn hill_spectrum_closed_form(spec: &HillSpec) -> HillSpectrum {
    let lam2 = spec.lam * spec.lam;
    let scaled_mass = spec.alpha / spec.lam;
    let scaled_mass2 = scaled_mass * scaled_mass;
    let floor = LEVEL_ROUNDOFF * lam2 * (scaled_mass2 + spec.coupling().abs()).max(1.0);
    let discrete_eigenvalues: Vec<f64> = poeschl_teller_levels(spec.coupling())
        .into_iter()
        .map(|k| lam2 * (scaled_mass2 + k))
        .map(|e| if e.abs() <= floor { 0.0 } else { e })
        .collect();
    let negative_count = discrete_eigenvalues.iter().filter(|&&e| e < 0.0).count();
    HillSpectrum {
        discrete_eigenvalues,
        negative_count,
        essential_edge: spec.alpha * spec.alpha,
    }
}

/// `-d_xx + alpha^2 - Q sech^2(lambda x) >= 0` iff `alpha^2 + alpha lambda >= Q`.
pub fn hill_nonnegativity_test(spec: &HillSpec) -> bool {
    spec.alpha * spec.alpha + spec.alpha * spec.lam >= spec.q
}

/// Diagonal Hill pair of the `a = c = -b` linearization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiagonalReduction {
    pub first: HillSpec,
    pub second: HillSpec,
    /// Negative eigenvalue count of the smoothed linearization.
    pub n_tilde_l: usize,
}

/// Reduces the `a = c = -b` linearization to the pair
/// `-d_xx + 1/b - (3/b) sech^2` and `-d_xx + 1/b - 3 eta0 / (b (9 + 4 eta0)) sech^2`,
/// both with width `1 / (2 sqrt(b))`.
pub fn case1_diagonal_reduction(eta0: f64, b: f64) -> Result<DiagonalReduction> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(StabilityError::Domain(format!("b must be positive, got {b}")));
    }
    if !(eta0 > -3.0 && eta0 < 0.0) {
        return Err(StabilityError::Domain(format!("eta0 must lie in (-3, 0), got {eta0}")));
    }
    let pole = 9.0 + 4.0 * eta0;
    if pole.abs() < 1e-12 {
        return Err(StabilityError::Pole { parameter: "eta0", value: eta0 });
    }
    let lam = 0.5 / b.sqrt();
    // alpha = 1/sqrt(b) = 2 lambda
    let alpha = 2.0 * lam;
    let first = HillSpec::new(alpha, lam, 3.0 / b)?;
    let second = HillSpec::new(alpha, lam, 3.0 * eta0 / (b * pole))?;
    let n_tilde_l = hill_spectrum_closed_form(&first).negative_count + hill_spectrum_closed_form(&second).negative_count;
    Ok(DiagonalReduction { first, second, n_tilde_l })
}

/// Diagonal pair of the standing-wave linearization, each divided by `|a|`:
/// `a d_xx + 1 + 2 phi` and `a d_xx + 1 - phi` become Hill operators with
/// `alpha^2 = 1/|a|`, width `1 / (2 sqrt(-a))` and `Q = 3/|a|`, `-3/(2|a|)`.
pub fn standing_diagonal_pair(a: f64) -> Result<DiagonalReduction> {
    if !(a < 0.0) || !a.is_finite() {
        return Err(StabilityError::Domain(format!("a must be negative, got {a}")));
    }
    let lam = 0.5 / (-a).sqrt();
    let alpha = 2.0 * lam;
    let first = HillSpec::new(alpha, lam, 3.0 / -a)?;
    let second = HillSpec::new(alpha, lam, -1.5 / -a)?;
    let n_tilde_l = hill_spectrum_closed_form(&first).negative_count + hill_spectrum_closed_form(&second).negative_count;
    Ok(DiagonalReduction { first, second, n_tilde_l })
}
