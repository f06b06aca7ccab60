//! Explicit `sech^2` traveling and standing waves of the abc system.
//!
//! A wave is `(phi, psi) = (eta0 sech^2(lambda x), B eta0 sech^2(lambda x))`
//! moving with speed `w`. Two parameter regimes carry such waves:
//!
//! * `a + b != 0`: the amplitude is pinned by `p = (c + b) / (a + b)` to
//!   `eta0 = 3 (1 - 2p) / (2p)`. With `a = c` this is the standing wave
//!   `eta0 = -3/2`, `w = 0`.
//! * `a = c = -b`: `eta0 > -3` is free and the speed follows from it.

use serde::Serialize;

use crate::discretization::Grid;
use crate::error::{Result, StabilityError};

/// Relative tolerance used when matching parameter identities such as `a = c`.
const IDENTITY_TOL: f64 = 1e-12;

/// Grid half-lengths must cover this many pulse widths `1 / lambda`.
pub const DECAY_MARGIN: f64 = 40.0;

fn nearly_equal(x: f64, y: f64) -> bool {
    (x - y).abs() <= IDENTITY_TOL * x.abs().max(y.abs()).max(1.0)
}

pub fn sech2(x: f64) -> f64 {
    let s = 1.0 / x.cosh();
    s * s
}

/// Model constants of the abc system with `d = b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AbcParameters {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// `b / (-a)`.
    pub ratio_z: f64,
    /// `min(1, sqrt(ac) / b)`.
    pub subsonic_bound: f64,
}

impl AbcParameters {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(StabilityError::Domain("parameters must be finite".into()));
        }
        if !(a < 0.0 && b > 0.0 && c < 0.0) {
            return Err(StabilityError::Domain(format!(
                "need a < 0, b > 0, c < 0; got a={a}, b={b}, c={c}"
            )));
        }
        Ok(AbcParameters {
            a,
            b,
            c,
            ratio_z: b / -a,
            subsonic_bound: 1.0_f64.min((a * c).sqrt() / b),
        })
    }

    /// Standing-wave setting `a = c`, with `b = z |a|`.
    pub fn standing(a: f64, z: f64) -> Result<Self> {
        Self::new(a, z * -a, a)
    }

    /// Traveling-wave setting `a = c = -b`.
    pub fn traveling(b: f64) -> Result<Self> {
        Self::new(-b, b, -b)
    }

    pub fn equal_dispersion(&self) -> bool {
        nearly_equal(self.a, self.c)
    }

    /// `a = c = -b`.
    pub fn is_traveling_family(&self) -> bool {
        self.equal_dispersion() && nearly_equal(self.a, -self.b)
    }

    pub fn case(&self) -> Result<WaveCase> {
        if self.is_traveling_family() {
            Ok(WaveCase::Traveling)
        } else if nearly_equal(self.a + self.b, 0.0) {
            Err(StabilityError::Domain(format!(
                "a + b = 0 with a != c carries no explicit wave (a={}, c={})",
                self.a, self.c
            )))
        } else if self.equal_dispersion() {
            Ok(WaveCase::Standing)
        } else {
            Ok(WaveCase::Pinned)
        }
    }

    /// `p = (c + b) / (a + b)`, defined when `a + b != 0`.
    pub fn pinning_ratio(&self) -> f64 {
        (self.c + self.b) / (self.a + self.b)
    }
}

/// Which branch of the explicit family a parameter set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WaveCase {
    /// `a = c = -b`, free amplitude.
    Traveling,
    /// `a = c`, `a + b != 0`: `eta0 = -3/2`, `w = 0`.
    Standing,
    /// `a != c`, `a + b != 0`: amplitude pinned by `p`.
    Pinned,
}

/// Joint sign of `B` and `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignBranch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl SignBranch {
    pub fn value(self) -> f64 {
        match self {
            SignBranch::Plus => 1.0,
            SignBranch::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            SignBranch::Plus => SignBranch::Minus,
            SignBranch::Minus => SignBranch::Plus,
        }
    }
}

impl std::str::FromStr for SignBranch {
    type Err = StabilityError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "1" | "plus" => Ok(SignBranch::Plus),
            "-" | "-1" | "minus" => Ok(SignBranch::Minus),
            other => Err(StabilityError::Domain(format!("unknown sign branch '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WaveSpec {
    pub eta0: f64,
    pub lambda: f64,
    /// Ratio `psi / phi`.
    #[serde(rename = "B")]
    pub amplitude_ratio: f64,
    pub w: f64,
    pub sign_branch: SignBranch,
    pub case: WaveCase,
}

impl WaveSpec {
    pub fn phi_at(&self, x: f64) -> f64 {
        self.eta0 * sech2(self.lambda * x)
    }

    pub fn psi_at(&self, x: f64) -> f64 {
        self.amplitude_ratio * self.phi_at(x)
    }

    /// Smallest half-length that keeps the periodized profile below round-off.
    pub fn min_half_length(&self) -> f64 {
        DECAY_MARGIN / self.lambda
    }

    pub fn is_subsonic(&self, params: &AbcParameters) -> bool {
        self.w.abs() < params.subsonic_bound
    }
}

/// Resolves speed, width and amplitude ratio of the explicit wave with
/// amplitude `eta0` on the given sign branch.
pub fn resolve_wave_parameters(
    params: &AbcParameters,
    eta0: f64,
    sign_branch: SignBranch,
) -> Result<WaveSpec> {
    if !eta0.is_finite() || eta0 <= -3.0 {
        return Err(StabilityError::Domain(format!("eta0 must exceed -3, got {eta0}")));
    }
    if eta0 == 0.0 {
        return Err(StabilityError::Domain("eta0 = 0 is the trivial wave".into()));
    }
    let case = params.case()?;
    if case != WaveCase::Traveling {
        let p = params.pinning_ratio();
        if !(p > 0.0) {
            return Err(StabilityError::Domain(format!("p = (c+b)/(a+b) must be positive, got {p}")));
        }
        if !((p - 0.5) * ((params.b - params.a) * p - params.b) > 0.0) {
            return Err(StabilityError::Domain(format!(
                "p = {p} violates (p - 1/2)((b - a)p - b) > 0"
            )));
        }
        let pinned = 3.0 * (1.0 - 2.0 * p) / (2.0 * p);
        if (eta0 - pinned).abs() > 1e-9 * pinned.abs().max(1.0) {
            return Err(StabilityError::Domain(format!(
                "these parameters pin eta0 = {pinned}, got {eta0}"
            )));
        }
    }
    let radicand = 2.0 * eta0 / (3.0 * (params.a - params.b) + 2.0 * params.b * (eta0 + 3.0));
    if !(radicand > 0.0) || !radicand.is_finite() {
        return Err(StabilityError::Domain(format!(
            "width radicand must be positive, got {radicand}"
        )));
    }
    let sign = sign_branch.value();
    Ok(WaveSpec {
        eta0,
        lambda: 0.5 * radicand.sqrt(),
        amplitude_ratio: sign * (3.0 / (eta0 + 3.0)).sqrt(),
        w: sign * (3.0 + 2.0 * eta0) / (3.0 * (3.0 + eta0)).sqrt(),
        sign_branch,
        case,
    })
}

/// As [`resolve_wave_parameters`], additionally requiring a subsonic speed.
/// For `a = c = -b` this is the amplitude window `eta0 in (-9/4, 0)`.
pub fn resolve_subsonic_wave(
    params: &AbcParameters,
    eta0: f64,
    sign_branch: SignBranch,
) -> Result<WaveSpec> {
    let spec = resolve_wave_parameters(params, eta0, sign_branch)?;
    if spec.case == WaveCase::Traveling && !(eta0 > -2.25 && eta0 < 0.0) {
        return Err(StabilityError::Domain(format!(
            "subsonic traveling waves need eta0 in (-9/4, 0), got {eta0}"
        )));
    }
    if !spec.is_subsonic(params) {
        return Err(StabilityError::NotSubsonic {
            speed: spec.w.abs(),
            bound: params.subsonic_bound,
        });
    }
    Ok(spec)
}

/// Grid samples of a wave pair and its spectral derivatives.
#[derive(Debug, Clone)]
pub struct SampledWave {
    pub grid: Grid,
    pub phi: Vec<f64>,
    pub psi: Vec<f64>,
    pub phi_dx: Vec<f64>,
    pub phi_dxx: Vec<f64>,
    pub psi_dx: Vec<f64>,
    pub psi_dxx: Vec<f64>,
}

impl SampledWave {
    /// Wraps arbitrary profiles; derivatives are taken spectrally.
    pub fn from_profiles(grid: &Grid, phi: Vec<f64>, psi: Vec<f64>) -> Result<Self> {
        Ok(SampledWave {
            phi_dx: grid.differentiate(&phi, 1)?,
            phi_dxx: grid.differentiate(&phi, 2)?,
            psi_dx: grid.differentiate(&psi, 1)?,
            psi_dxx: grid.differentiate(&psi, 2)?,
            grid: grid.clone(),
            phi,
            psi,
        })
    }

    /// The zero profile on `grid`.
    pub fn zero(grid: &Grid) -> Self {
        let z = vec![0.0; grid.n_points];
        SampledWave {
            grid: grid.clone(),
            phi: z.clone(),
            psi: z.clone(),
            phi_dx: z.clone(),
            phi_dxx: z.clone(),
            psi_dx: z.clone(),
            psi_dxx: z,
        }
    }

    /// Translational kernel candidate `(phi', psi')` stacked.
    pub fn translation_mode(&self) -> Vec<f64> {
        self.phi_dx.iter().chain(&self.psi_dx).copied().collect()
    }
}

pub fn sample_wave(spec: &WaveSpec, grid: &Grid) -> Result<SampledWave> {
    let required = spec.min_half_length();
    if grid.half_length < required * (1.0 - 1e-12) {
        return Err(StabilityError::GridTooSmall {
            half_length: grid.half_length,
            required,
        });
    }
    let phi = grid.sample(|x| spec.phi_at(x));
    let psi = phi.iter().map(|v| spec.amplitude_ratio * v).collect();
    SampledWave::from_profiles(grid, phi, psi)
}

/// Sup-norm residuals of the two traveling-wave equations.
pub fn traveling_residual(wave: &SampledWave, spec: &WaveSpec, params: &AbcParameters) -> (f64, f64) {
    let w = spec.w;
    let (a, b, c) = (params.a, params.b, params.c);
    let mut r1 = 0.0_f64;
    let mut r2 = 0.0_f64;
    for j in 0..wave.grid.n_points {
        let (phi, psi) = (wave.phi[j], wave.psi[j]);
        let (phi_xx, psi_xx) = (wave.phi_dxx[j], wave.psi_dxx[j]);
        let e1 = phi + c * phi_xx - w * (psi - b * psi_xx) + 0.5 * psi * psi;
        let e2 = -w * (phi - b * phi_xx) + psi + a * psi_xx + phi * psi;
        r1 = r1.max(e1.abs());
        r2 = r2.max(e2.abs());
    }
    (r1, r2)
}
