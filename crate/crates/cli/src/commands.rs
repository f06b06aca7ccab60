use abc_stability::discretization::Grid;
use abc_stability::index::{
    analytic_threshold_bracket, critical_ratio_bisection, general_index_numeric, index_report, BisectionResult,
    IndexReport,
};
use abc_stability::spectrum::{
    combine_verdict, discrete_spectrum_tilde_l, inertia_comparison, stability_verdict, unstable_modes_jl,
    verdict_from_parts, Eigenvalues, IndexSign, InertiaComparison, SpectrumReport, StabilityVerdict, Verdict,
    VerdictOptions,
};
use abc_stability::wave::{
    resolve_wave_parameters, sample_wave, traveling_residual, AbcParameters, SampledWave, WaveCase, WaveSpec,
};
use abc_stability::StabilityError;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{CommandKind, OutputFormat, RunConfig, ScanConfig, ScanParam, AUTO_WIDTHS};
use crate::error::CliError;
use crate::report::{num, opt, to_csv, to_json};

/// Rendered report plus whether the run ended without a verdict.
pub struct Outcome {
    pub text: String,
    pub inconclusive: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridInfo {
    pub n_points: usize,
    pub half_length: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Residuals {
    pub r1: f64,
    pub r2: f64,
}

#[derive(Serialize)]
struct WavePayload {
    parameters: AbcParameters,
    wave: WaveSpec,
    subsonic: bool,
    grid: GridInfo,
    residuals: Residuals,
}

#[derive(Serialize)]
struct SpectrumPayload {
    parameters: AbcParameters,
    wave: WaveSpec,
    grid: GridInfo,
    spectrum: SpectrumReport,
    inertia: InertiaComparison,
}

#[derive(Serialize)]
struct JlPayload {
    parameters: AbcParameters,
    wave: WaveSpec,
    grid: GridInfo,
    spectrum: SpectrumReport,
    verdict: StabilityVerdict,
}

#[derive(Serialize)]
struct IndexPayload {
    parameters: AbcParameters,
    wave: WaveSpec,
    grid: GridInfo,
    index: IndexReport,
    index_sign: IndexSign,
    /// Deflated full-system solve, independent of the closed forms.
    index_numeric: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum ThresholdStatus {
    Converged,
    NoSignChange,
}

#[derive(Serialize)]
struct ThresholdPayload {
    status: ThresholdStatus,
    a: f64,
    grid: GridInfo,
    result: Option<BisectionResult>,
    /// End-point index values, given when no sign change was found.
    index_at_zmin: Option<f64>,
    index_at_zmax: Option<f64>,
    /// Stability and instability thresholds implied by the index bounds.
    analytic_bracket: (f64, f64),
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub value: f64,
    pub w: Option<f64>,
    #[serde(rename = "n_tilde_L")]
    pub n_tilde_l: Option<usize>,
    pub index_value: Option<f64>,
    pub lower_bound: Option<f64>,
    pub upper_bound: Option<f64>,
    #[serde(rename = "max_real_JL")]
    pub max_real_jl: Option<f64>,
    pub verdict: String,
    pub parity_consistent: Option<bool>,
    pub error: Option<String>,
}

#[derive(Serialize)]
struct ScanPayload<'a> {
    param: ScanParam,
    rows: &'a [ScanRow],
}

struct Prepared {
    params: AbcParameters,
    spec: WaveSpec,
    wave: SampledWave,
}

impl Prepared {
    fn grid_info(&self) -> GridInfo {
        GridInfo {
            n_points: self.wave.grid.n_points,
            half_length: self.wave.grid.half_length,
        }
    }
}

/// Standing-wave amplitude, also used for the `a = c = -b` point of a ratio scan.
const STANDING_ETA0: f64 = -1.5;

fn eta0_for(config: &RunConfig, params: &AbcParameters, traveling_default: Option<f64>) -> Result<f64, CliError> {
    match (config.eta0, params.case()?) {
        (Some(eta0), _) => Ok(eta0),
        (None, WaveCase::Traveling) => traveling_default
            .ok_or_else(|| CliError::Config("--eta0 is required when a = c = -b".into())),
        (None, _) => {
            let p = params.pinning_ratio();
            Ok(3.0 * (1.0 - 2.0 * p) / (2.0 * p))
        }
    }
}

fn prepare(config: &RunConfig, params: AbcParameters, eta0: f64) -> Result<Prepared, CliError> {
    let spec = resolve_wave_parameters(&params, eta0, config.sign_branch)?;
    let half_length = config.grid_len.unwrap_or(AUTO_WIDTHS / spec.lambda);
    let grid = Grid::new(config.grid_n, half_length)?;
    let wave = sample_wave(&spec, &grid)?;
    Ok(Prepared { params, spec, wave })
}

fn prepare_single(config: &RunConfig) -> Result<Prepared, CliError> {
    let p = config.params;
    let params = AbcParameters::new(p.a, p.b, p.c)?;
    let eta0 = eta0_for(config, &params, None)?;
    prepare(config, params, eta0)
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    match config.command {
        CommandKind::Wave => wave(config),
        CommandKind::Spectrum => spectrum(config),
        CommandKind::JlSpectrum => jl_spectrum(config),
        CommandKind::Index => index(config),
        CommandKind::Threshold => threshold(config),
        CommandKind::Scan => scan(config),
    }
}

fn done(text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { text, inconclusive: false })
}

fn wave(config: &RunConfig) -> Result<Outcome, CliError> {
    let w = prepare_single(config)?;
    let (r1, r2) = traveling_residual(&w.wave, &w.spec, &w.params);
    match config.output_format {
        OutputFormat::Json => done(to_json(
            config,
            &WavePayload {
                parameters: w.params,
                wave: w.spec,
                subsonic: w.spec.is_subsonic(&w.params),
                grid: w.grid_info(),
                residuals: Residuals { r1, r2 },
            },
        )?),
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = (0..w.wave.grid.n_points)
                .map(|j| vec![num(w.wave.grid.nodes[j]), num(w.wave.phi[j]), num(w.wave.psi[j])])
                .collect();
            done(to_csv(&["x", "phi", "psi"], &rows)?)
        }
    }
}

fn spectrum(config: &RunConfig) -> Result<Outcome, CliError> {
    let w = prepare_single(config)?;
    let report = discrete_spectrum_tilde_l(&w.params, &w.spec, &w.wave, config.tolerances.zero_tol)?;
    match config.output_format {
        OutputFormat::Json => {
            let inertia = inertia_comparison(&w.params, &w.spec, &w.wave)?;
            done(to_json(
                config,
                &SpectrumPayload {
                    parameters: w.params,
                    wave: w.spec,
                    grid: w.grid_info(),
                    spectrum: report,
                    inertia,
                },
            )?)
        }
        OutputFormat::Csv => {
            let Eigenvalues::Real(values) = &report.eigenvalues else {
                unreachable!("the smoothed linearization is symmetric")
            };
            let rows: Vec<Vec<String>> = values.iter().enumerate().map(|(k, v)| vec![k.to_string(), num(*v)]).collect();
            done(to_csv(&["k", "eigenvalue"], &rows)?)
        }
    }
}

fn jl_spectrum(config: &RunConfig) -> Result<Outcome, CliError> {
    let w = prepare_single(config)?;
    let tol = config.tolerances;
    let jl = unstable_modes_jl(&w.params, &w.spec, &w.wave, tol.re_tol)?;
    let tilde = discrete_spectrum_tilde_l(&w.params, &w.spec, &w.wave, tol.zero_tol)?;
    let index = index_report(&w.params, &w.spec, &w.wave)?;
    let verdict = verdict_from_parts(&tilde, index, &jl, tol.index_tol);
    let inconclusive = verdict.verdict == Verdict::Inconclusive;
    let text = match config.output_format {
        OutputFormat::Json => to_json(
            config,
            &JlPayload {
                parameters: w.params,
                wave: w.spec,
                grid: w.grid_info(),
                spectrum: jl,
                verdict,
            },
        )?,
        OutputFormat::Csv => {
            let Eigenvalues::Complex(values) = &jl.eigenvalues else {
                unreachable!("flow eigenvalues are reported as complex")
            };
            let rows: Vec<Vec<String>> = values.iter().map(|v| vec![num(v[0]), num(v[1])]).collect();
            to_csv(&["re", "im"], &rows)?
        }
    };
    Ok(Outcome { text, inconclusive })
}

fn index(config: &RunConfig) -> Result<Outcome, CliError> {
    let w = prepare_single(config)?;
    let report = index_report(&w.params, &w.spec, &w.wave)?;
    let index_numeric = general_index_numeric(&w.params, &w.spec, &w.wave)?;
    let (index_sign, _, _) = combine_verdict(1, report.index_value, config.tolerances.index_tol, 0);
    let text = match config.output_format {
        OutputFormat::Json => to_json(
            config,
            &IndexPayload {
                parameters: w.params,
                wave: w.spec,
                grid: w.grid_info(),
                index: report,
                index_sign,
                index_numeric,
            },
        )?,
        OutputFormat::Csv => to_csv(
            &["index_value", "index_numeric", "kdv_part", "hill_part", "lower_bound_3I", "upper_bound_3I"],
            &[vec![
                num(report.index_value),
                num(index_numeric),
                opt(report.kdv_part),
                opt(report.hill_part),
                opt(report.lower_bound_3i),
                opt(report.upper_bound_3i),
            ]],
        )?,
    };
    Ok(Outcome { text, inconclusive: index_sign == IndexSign::Indeterminate })
}

/// Bisection always runs at `a = -1`; a missing sign change is reported, not
/// raised.
fn threshold(config: &RunConfig) -> Result<Outcome, CliError> {
    let t = config.threshold.expect("threshold settings");
    let a = -1.0;
    // Standing waves at a = -1 have lambda = 1/2.
    let grid = Grid::new(config.grid_n, config.grid_len.unwrap_or(2.0 * AUTO_WIDTHS))?;
    let info = GridInfo { n_points: grid.n_points, half_length: grid.half_length };
    let payload = match critical_ratio_bisection(t.z_min, t.z_max, t.tol, &grid) {
        Ok(r) => ThresholdPayload {
            status: ThresholdStatus::Converged,
            a,
            grid: info,
            result: Some(r),
            index_at_zmin: None,
            index_at_zmax: None,
            analytic_bracket: analytic_threshold_bracket(),
        },
        Err(StabilityError::NoSignChange { f_lo, f_hi, .. }) => ThresholdPayload {
            status: ThresholdStatus::NoSignChange,
            a,
            grid: info,
            result: None,
            index_at_zmin: Some(f_lo),
            index_at_zmax: Some(f_hi),
            analytic_bracket: analytic_threshold_bracket(),
        },
        Err(e) => return Err(e.into()),
    };
    let text = match config.output_format {
        OutputFormat::Json => to_json(config, &payload)?,
        OutputFormat::Csv => {
            let r = payload.result;
            to_csv(
                &["status", "z_star", "bracket_lo", "bracket_hi", "iterations"],
                &[vec![
                    match payload.status {
                        ThresholdStatus::Converged => "converged".into(),
                        ThresholdStatus::NoSignChange => "no_sign_change".into(),
                    },
                    opt(r.map(|r| r.z_star)),
                    opt(r.map(|r| r.bracket.0)),
                    opt(r.map(|r| r.bracket.1)),
                    r.map(|r| r.iterations.to_string()).unwrap_or_default(),
                ]],
            )?
        }
    };
    done(text)
}

fn scan_point(config: &RunConfig, scan: &ScanConfig, value: f64) -> Result<ScanRow, CliError> {
    let p = config.params;
    let (params, eta0) = match scan.param {
        ScanParam::Eta0 => (AbcParameters::new(p.a, p.b, p.c)?, value),
        ScanParam::Z => {
            let params = AbcParameters::standing(p.a, value)?;
            (params, eta0_for(config, &params, Some(STANDING_ETA0))?)
        }
    };
    let w = prepare(config, params, eta0)?;
    let options = VerdictOptions {
        zero_tol: config.tolerances.zero_tol,
        re_tol: config.tolerances.re_tol,
        index_tol: config.tolerances.index_tol,
    };
    let v = stability_verdict(&w.params, &w.spec, &w.wave, &options)?;
    // Bounds are reported on the scale of the index itself.
    let scale = (-params.a).sqrt() / 3.0;
    Ok(ScanRow {
        value,
        w: Some(w.spec.w),
        n_tilde_l: Some(v.n_tilde_l),
        index_value: Some(v.index.index_value),
        lower_bound: v.index.lower_bound_3i.map(|x| scale * x),
        upper_bound: v.index.upper_bound_3i.map(|x| scale * x),
        max_real_jl: Some(v.max_real_jl),
        verdict: serde_json::to_value(v.verdict)?.as_str().unwrap_or_default().to_string(),
        parity_consistent: Some(v.parity_consistent),
        error: None,
    })
}

pub fn scan_rows(config: &RunConfig) -> Vec<ScanRow> {
    let scan = config.scan.expect("scan settings");
    scan.values()
        .into_par_iter()
        .map(|value| {
            scan_point(config, &scan, value).unwrap_or_else(|e| ScanRow {
                value,
                w: None,
                n_tilde_l: None,
                index_value: None,
                lower_bound: None,
                upper_bound: None,
                max_real_jl: None,
                verdict: "error".into(),
                parity_consistent: None,
                error: Some(e.to_string()),
            })
        })
        .collect()
}

fn scan(config: &RunConfig) -> Result<Outcome, CliError> {
    let scan = config.scan.expect("scan settings");
    let rows = scan_rows(config);
    for row in rows.iter().filter(|r| r.error.is_some()) {
        eprintln!("warning: scan point {} failed: {}", row.value, row.error.as_deref().unwrap_or(""));
    }
    let text = match config.output_format {
        OutputFormat::Json => to_json(config, &ScanPayload { param: scan.param, rows: &rows })?,
        OutputFormat::Csv => {
            let first = match scan.param {
                ScanParam::Eta0 => "eta0",
                ScanParam::Z => "z",
            };
            let header = [
                first,
                "w",
                "n_tilde_L",
                "index_value",
                "lower_bound",
                "upper_bound",
                "max_real_JL",
                "verdict",
            ];
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        num(r.value),
                        opt(r.w),
                        r.n_tilde_l.map(|n| n.to_string()).unwrap_or_default(),
                        opt(r.index_value),
                        opt(r.lower_bound),
                        opt(r.upper_bound),
                        opt(r.max_real_jl),
                        r.verdict.clone(),
                    ]
                })
                .collect();
            to_csv(&header, &records)?
        }
    };
    done(text)
}
