use std::collections::HashMap;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use abc_stability::spectrum::{DEFAULT_INDEX_TOL, DEFAULT_RE_TOL};
use abc_stability::wave::SignBranch;
use clap::{Args, ValueEnum};
use serde::Serialize;

use crate::error::CliError;

pub const DEFAULT_GRID_N: usize = 1024;
/// Auto half-length is this many wave widths `1/lambda`.
pub const AUTO_WIDTHS: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Wave,
    Spectrum,
    JlSpectrum,
    Index,
    Threshold,
    Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ScanParam {
    Eta0,
    Z,
}

impl FromStr for ScanParam {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "eta0" => Ok(ScanParam::Eta0),
            "z" => Ok(ScanParam::Z),
            other => Err(format!("unknown scan parameter '{other}'")),
        }
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub eta0: Option<f64>,
    /// Sign branch of the amplitude ratio and speed: + or -.
    #[arg(long)]
    pub sign: Option<String>,
    /// Number of grid points.
    #[arg(long)]
    pub n: Option<usize>,
    /// Grid half-length (default 50/lambda).
    #[arg(long)]
    pub len: Option<f64>,
    #[arg(long)]
    pub zero_tol: Option<f64>,
    #[arg(long)]
    pub re_tol: Option<f64>,
    #[arg(long)]
    pub index_tol: Option<f64>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Plain-text key=value file; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub zmin: Option<f64>,
    #[arg(long)]
    pub zmax: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub param: Option<ScanParam>,
    #[arg(long)]
    pub from: Option<f64>,
    #[arg(long)]
    pub to: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// `None` selects the relative default of the eigen-solvers.
    pub zero_tol: Option<f64>,
    pub re_tol: f64,
    pub index_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RawParameters {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdConfig {
    pub z_min: f64,
    pub z_max: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanConfig {
    pub param: ScanParam,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl ScanConfig {
    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.from];
        }
        let span = self.to - self.from;
        let last = (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.from + span * i as f64 / last).collect()
    }
}

/// Fully resolved run settings. Echoed verbatim into every JSON report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub params: RawParameters,
    pub eta0: Option<f64>,
    pub sign_branch: SignBranch,
    pub grid_n: usize,
    /// `None` means 50/lambda of the wave being computed.
    pub grid_len: Option<f64>,
    pub tolerances: Tolerances,
    pub output_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<ThresholdConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanConfig>,
}

impl RunConfig {
    pub fn resolve(
        command: CommandKind,
        common: &CommonArgs,
        threshold: Option<&ThresholdArgs>,
        scan: Option<&ScanArgs>,
    ) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(path) => read_config_file(path)?,
            None => HashMap::new(),
        };
        let layer = Layer { file: &file };

        let sign_text: Option<String> = layer.pick(common.sign.clone(), "sign")?;
        let sign_branch = match sign_text {
            Some(s) => s.parse::<SignBranch>()?,
            None => SignBranch::Plus,
        };
        let default_format = if command == CommandKind::Scan { OutputFormat::Csv } else { OutputFormat::Json };

        let config = RunConfig {
            command,
            params: RawParameters {
                a: layer.pick(common.a, "a")?.unwrap_or(-1.0),
                b: layer.pick(common.b, "b")?.unwrap_or(1.0),
                c: layer.pick(common.c, "c")?.unwrap_or(-1.0),
            },
            eta0: layer.pick(common.eta0, "eta0")?,
            sign_branch,
            grid_n: layer.pick(common.n, "n")?.unwrap_or(DEFAULT_GRID_N),
            grid_len: layer.pick(common.len, "len")?,
            tolerances: Tolerances {
                zero_tol: layer.pick(common.zero_tol, "zero_tol")?,
                re_tol: layer.pick(common.re_tol, "re_tol")?.unwrap_or(DEFAULT_RE_TOL),
                index_tol: layer.pick(common.index_tol, "index_tol")?.unwrap_or(DEFAULT_INDEX_TOL),
            },
            output_path: layer.pick(common.output.clone(), "output")?,
            output_format: layer.pick(common.format, "format")?.unwrap_or(default_format),
            threshold: match threshold {
                Some(t) => Some(ThresholdConfig {
                    z_min: layer.pick(t.zmin, "zmin")?.unwrap_or(8.0),
                    z_max: layer.pick(t.zmax, "zmax")?.unwrap_or(12.0),
                    tol: layer.pick(t.tol, "tol")?.unwrap_or(1e-3),
                }),
                None => None,
            },
            scan: match scan {
                Some(s) => Some(ScanConfig {
                    param: layer.pick(s.param, "param")?.unwrap_or(ScanParam::Eta0),
                    from: layer.require(s.from, "from")?,
                    to: layer.require(s.to, "to")?,
                    steps: layer.pick(s.steps, "steps")?.unwrap_or(11),
                }),
                None => None,
            },
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(CliError::Config(format!("{name} must be positive, got {v}")))
            }
        };
        if let Some(z) = self.tolerances.zero_tol {
            positive("zero_tol", z)?;
        }
        positive("re_tol", self.tolerances.re_tol)?;
        positive("index_tol", self.tolerances.index_tol)?;
        if let Some(len) = self.grid_len {
            positive("len", len)?;
        }
        if let Some(t) = &self.threshold {
            positive("tol", t.tol)?;
        }
        if let Some(s) = &self.scan {
            if s.steps == 0 {
                return Err(CliError::Config("steps must be at least 1".into()));
            }
            if !(s.from.is_finite() && s.to.is_finite()) {
                return Err(CliError::Config("scan range must be finite".into()));
            }
        }
        Ok(())
    }
}

struct Layer<'a> {
    file: &'a HashMap<String, String>,
}

impl Layer<'_> {
    fn pick<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(key) {
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|e| CliError::Config(format!("config key '{key}': {e}"))),
            None => Ok(None),
        }
    }

    fn require<T>(&self, flag: Option<T>, key: &str) -> Result<T, CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        self.pick(flag, key)?
            .ok_or_else(|| CliError::Config(format!("missing required setting '{key}'")))
    }
}

const KNOWN_KEYS: &[&str] = &[
    "a", "b", "c", "eta0", "sign", "n", "len", "zero_tol", "re_tol", "index_tol", "output", "format", "zmin",
    "zmax", "tol", "param", "from", "to", "steps",
];

/// Parses `key = value` lines. Blank lines and `#` comments are skipped;
/// dashes in keys are read as underscores.
pub fn parse_config_text(text: &str) -> Result<HashMap<String, String>, CliError> {
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("line {}: expected key=value", lineno + 1)))?;
        let key = key.trim().replace('-', "_");
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(CliError::Config(format!("line {}: unknown key '{key}'", lineno + 1)));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

fn read_config_file(path: &Path) -> Result<HashMap<String, String>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_config_text(&text)
}
