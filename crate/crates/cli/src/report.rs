use std::time::SystemTime;

use serde::Serialize;

use crate::config::{CommandKind, RunConfig};
use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: &'static str,
    generated_at: String,
    command: CommandKind,
    config: &'a RunConfig,
    #[serde(flatten)]
    payload: &'a T,
}

/// Pretty JSON with the versioned envelope. Only `generated_at` depends on
/// anything but the config and the payload.
pub fn to_json<T: Serialize>(config: &RunConfig, payload: &T) -> Result<String, CliError> {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        generated_at: humantime::format_rfc3339_seconds(SystemTime::now()).to_string(),
        command: config.command,
        config,
        payload,
    };
    let mut text = serde_json::to_string_pretty(&envelope)?;
    text.push('\n');
    Ok(text)
}

pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

/// Shortest round-trip form, switching to exponent notation for very small or
/// large magnitudes.
pub fn num(v: f64) -> String {
    let m = v.abs();
    if m != 0.0 && m.is_finite() && !(1e-4..1e16).contains(&m) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(num(-1.5), "-1.5");
        assert_eq!(num(0.0), "0");
        assert_eq!(num(2.5e-9), "2.5e-9");
        assert_eq!(num(f64::NAN), "NaN");
        assert_eq!(opt(None), "");
    }

    #[test]
    fn csv_has_header_and_rows() {
        let text = to_csv(&["x", "y"], &[vec!["1".into(), "a,b".into()]]).unwrap();
        assert_eq!(text, "x,y\n1,\"a,b\"\n");
    }
}
