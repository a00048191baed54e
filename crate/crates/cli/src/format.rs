//! CSV, JSON and PGM encodings of a [`ScanReport`].

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hahn_core::SpectralRegion;

use crate::error::ScanError;
use crate::scan::{OutputFormat, ScanReport, ScanRow};

pub const CSV_HEADER: &str =
    "re,im,region,goldberg,in_ap,in_delta,in_co,adjoint_eigen,resolvent_bound,growth_class";

/// `%.17g`: 17 significant digits, trailing zeros dropped, exponent form
/// outside `1e-4 ≤ |v| < 1e17`.
pub fn format_g17(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        strip_zeros(&format!("{v:.*}", (16 - exp) as usize)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn flag(b: bool) -> char {
    if b {
        '1'
    } else {
        '0'
    }
}

fn csv_line(out: &mut String, row: &ScanRow) {
    let bound = row.resolvent_bound.map(format_g17).unwrap_or_default();
    let growth = row.growth_class.as_deref().unwrap_or("");
    writeln!(
        out,
        "{},{},{},{},{},{},{},{},{},{}",
        format_g17(row.re),
        format_g17(row.im),
        row.region,
        row.goldberg,
        flag(row.in_ap),
        flag(row.in_delta),
        flag(row.in_co),
        flag(row.adjoint_eigen),
        bound,
        growth
    )
    .expect("writing to a String");
}

pub fn csv_string(report: &ScanReport) -> String {
    let mut out = String::with_capacity(64 * (report.rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        csv_line(&mut out, row);
    }
    out
}

pub fn gray_level(region: Option<SpectralRegion>) -> u8 {
    match region {
        Some(SpectralRegion::ResolventSet) => 255,
        Some(SpectralRegion::ContinuousSpectrum) => 128,
        Some(SpectralRegion::ResidualSpectrum) => 64,
        Some(SpectralRegion::PointSpectrum) | None => 0,
    }
}

/// Binary PGM (`P5`), one byte per lattice point in row order.
pub fn pgm_bytes(report: &ScanReport) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", report.config.nx, report.config.ny);
    let mut out = Vec::with_capacity(header.len() + report.rows.len());
    out.extend_from_slice(header.as_bytes());
    out.extend(report.regions().map(gray_level));
    out
}

pub fn json_string(report: &ScanReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<(), ScanError> {
    fs::write(path, bytes).map_err(|source| ScanError::Io { path: path.to_path_buf(), source })
}

pub fn write_csv(report: &ScanReport, path: impl AsRef<Path>) -> Result<(), ScanError> {
    write_bytes(path.as_ref(), csv_string(report).as_bytes())
}

pub fn write_pgm(report: &ScanReport, path: impl AsRef<Path>) -> Result<(), ScanError> {
    write_bytes(path.as_ref(), &pgm_bytes(report))
}

pub fn write_json(report: &ScanReport, path: impl AsRef<Path>) -> Result<(), ScanError> {
    write_bytes(path.as_ref(), json_string(report).as_bytes())
}

/// Writes in the format and to the path named by the report's config.
pub fn write_report(report: &ScanReport) -> Result<(), ScanError> {
    let path = &report.config.output_path;
    match report.config.format {
        OutputFormat::Csv => write_csv(report, path),
        OutputFormat::Json => write_json(report, path),
        OutputFormat::Pgm => write_pgm(report, path),
    }
}

pub fn read_json(path: impl AsRef<Path>) -> Result<ScanReport, ScanError> {
    let path = path.as_ref();
    let text =
        fs::read_to_string(path).map_err(|source| ScanError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| ScanError::Json { path: path.to_path_buf(), source })
}
