//! Complex-plane scans of the fine-spectrum classifier.
//!
//! A scan evaluates [`hahn_core::classify_point`] on an endpoint-inclusive
//! lattice over a rectangle, optionally attaches finite-section evidence,
//! runs the consistency suite over the same lattice and writes the result as
//! CSV, JSON or a binary PGM map.

pub mod error;
pub mod format;
pub mod scan;

pub use error::ScanError;
pub use format::{
    csv_string, json_string, pgm_bytes, read_json, write_csv, write_json, write_pgm, write_report,
};
pub use scan::{run_scan, OutputFormat, RegionCensus, ScanConfig, ScanReport, ScanRow};
