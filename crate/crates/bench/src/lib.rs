//! # hahn-bench
//!
//! Criterion benchmarks for the toolkit. Run with `cargo bench -p hahn-bench`.
//!
//! - `classify-grid` - analytic classification of a square grid of spectral parameters
//! - `classify-numerics` - the same grid with finite-section evidence attached
//! - `resolvent-section` - dense resolvent block and the section product check
//! - `hahn-norm` - norm evaluation on long sequences
