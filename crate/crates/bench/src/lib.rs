//! Benchmarks for the series and power-structure kernels; see `benches/series.rs`.
