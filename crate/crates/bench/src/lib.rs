//! Criterion benchmarks for pcflab; see `benches/`.
