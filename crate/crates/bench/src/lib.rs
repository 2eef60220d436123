//! Criterion benchmarks for the a4poly pipeline live under `benches/`.
