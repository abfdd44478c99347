//! Criterion benchmarks for orbline-core; see `benches/`.
