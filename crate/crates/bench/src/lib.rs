//! Criterion benchmarks for `dynkin-core`; see `benches/`.
