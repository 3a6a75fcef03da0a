//! Benchmarks for hilb2-core; see `benches/`.
