//! Criterion benchmarks for polywedge; see `benches/`.
