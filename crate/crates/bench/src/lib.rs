//! Criterion benchmarks for the verification engine; see `benches/engine.rs`.
