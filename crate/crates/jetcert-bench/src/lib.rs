//! Benchmark-only crate; the workloads live under `benches/`.
