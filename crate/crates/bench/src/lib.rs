//! Benchmarks for paley-core.
