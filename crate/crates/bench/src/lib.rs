//! Benchmark-only crate; see the `core_ops` bench target.
