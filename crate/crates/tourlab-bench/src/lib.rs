//! Benchmark-only crate. The measured kernels live in `benches/kernels.rs`
//! and run with `cargo bench -p tourlab-bench`; this library is
//! intentionally empty.
