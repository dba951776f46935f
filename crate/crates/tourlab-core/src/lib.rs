//! Exact combinatorics of labeled tournaments and graphs: brute-force pattern
//! counters, the flip/alternating-enumerator calculus, reduction gadgets,
//! signature machinery, detection algorithms, and seeded verification suites.
//!
//! Everything in this crate is deterministic: all randomness flows from
//! explicit 64-bit seeds through a fixed splitmix64 stream, all counters use
//! exact (arbitrary-precision) integers, and all enumeration orders are
//! specified, so identical inputs produce identical outputs on every platform.
//!
//! Vertices are 1-based: a structure of order `k` lives on `{1, …, k}`.
//! Unordered pairs `{i, j}` with `i < j` are indexed lexicographically; that
//! index is part of the on-disk format contract (see [`textio`]).

pub mod canon;
pub mod counting;
pub mod detect;
pub mod enumerator;
pub mod error;
pub mod reductions;
pub mod rng;
pub mod signatures;
pub mod structures;
pub mod textio;
pub mod ttunique;
pub mod verify;

pub use error::{Error, Result};
pub use structures::{
    Coloring, ColoredGraph, ColoredTournament, Graph, Permutation, Tournament,
};
