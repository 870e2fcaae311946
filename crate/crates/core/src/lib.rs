//! Normalized-Laplacian invariants of Möbius and linear octagonal chains.
//!
//! Every closed form in [`closed_forms`] is evaluated in exact arithmetic and
//! has an independent brute-force counterpart in [`oracles`].

#![forbid(unsafe_code)]

pub mod closed_forms;
pub mod error;
pub mod exact_algebra;
pub mod graph_gen;
pub mod laplacian;
pub mod oracles;

pub use error::{Error, Result};
