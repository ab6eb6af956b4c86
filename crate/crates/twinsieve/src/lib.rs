//! Twin-prime estimation toolkit: a segmented, bit-packed sieve of
//! Eratosthenes with twin-pair enumeration, the `(6n-1, 6n+1)` pair
//! model with exact-rational growth and retention products, and a
//! verifier that reproduces the reference measurement table and audits
//! its empirical claims (per-window twin counts, estimate orderings).
//!
//! The `examples/` directory has one runnable example per capability;
//! the `twinsieve` binary exposes the same operations as subcommands.

pub mod atp;
pub mod cache;
pub mod cli;
pub mod error;
pub mod estimator;
pub mod ratio;
pub mod report;
pub mod sieve;
pub mod svg;
pub mod verifier;

pub use error::{Error, Result};
pub use ratio::ExactRatio;
