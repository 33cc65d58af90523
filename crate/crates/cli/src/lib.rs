//! Command-line front-end for `radix-economy-core`.
//!
//! The `radix` binary converts integers between radices and balanced
//! ternary, evaluates width and tree formulas, solves for optimal radices,
//! and writes cost curves as CSV. [`run`] holds the whole program so it can
//! be driven in-process by tests.

pub mod app;
pub mod csv;
pub mod error;
pub mod format;

pub use app::run;
pub use error::CliError;
