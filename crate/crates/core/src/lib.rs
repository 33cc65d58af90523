//! Positional numerals and radix economy.
//!
//! This crate covers three related pieces:
//!
//! * _[numeral]_ encodes unbounded integers in any integer radix ≥ 2, and in
//!   balanced ternary, with the width and maximum-value formulas that tie a
//!   digit count to the largest representable value.
//! * _[tree]_ gives the capacity and depth of a packed m-ary tree, the
//!   geometric-series view of the same trade-off.
//! * _[economy]_ evaluates the product cost `r·w` and the sum cost `r + w`
//!   of representing values up to `C` in radix `r`, finds their optima, and
//!   carries the trit/bit comparisons used when discussing ternary hardware.
//!
//! The crate is `no_std` and needs only `alloc`. All operations are pure
//! functions on immutable values.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub use self::economy::{CostModel, EconomySample, RootResult};
pub use self::error::{Error, Result};
pub use self::numeral::{BalancedTernary, Numeral, Radix, Sign, Trit};
pub use self::tree::TreeSpec;

pub mod economy;
pub mod error;
pub mod numeral;
pub mod tree;

pub use num_bigint::{BigInt, BigUint};
