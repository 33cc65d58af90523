//! Error type shared by all modules.

use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// A violated precondition.
///
/// Every variant names the argument that was out of range, so the message can
/// be shown to a user as-is.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Radix below 2.
    InvalidRadix(u64),
    /// A digit not in `0..radix`.
    DigitOutOfRange { digit: u64, radix: u64 },
    /// A numeral with a redundant leading zero.
    LeadingZero,
    /// A numeral without any digits.
    Empty,
    /// Zero carrying a negative sign.
    NegativeZero,
    /// Node size of a tree below 2.
    InvalidNodeSize(u64),
    /// Item total of a tree below 1.
    EmptyTree,
    /// Upper bound `C` not strictly greater than 1 (or not finite).
    InvalidUpperBound(f64),
    /// Radix argument of a cost function not strictly greater than 1.
    InvalidRealRadix(f64),
    /// Tolerance not strictly positive and finite.
    InvalidTolerance(f64),
    /// Sampling range or step count unusable.
    InvalidGrid {
        r_min: f64,
        r_max: f64,
        steps: usize,
    },
    /// A sampled cost was not finite.
    NonFiniteCost { r: f64 },
    /// Trit count of zero.
    ZeroTrits,
    /// Device state counts outside `2 <= used <= available`.
    InvalidStates { available: u32, used: u32 },
    /// Character that is not a balanced-ternary digit.
    InvalidTrit(char),
    /// Integer that is not one of -1, 0, +1.
    TritOutOfRange(i64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::InvalidRadix(r) => write!(f, "radix must be at least 2, got {}", r),
            Error::DigitOutOfRange { digit, radix } => {
                write!(f, "digit {} out of range for radix {} (must be < {})", digit, radix, radix)
            }
            Error::LeadingZero => f.write_str("numeral has a leading zero digit"),
            Error::Empty => f.write_str("numeral has no digits"),
            Error::NegativeZero => f.write_str("zero must carry a positive sign"),
            Error::InvalidNodeSize(m) => write!(f, "node size must be at least 2, got {}", m),
            Error::EmptyTree => f.write_str("tree total must be at least 1"),
            Error::InvalidUpperBound(c) => {
                write!(f, "upper bound C must be finite and greater than 1, got {} (no optimum for C <= 1)", c)
            }
            Error::InvalidRealRadix(r) => write!(f, "radix r must be finite and greater than 1, got {}", r),
            Error::InvalidTolerance(t) => write!(f, "tolerance must be finite and positive, got {}", t),
            Error::InvalidGrid { r_min, r_max, steps } => write!(
                f,
                "sampling grid requires 1 < r_min < r_max and steps >= 2, got r_min={}, r_max={}, steps={}",
                r_min, r_max, steps
            ),
            Error::NonFiniteCost { r } => write!(f, "cost is not finite at r={}", r),
            Error::ZeroTrits => f.write_str("trit count must be at least 1"),
            Error::InvalidStates { available, used } => write!(
                f,
                "device states require 2 <= used <= available, got used={}, available={}",
                used, available
            ),
            Error::InvalidTrit(c) => write!(f, "invalid balanced-ternary digit {:?} (expected 1, 0 or T)", c),
            Error::TritOutOfRange(d) => write!(f, "balanced-ternary digit must be -1, 0 or 1, got {}", d),
        }
    }
}

impl core::error::Error for Error {}
