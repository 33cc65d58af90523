//! Positional numerals in an arbitrary integer radix.
//!
//! A [`Numeral`] stores a sign, a radix and the digit sequence of the
//! magnitude, most-significant digit first. Digits are kept in canonical
//! form: every digit lies in `0..radix` and there is no leading zero except
//! for the value zero itself, which is the single digit `[0]` with a positive
//! sign.
//!
//! Conversion never goes through floating point. Encoding repeatedly divides
//! by the radix (in chunks of the largest power of the radix that fits a
//! machine word), decoding is Horner evaluation.
//!
//! Balanced ternary, where digits are `-1`, `0` and `+1` and the sign is
//! carried by the digits themselves, lives in [`balanced`].

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use self::balanced::{BalancedTernary, Trit};

pub mod balanced;

/// An integer radix, at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Radix(u64);

impl Radix {
    pub const BINARY: Radix = Radix(2);
    pub const TERNARY: Radix = Radix(3);
    pub const DECIMAL: Radix = Radix(10);
    pub const HEX: Radix = Radix(16);

    pub fn new(radix: u64) -> Result<Radix> {
        if radix < 2 {
            return Err(Error::InvalidRadix(radix));
        }
        Ok(Radix(radix))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Largest `radix^k` that fits in a `u64`, together with `k`.
    fn word_power(self) -> (u64, usize) {
        let mut power = self.0;
        let mut k = 1;
        while let Some(next) = power.checked_mul(self.0) {
            power = next;
            k += 1;
        }
        (power, k)
    }
}

impl TryFrom<u64> for Radix {
    type Error = Error;

    fn try_from(radix: u64) -> Result<Radix> {
        Radix::new(radix)
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// An integer written in a fixed radix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Numeral {
    sign: Sign,
    radix: Radix,
    digits: Vec<u64>,
}

impl Numeral {
    /// Builds a numeral from its parts, checking every invariant.
    pub fn new(sign: Sign, radix: Radix, digits: Vec<u64>) -> Result<Numeral> {
        let first = *digits.first().ok_or(Error::Empty)?;
        if let Some(&digit) = digits.iter().find(|&&d| d >= radix.get()) {
            return Err(Error::DigitOutOfRange {
                digit,
                radix: radix.get(),
            });
        }
        if first == 0 {
            if digits.len() > 1 {
                return Err(Error::LeadingZero);
            }
            if sign == Sign::Minus {
                return Err(Error::NegativeZero);
            }
        }
        Ok(Numeral {
            sign,
            radix,
            digits,
        })
    }

    /// Encodes a non-negative value.
    pub fn from_biguint(value: &BigUint, radix: Radix) -> Numeral {
        Numeral {
            sign: Sign::Plus,
            radix,
            digits: magnitude_digits(value, radix),
        }
    }

    /// Encodes a signed value in sign-magnitude form.
    pub fn from_bigint(value: &BigInt, radix: Radix) -> Numeral {
        let sign = match value.sign() {
            num_bigint::Sign::Minus => Sign::Minus,
            _ => Sign::Plus,
        };
        Numeral {
            sign,
            radix,
            digits: magnitude_digits(value.magnitude(), radix),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Number of digits, i.e. `w + 1`.
    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }

    pub fn magnitude(&self) -> BigUint {
        let radix = self.radix.get();
        self.digits
            .iter()
            .fold(BigUint::zero(), |acc, &d| acc * radix + d)
    }

    /// The value `sign · Σ digit·radix^position`.
    pub fn decode(&self) -> BigInt {
        let magnitude = BigInt::from(self.magnitude());
        match self.sign {
            Sign::Plus => magnitude,
            Sign::Minus => -magnitude,
        }
    }
}

/// Renders `FF_16`, `-101_2`, or `12.40.7_61` for radices above 36.
impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        let radix = self.radix.get();
        if radix <= 36 {
            for &d in &self.digits {
                let c = char::from_digit(d as u32, 36).expect("digit below radix");
                write!(f, "{}", c.to_ascii_uppercase())?;
            }
        } else {
            for (i, d) in self.digits.iter().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{}", d)?;
            }
        }
        write!(f, "_{}", radix)
    }
}

/// Canonical digits of `value`, most significant first.
fn magnitude_digits(value: &BigUint, radix: Radix) -> Vec<u64> {
    if value.is_zero() {
        return alloc::vec![0];
    }
    let r = radix.get();
    let (word, per_word) = radix.word_power();
    let word = BigUint::from(word);

    // Little-endian while collecting.
    let mut digits = Vec::new();
    let mut rest = value.clone();
    while !rest.is_zero() {
        let (quotient, remainder) = rest.div_rem(&word);
        let mut chunk = remainder.to_u64().expect("remainder below a u64 word");
        rest = quotient;
        if rest.is_zero() {
            while chunk != 0 {
                digits.push(chunk % r);
                chunk /= r;
            }
        } else {
            for _ in 0..per_word {
                digits.push(chunk % r);
                chunk /= r;
            }
        }
    }
    digits.reverse();
    digits
}

/// Encodes a non-negative value in the given radix.
pub fn encode(value: &BigUint, radix: u64) -> Result<Numeral> {
    Ok(Numeral::from_biguint(value, Radix::new(radix)?))
}

pub fn decode(numeral: &Numeral) -> BigInt {
    numeral.decode()
}

/// Largest value representable with `width_w + 1` digits: `radix^(w+1) − 1`.
pub fn max_value(radix: u64, width_w: u64) -> Result<BigUint> {
    let radix = Radix::new(radix)?;
    let power: BigUint = Pow::pow(&BigUint::from(radix.get()), width_w + 1);
    Ok(power - 1u32)
}

/// Number of digits needed to write `value`, i.e. `w + 1`.
///
/// Zero takes one digit. Computed by repeated integer division.
pub fn width_for(value: &BigUint, radix: u64) -> Result<usize> {
    let radix = Radix::new(radix)?;
    let divisor = BigUint::from(radix.get());
    let mut count = 1;
    let mut rest = value / &divisor;
    while !rest.is_zero() {
        rest /= &divisor;
        count += 1;
    }
    Ok(count)
}
