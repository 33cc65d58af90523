//! Balanced ternary: radix 3 with digits -1, 0 and +1.
//!
//! There is no sign field. The sign of the value is the sign of the leading
//! trit and negation flips every trit. Rendering writes `+1` as `1`, `0` as
//! `0` and `-1` as `T`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(i8)]
pub enum Trit {
    Minus = -1,
    Zero = 0,
    Plus = 1,
}

impl Trit {
    #[inline]
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn to_char(self) -> char {
        match self {
            Trit::Minus => 'T',
            Trit::Zero => '0',
            Trit::Plus => '1',
        }
    }
}

impl TryFrom<i64> for Trit {
    type Error = Error;

    fn try_from(d: i64) -> Result<Trit> {
        match d {
            -1 => Ok(Trit::Minus),
            0 => Ok(Trit::Zero),
            1 => Ok(Trit::Plus),
            _ => Err(Error::TritOutOfRange(d)),
        }
    }
}

impl TryFrom<char> for Trit {
    type Error = Error;

    fn try_from(c: char) -> Result<Trit> {
        match c {
            'T' => Ok(Trit::Minus),
            '0' => Ok(Trit::Zero),
            '1' => Ok(Trit::Plus),
            _ => Err(Error::InvalidTrit(c)),
        }
    }
}

impl Neg for Trit {
    type Output = Trit;

    fn neg(self) -> Trit {
        match self {
            Trit::Minus => Trit::Plus,
            Trit::Zero => Trit::Zero,
            Trit::Plus => Trit::Minus,
        }
    }
}

/// A signed integer in balanced ternary, most significant trit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BalancedTernary {
    trits: Vec<Trit>,
}

impl BalancedTernary {
    pub fn new(trits: Vec<Trit>) -> Result<BalancedTernary> {
        match trits.first() {
            None => Err(Error::Empty),
            Some(Trit::Zero) if trits.len() > 1 => Err(Error::LeadingZero),
            Some(_) => Ok(BalancedTernary { trits }),
        }
    }

    /// Builds from integer digits, each of which must be -1, 0 or 1.
    pub fn from_digits(digits: &[i64]) -> Result<BalancedTernary> {
        let trits = digits
            .iter()
            .map(|&d| Trit::try_from(d))
            .collect::<Result<Vec<_>>>()?;
        BalancedTernary::new(trits)
    }

    pub fn encode(value: &BigInt) -> BalancedTernary {
        let mut trits = magnitude_trits(value.magnitude());
        if value.sign() == num_bigint::Sign::Minus {
            trits.iter_mut().for_each(|t| *t = -*t);
        }
        BalancedTernary { trits }
    }

    pub fn decode(&self) -> BigInt {
        self.trits
            .iter()
            .fold(BigInt::zero(), |acc, &t| acc * 3 + t.value())
    }

    pub fn trits(&self) -> &[Trit] {
        &self.trits
    }

    /// Trits as integers in `{-1, 0, 1}`.
    pub fn digits(&self) -> Vec<i8> {
        self.trits.iter().map(|t| t.value()).collect()
    }

    pub fn digit_count(&self) -> usize {
        self.trits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.trits == [Trit::Zero]
    }
}

impl Neg for BalancedTernary {
    type Output = BalancedTernary;

    fn neg(mut self) -> BalancedTernary {
        self.trits.iter_mut().for_each(|t| *t = -*t);
        self
    }
}

impl Neg for &BalancedTernary {
    type Output = BalancedTernary;

    fn neg(self) -> BalancedTernary {
        -self.clone()
    }
}

impl fmt::Display for BalancedTernary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.trits
            .iter()
            .try_for_each(|t| fmt::Write::write_char(f, t.to_char()))
    }
}

impl FromStr for BalancedTernary {
    type Err = Error;

    fn from_str(s: &str) -> Result<BalancedTernary> {
        let trits = s.chars().map(Trit::try_from).collect::<Result<Vec<_>>>()?;
        BalancedTernary::new(trits)
    }
}

/// Balanced-ternary trits of a non-negative value, most significant first.
///
/// Remainder 2 becomes trit -1 with a carry of +1 into the next position.
fn magnitude_trits(value: &BigUint) -> Vec<Trit> {
    if value.is_zero() {
        return alloc::vec![Trit::Zero];
    }
    let mut trits = Vec::new();
    let mut rest = value.clone();
    while !rest.is_zero() {
        let remainder = (&rest % 3u32).to_u32().expect("remainder below 3");
        rest /= 3u32;
        trits.push(match remainder {
            0 => Trit::Zero,
            1 => Trit::Plus,
            _ => {
                rest += 1u32;
                Trit::Minus
            }
        });
    }
    trits.reverse();
    trits
}

pub fn encode_balanced_ternary(value: &BigInt) -> BalancedTernary {
    BalancedTernary::encode(value)
}

pub fn decode_balanced_ternary(numeral: &BalancedTernary) -> BigInt {
    numeral.decode()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn bt(v: i64) -> BalancedTernary {
        BalancedTernary::encode(&BigInt::from(v))
    }

    #[test]
    fn examples() {
        assert_eq!(bt(0).digits(), [0]);
        assert_eq!(bt(5).digits(), [1, -1, -1]);
        assert_eq!(bt(-5).digits(), [-1, 1, 1]);
        assert_eq!(bt(5).to_string(), "1TT");
        assert_eq!(bt(0).to_string(), "0");
    }

    #[test]
    fn decode_examples() {
        let five = BalancedTernary::from_digits(&[1, -1, -1]).unwrap();
        assert_eq!(five.decode(), BigInt::from(5));
        let zero = BalancedTernary::from_digits(&[0]).unwrap();
        assert_eq!(decode_balanced_ternary(&zero), BigInt::zero());
    }

    #[test]
    fn invariant_violations() {
        assert_eq!(
            BalancedTernary::from_digits(&[1, 2]),
            Err(Error::TritOutOfRange(2))
        );
        assert_eq!(
            BalancedTernary::from_digits(&[0, 1]),
            Err(Error::LeadingZero)
        );
        assert_eq!(BalancedTernary::from_digits(&[]), Err(Error::Empty));
        assert_eq!(
            "1T2".parse::<BalancedTernary>(),
            Err(Error::InvalidTrit('2'))
        );
    }

    #[test]
    fn parse_render() {
        let n: BalancedTernary = "1TT".parse().unwrap();
        assert_eq!(n.decode(), BigInt::from(5));
        assert_eq!((-n).to_string(), "T11");
    }

    // Every string of up to four trits with a nonzero lead, evaluated
    // directly, must be exactly what encode produces for its value.
    #[test]
    fn enumeration_oracle() {
        let alphabet = [-1i64, 0, 1];
        for len in 1..=4u32 {
            for idx in 0..3usize.pow(len) {
                let mut digits = alloc::vec::Vec::new();
                let mut k = idx;
                for _ in 0..len {
                    digits.push(alphabet[k % 3]);
                    k /= 3;
                }
                if len > 1 && digits[len as usize - 1] == 0 {
                    continue;
                }
                digits.reverse();
                let value: i64 = digits.iter().fold(0, |acc, d| acc * 3 + d);
                assert_eq!(
                    bt(value)
                        .digits()
                        .iter()
                        .map(|&d| d as i64)
                        .collect::<alloc::vec::Vec<_>>(),
                    digits
                );
            }
        }
    }
}
