//! Radix economy: what it costs to write values up to `C` in radix `r`.
//!
//! Holding `r^w = C` fixed, the width is `w = ln C / ln r` (the ratio does
//! not depend on which logarithm base is used). Two costs are considered:
//!
//! * the product `E₁ = r·w = r·ln C / ln r`, the area of the packed tree. Its
//!   derivative `(ln C / ln r)(1 − 1/ln r)` vanishes at `ln r = 1`, so the
//!   optimum is `r = e` for every `C`;
//! * the sum `E₂ = r + w = r + ln C / ln r`. Its derivative
//!   `1 − ln C / (r·ln²r)` vanishes where `r·ln²r = ln C`, so the optimum
//!   grows with `C`. `g(r) = r·ln²r` is zero at `r = 1` and strictly
//!   increasing beyond, so the root is unique and is found by bisection.
//!
//! The remaining functions put numbers on the ternary-versus-binary
//! comparison: how many bits match a given number of trits, and what share
//! of a device's states a ternary encoding uses.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, Result};

/// Lower end of the bracket searched for the `E₂` optimum.
pub const ROOT_BRACKET_LOW: f64 = 1.0 + 1e-9;

/// Residual tolerance used when the caller does not pick one.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

const MAX_BISECTIONS: usize = 200;
const MAX_NEWTON_STEPS: usize = 3;

/// Which cost to minimise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CostModel {
    /// `E₁ = r·w`
    Product,
    /// `E₂ = r + w`
    Sum,
}

impl CostModel {
    pub fn cost(self, r: f64, upper: f64) -> Result<f64> {
        match self {
            CostModel::Product => e1_cost(r, upper),
            CostModel::Sum => e2_cost(r, upper),
        }
    }
}

/// One point of a sampled cost curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EconomySample {
    pub r: f64,
    pub cost: f64,
}

/// Outcome of solving `r·ln²r = ln C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootResult {
    pub r: f64,
    /// `r·ln²r − ln C` at `r`.
    pub residual: f64,
    pub iterations: usize,
    /// Set only when `|residual|` is within the requested tolerance.
    pub converged: bool,
}

fn check_upper(upper: f64) -> Result<f64> {
    if upper.is_finite() && upper > 1.0 {
        Ok(upper)
    } else {
        Err(Error::InvalidUpperBound(upper))
    }
}

fn check_radix(r: f64) -> Result<f64> {
    if r.is_finite() && r > 1.0 {
        Ok(r)
    } else {
        Err(Error::InvalidRealRadix(r))
    }
}

#[inline]
fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// Width `w = ln C / ln r` at which `r^w = C`.
pub fn fractional_width(upper: f64, r: f64) -> Result<f64> {
    let upper = check_upper(upper)?;
    let r = check_radix(r)?;
    Ok(ln(upper) / ln(r))
}

/// Same width, computed with logarithms in an arbitrary base.
pub fn fractional_width_in_base(upper: f64, r: f64, base: f64) -> Result<f64> {
    let upper = check_upper(upper)?;
    let r = check_radix(r)?;
    let base = check_radix(base)?;
    let log_base = |x: f64| ln(x) / ln(base);
    Ok(log_base(upper) / log_base(r))
}

/// `E₁ = r·ln C / ln r`.
pub fn e1_cost(r: f64, upper: f64) -> Result<f64> {
    Ok(r * fractional_width(upper, r)?)
}

/// Minimiser of `E₁`, which is `e` regardless of `C`.
pub fn e1_optimal_radix() -> f64 {
    core::f64::consts::E
}

/// `E₂ = r + ln C / ln r`.
pub fn e2_cost(r: f64, upper: f64) -> Result<f64> {
    Ok(r + fractional_width(upper, r)?)
}

/// `dE₂/dr = 1 − ln C / (r·ln²r)`.
pub fn e2_cost_derivative(r: f64, upper: f64) -> Result<f64> {
    let upper = check_upper(upper)?;
    let r = check_radix(r)?;
    let ln_r = ln(r);
    Ok(1.0 - ln(upper) / (r * ln_r * ln_r))
}

/// `f(r) = r·ln²r − ln C`, zero at the `E₂` optimum.
pub fn e2_condition(r: f64, upper: f64) -> Result<f64> {
    let upper = check_upper(upper)?;
    let r = check_radix(r)?;
    Ok(condition(r, ln(upper)))
}

#[inline]
fn condition(r: f64, ln_upper: f64) -> f64 {
    let ln_r = ln(r);
    r * ln_r * ln_r - ln_upper
}

/// Solves `r·ln²r = ln C` for the radix minimising `E₂`.
///
/// Bisection on `[1 + 1e-9, max(C, 16)]` until `|f(r)| <= tolerance`,
/// followed by a few Newton steps that are kept only if they stay inside the
/// bracket and shrink the residual. If the tolerance cannot be met the
/// best point found is returned with `converged == false`.
pub fn e2_optimal_radix(upper: f64, tolerance: f64) -> Result<RootResult> {
    let upper = check_upper(upper)?;
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidTolerance(tolerance));
    }
    let ln_upper = ln(upper);
    let f = |r: f64| condition(r, ln_upper);

    let mut lo = ROOT_BRACKET_LOW;
    let mut hi = upper.max(16.0);
    let (f_lo, f_hi) = (f(lo), f(hi));
    if f_lo > 0.0 || f_hi < 0.0 {
        // Root outside the bracket. Needs ln C below ~1e-18, which no finite
        // f64 above 1 produces, so this is a guard rather than a code path.
        let (r, residual) = if f_lo.abs() <= f_hi.abs() {
            (lo, f_lo)
        } else {
            (hi, f_hi)
        };
        return Ok(RootResult {
            r,
            residual,
            iterations: 0,
            converged: residual.abs() <= tolerance,
        });
    }

    let mut iterations = 0;
    let (mut r, mut residual) = if f_lo.abs() <= f_hi.abs() {
        (lo, f_lo)
    } else {
        (hi, f_hi)
    };
    while residual.abs() > tolerance && iterations < MAX_BISECTIONS {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let f_mid = f(mid);
        if f_mid.abs() < residual.abs() || iterations == 1 {
            r = mid;
            residual = f_mid;
        }
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    for _ in 0..MAX_NEWTON_STEPS {
        if residual == 0.0 {
            break;
        }
        let ln_r = ln(r);
        let slope = ln_r * ln_r + 2.0 * ln_r;
        let next = r - residual / slope;
        if !(next > lo && next < hi) {
            break;
        }
        let f_next = f(next);
        if f_next.abs() >= residual.abs() {
            break;
        }
        iterations += 1;
        r = next;
        residual = f_next;
    }

    Ok(RootResult {
        r,
        residual,
        iterations,
        converged: residual.abs() <= tolerance,
    })
}

/// `steps + 1` evenly spaced samples of a cost curve, endpoints included.
pub fn cost_curve(
    model: CostModel,
    upper: f64,
    r_min: f64,
    r_max: f64,
    steps: usize,
) -> Result<Vec<EconomySample>> {
    let upper = check_upper(upper)?;
    if !(r_min.is_finite() && r_max.is_finite() && r_min > 1.0 && r_min < r_max && steps >= 2) {
        return Err(Error::InvalidGrid {
            r_min,
            r_max,
            steps,
        });
    }
    let span = r_max - r_min;
    (0..=steps)
        .map(|i| {
            let r = if i == steps {
                r_max
            } else {
                r_min + span * (i as f64 / steps as f64)
            };
            let cost = model.cost(r, upper)?;
            if !cost.is_finite() {
                return Err(Error::NonFiniteCost { r });
            }
            Ok(EconomySample { r, cost })
        })
        .collect()
}

/// Bits spanning the same range as `trit_count` trits: `n·ln 3 / ln 2`.
pub fn trit_bit_equivalence(trit_count: u64) -> Result<f64> {
    if trit_count < 1 {
        return Err(Error::ZeroTrits);
    }
    Ok(trit_count as f64 * libm::log2(3.0))
}

/// Number of distinct values held by `trit_count` trits: `3^n`.
pub fn ternary_range(trit_count: u64) -> Result<BigUint> {
    if trit_count < 1 {
        return Err(Error::ZeroTrits);
    }
    Ok(Pow::pow(&BigUint::from(3u32), trit_count))
}

/// Share of a device's states that the encoding actually uses.
pub fn device_state_efficiency(states_available: u32, states_used: u32) -> Result<f64> {
    if states_used < 2 || states_used > states_available {
        return Err(Error::InvalidStates {
            available: states_available,
            used: states_used,
        });
    }
    Ok(states_used as f64 / states_available as f64)
}
