//! Polylogarithms on the unit circle and the phase analysis built on them:
//! dominance of the `k = 1` and `k = 2` branches, the transition angle
//! `θ₁₂`, and the overpartition angle `θ₁`.
//!
//! Angles are rotations `θ ∈ [0, 1)` standing for `e^{2πiθ}` unless a
//! function says otherwise.

mod bernoulli;
mod differences;
mod hurwitz;
mod phase;
mod series;
mod unit;

use std::fmt;

use crate::error::{invalid, Result};
use crate::exact_qseries::RootOfUnity;

pub use bernoulli::{bernoulli, bernoulli_f64};
pub use differences::{
    forward_difference, gap_coefficient_difference, inverse_power_difference, CertifiedInterval,
};
pub use hurwitz::hurwitz_zeta;
pub use phase::{
    arg_gap, arg_li3, bisect, dominance_l, f_k, re_cbrt_gap, re_cbrt_li3, solve_theta1,
    solve_theta12, theta1_target,
};
pub use series::li;
pub use unit::{li3_gap, li3_rational, li3_unit, principal_pow};

/// A point `e^{2πiθ}` of the unit circle, `0 <= θ < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rotation(f64);

impl Rotation {
    pub fn new(theta: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&theta) {
            return Err(invalid(format!("rotation {theta} is outside [0, 1)")));
        }
        Ok(Self(theta))
    }

    /// Reduces any finite real modulo 1.
    pub fn wrapping(theta: f64) -> Self {
        let t = theta.rem_euclid(1.0);
        // rem_euclid can round up to exactly 1.0 for tiny negative inputs
        Self(if t >= 1.0 { 0.0 } else { t })
    }

    pub fn theta(self) -> f64 {
        self.0
    }

    /// `1 - θ` (mod 1).
    pub fn conj(self) -> Self {
        Self::wrapping(-self.0)
    }
}

impl From<RootOfUnity> for Rotation {
    fn from(z: RootOfUnity) -> Self {
        Self(z.rotation())
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Target absolute error of a numerical evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionSpec {
    abs_err: f64,
}

impl PrecisionSpec {
    pub fn new(abs_err: f64) -> Result<Self> {
        if !(abs_err > 0.0 && abs_err.is_finite()) {
            return Err(invalid(format!("target error {abs_err} must be positive")));
        }
        Ok(Self { abs_err })
    }

    pub fn abs_err(self) -> f64 {
        self.abs_err
    }
}

impl Default for PrecisionSpec {
    fn default() -> Self {
        Self { abs_err: 1e-13 }
    }
}

/// Constants appearing in the main terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub zeta3: f64,
    pub zeta2: f64,
    pub zeta_prime_minus1: f64,
}

/// `ζ(3)` to 50 digits.
pub const ZETA3_DIGITS: &str = "1.2020569031595942853997381615114499907649862923405";
/// `ζ'(-1) = 1/12 - log A`, with `A` the Glaisher–Kinkelin constant, to 50 digits.
pub const ZETA_PRIME_MINUS1_DIGITS: &str = "-0.16542114370045092921391966024278064276403638033520";

pub const CONSTANTS: Constants = Constants {
    zeta3: 1.202_056_903_159_594_3,
    zeta2: std::f64::consts::PI * std::f64::consts::PI / 6.0,
    zeta_prime_minus1: -0.165_421_143_700_450_93,
};
