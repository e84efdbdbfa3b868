use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{invalid, Result};
use crate::exact_qseries::RootOfUnity;
use crate::polylog_unit::{li3_rational, principal_pow, solve_theta12, PrecisionSpec, CONSTANTS};

/// Half-width of the band around `θ₁₂` where no formula is claimed.
pub const THETA12_GUARD: f64 = 1e-9;

/// `θ₁₂` to near double precision, computed once.
pub fn theta12() -> f64 {
    static VALUE: OnceLock<f64> = OnceLock::new();
    *VALUE.get_or_init(|| {
        solve_theta12(PrecisionSpec::new(1e-15).expect("positive"))
            .expect("f1 - f2 changes sign on [1/4, 1/2]")
    })
}

/// `prefactor · n^{n_power} · (-1)^{n·parity} · exp(exp_coeff · n^{2/3})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MainTermEstimate {
    pub prefactor: Complex64,
    pub exp_coeff: Complex64,
    pub n_power: Rational64,
    pub parity: bool,
}

impl MainTermEstimate {
    fn n_power_f64(&self) -> f64 {
        *self.n_power.numer() as f64 / *self.n_power.denom() as f64
    }

    /// The principal logarithm of the value, without the parity sign.
    pub fn ln_abs_part(&self, n: u64) -> Complex64 {
        let nf = n as f64;
        self.prefactor.ln() + self.n_power_f64() * nf.ln() + self.exp_coeff * nf.powf(2.0 / 3.0)
    }

    pub fn eval(&self, n: u64) -> Complex64 {
        let v = self.ln_abs_part(n).exp();
        if self.parity && n % 2 == 1 {
            -v
        } else {
            v
        }
    }

    pub fn conj(&self) -> Self {
        Self { prefactor: self.prefactor.conj(), exp_coeff: self.exp_coeff.conj(), ..*self }
    }
}

/// Which formula governs `T_n(ζ)` for `0 < a/b <= 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceCase {
    /// `0 < a/b < θ₁₂`: the arc at `q = 1` dominates.
    Primary,
    /// `θ₁₂ < a/b < 1/2`: the arc at `q = -1` dominates.
    Doubled,
    /// `ζ = -1`.
    MinusOne,
}

/// Case selection after reflecting `a/b > 1/2` to `1 - a/b`.
pub fn trace_case(z: RootOfUnity) -> Result<TraceCase> {
    if z.is_one() {
        return Err(invalid("ζ = 1 is covered by the plane partition formula"));
    }
    let z = if z.in_upper_half() { z } else { z.conj() };
    if z == RootOfUnity::MINUS_ONE {
        return Ok(TraceCase::MinusOne);
    }
    let x = z.rotation();
    let t12 = theta12();
    if (x - t12).abs() <= THETA12_GUARD {
        return Err(invalid(format!("{z} is within {THETA12_GUARD:e} of the transition angle")));
    }
    Ok(if x < t12 { TraceCase::Primary } else { TraceCase::Doubled })
}

fn sqrt_3pi() -> f64 {
    (3.0 * PI).sqrt()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The main term of `T_n(ζ)`. Roots below the real axis are handled by
/// conjugating the result for `ζ̄`.
pub fn trace_main_term(z: RootOfUnity, p: PrecisionSpec) -> Result<MainTermEstimate> {
    let case = trace_case(z)?;
    if !z.in_upper_half() {
        return Ok(trace_main_term(z.conj(), p)?.conj());
    }
    let zeta = z.to_c64();
    let one = c(1.0);
    Ok(match case {
        TraceCase::Primary => {
            let (li, _) = li3_rational(z, p)?;
            MainTermEstimate {
                prefactor: principal_pow(one - zeta, 1.0 / 12.0) * principal_pow(li, 1.0 / 6.0)
                    / (2f64.cbrt() * sqrt_3pi()),
                exp_coeff: 3.0 * 2f64.powf(-2.0 / 3.0) * principal_pow(li, 1.0 / 3.0),
                n_power: Rational64::new(-2, 3),
                parity: false,
            }
        }
        TraceCase::Doubled => {
            let (li, _) = li3_rational(z.pow(2), p)?;
            MainTermEstimate {
                prefactor: principal_pow(one - zeta, 1.0 / 6.0) * principal_pow(li, 1.0 / 6.0)
                    / (principal_pow(one + zeta, 1.0 / 12.0) * 2f64.powf(5.0 / 6.0) * sqrt_3pi()),
                exp_coeff: 3.0 * 2f64.powf(-5.0 / 3.0) * principal_pow(li, 1.0 / 3.0),
                n_power: Rational64::new(-2, 3),
                parity: true,
            }
        }
        TraceCase::MinusOne => {
            let z3 = CONSTANTS.zeta3;
            MainTermEstimate {
                prefactor: c((-CONSTANTS.zeta_prime_minus1).exp() * z3.powf(5.0 / 36.0)
                    / (2f64.powf(0.75) * sqrt_3pi())),
                exp_coeff: c(3.0 * 2f64.powf(-5.0 / 3.0) * z3.cbrt()),
                n_power: Rational64::new(-23, 36),
                parity: true,
            }
        }
    })
}

/// The classical main term of `pp(n)`.
pub fn wright_pp_main_term() -> MainTermEstimate {
    let z3 = CONSTANTS.zeta3;
    MainTermEstimate {
        prefactor: c(z3.powf(7.0 / 36.0) * CONSTANTS.zeta_prime_minus1.exp()
            / (2f64.powf(11.0 / 36.0) * sqrt_3pi())),
        exp_coeff: c(3.0 * z3.cbrt() / 2f64.powf(2.0 / 3.0)),
        n_power: Rational64::new(-25, 36),
        parity: false,
    }
}

/// The main term of `A_n(ζ)` for `ζ ≠ 1`.
pub fn over_main_term(z: RootOfUnity, p: PrecisionSpec) -> Result<MainTermEstimate> {
    if z.is_one() {
        return Err(invalid("the overpartition product collapses to 1 at ζ = 1"));
    }
    let (li, _) = li3_rational(z, p)?;
    let gap = c(CONSTANTS.zeta3) - li;
    let one_minus = c(1.0) - z.to_c64();
    Ok(MainTermEstimate {
        prefactor: principal_pow(one_minus, -1.0 / 12.0)
            * CONSTANTS.zeta_prime_minus1.exp()
            * principal_pow(gap, 7.0 / 36.0)
            / (2f64.powf(11.0 / 36.0) * sqrt_3pi()),
        exp_coeff: 3.0 * 2f64.powf(-2.0 / 3.0) * principal_pow(gap, 1.0 / 3.0),
        n_power: Rational64::new(-25, 36),
        parity: false,
    })
}
