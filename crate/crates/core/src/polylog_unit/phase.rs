use std::f64::consts::TAU;

use super::unit::{li3_gap, li3_unit, principal_pow};
use super::{PrecisionSpec, Rotation, CONSTANTS};
use crate::error::{invalid, Error, Result};

/// `Re Li₃(e^{2πiθ})^{1/3}`, principal cube root.
pub fn re_cbrt_li3(r: Rotation) -> f64 {
    principal_pow(li3_unit(r), 1.0 / 3.0).re
}

/// `Arg Li₃(e^{2πiθ})` in `(-π, π]`.
pub fn arg_li3(r: Rotation) -> f64 {
    let z = li3_unit(r);
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    im.atan2(z.re)
}

/// `f_k(θ) = Re Li₃(e^{2πikθ})^{1/3} / k`.
pub fn f_k(k: u32, theta: f64) -> f64 {
    re_cbrt_li3(Rotation::wrapping(k as f64 * theta)) / k as f64
}

/// `L(θ) = max_{1<=k<=k_max} f_k(θ)` and the smallest maximizing `k`.
pub fn dominance_l(r: Rotation, k_max: u32) -> Result<(f64, u32)> {
    if k_max < 1 {
        return Err(invalid("k_max must be at least 1"));
    }
    let mut best = (f64::NEG_INFINITY, 0);
    for k in 1..=k_max {
        let v = f_k(k, r.theta());
        if v > best.0 {
            best = (v, k);
        }
    }
    Ok(best)
}

/// Bisection for a sign change of `f` on `[lo, hi]`, stopping once the
/// bracket is no wider than `2 tol`; returns its midpoint.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(invalid(format!("tolerance {tol} must be positive")));
    }
    let (f_lo, f_hi) = (f(lo), f(hi));
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }
    let lo_negative = f_lo < 0.0;
    while hi - lo > 2.0 * tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The rotation in `[1/4, 1/2]` where `f_1 = f_2`.
pub fn solve_theta12(p: PrecisionSpec) -> Result<f64> {
    bisect(|t| f_k(1, t) - f_k(2, t), 0.25, 0.5, p.abs_err())
}

/// `Re (ζ(3) - Li₃(e^{2πiθ}))^{1/3}`, principal cube root; zero at `θ = 0`.
pub fn re_cbrt_gap(r: Rotation) -> f64 {
    principal_pow(li3_gap(r), 1.0 / 3.0).re
}

/// `Arg (ζ(3) - Li₃(e^{2πiθ}))`, undefined at `θ = 0`.
pub fn arg_gap(r: Rotation) -> Result<f64> {
    if r.theta() == 0.0 {
        return Err(invalid("the gap vanishes at rotation 0, its argument is undefined"));
    }
    let g = li3_gap(r);
    let im = if g.im == 0.0 { 0.0 } else { g.im };
    Ok(im.atan2(g.re))
}

/// `(7ζ(3))^{1/3} / 2^{5/3}`, half of [`re_cbrt_gap`] at rotation 1/2.
pub fn theta1_target() -> f64 {
    (7.0 * CONSTANTS.zeta3).cbrt() / 2f64.powf(5.0 / 3.0)
}

/// The angle `x ∈ (0, π)` in radians with `Re (ζ(3) - Li₃(e^{ix}))^{1/3}`
/// equal to [`theta1_target`].
pub fn solve_theta1(p: PrecisionSpec) -> Result<f64> {
    let target = theta1_target();
    let g = |x: f64| re_cbrt_gap(Rotation::wrapping(x / TAU)) - target;
    bisect(g, 0.0, std::f64::consts::PI, p.abs_err())
}
