use std::f64::consts::TAU;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::bernoulli::bernoulli_f64;
use super::hurwitz::hurwitz_zeta;
use super::{PrecisionSpec, Rotation, CONSTANTS};
use crate::error::Result;
use crate::exact_qseries::root::unit;
use crate::exact_qseries::RootOfUnity;

/// `ζ(2j)` for `j = 0..ZETA_EVEN_LEN`: Bernoulli numbers for `j <= 3`, direct
/// sums above (the tail past 2000 terms is below `10^{-24}` there).
const ZETA_EVEN_LEN: usize = 64;

fn zeta_even() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = vec![-0.5];
        let mut ratio = 1.0;
        for j in 1..ZETA_EVEN_LEN {
            ratio *= TAU * TAU / ((2 * j - 1) * (2 * j)) as f64;
            if j <= 3 {
                out.push(bernoulli_f64(2 * j).abs() * ratio / 2.0);
            } else {
                out.push((1..=2000).rev().map(|n| (n as f64).powi(-2 * j as i32)).sum());
            }
        }
        out
    })
}

/// `ζ(3) - Re Li₃(e^{2πiθ})` for `0 < θ <= 1/2`, from the expansion of
/// `Li₃(e^μ)` around `μ = 0`:
/// `(3/4 - ln(φ)/2) φ² + φ² Σ_{j>=1} ζ(2j) θ^{2j} / (j(2j+1)(2j+2))`, `φ = 2πθ`.
fn gap_re(theta: f64) -> f64 {
    let phi = TAU * theta;
    let t2 = theta * theta;
    let zeta = zeta_even();
    let mut pow = 1.0;
    let mut series = 0.0;
    for (j, z) in zeta.iter().enumerate().skip(1) {
        pow *= t2;
        let jf = j as f64;
        let term = z * pow / (jf * (2.0 * jf + 1.0) * (2.0 * jf + 2.0));
        series += term;
        if term < 1e-18 * series {
            break;
        }
    }
    phi * phi * (0.75 - 0.5 * phi.ln() + series)
}

/// `Im Li₃(e^{2πiθ}) = φ(π - φ)(2π - φ)/12` with `φ = 2πθ`, written in `θ`.
fn li3_im(theta: f64) -> f64 {
    TAU.powi(3) / 12.0 * theta * (0.5 - theta) * (1.0 - theta)
}

/// `Li₃(e^{2πiθ})` for any rotation, accurate to a few ulps of `ζ(3)`.
pub fn li3_unit(r: Rotation) -> Complex64 {
    let theta = r.theta();
    if theta == 0.0 {
        return Complex64::new(CONSTANTS.zeta3, 0.0);
    }
    let folded = theta.min(1.0 - theta);
    Complex64::new(CONSTANTS.zeta3 - gap_re(folded), li3_im(theta))
}

/// `ζ(3) - Li₃(e^{2πiθ})`, computed without cancellation near `θ = 0`.
pub fn li3_gap(r: Rotation) -> Complex64 {
    let theta = r.theta();
    if theta == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(gap_re(theta.min(1.0 - theta)), -li3_im(theta))
}

/// `Li₃(ζ_b^a) = b^{-3} Σ_{r=1}^{b} ζ_b^{ar} ζ(3, r/b)`, with the Hurwitz
/// values from Euler–Maclaurin. Returns the value and an error bound.
pub fn li3_rational(z: RootOfUnity, p: PrecisionSpec) -> Result<(Complex64, f64)> {
    let (a, b) = (z.numer(), z.denom());
    let bf = b as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    // Sum the small terms first.
    for r in (1..=b).rev() {
        let (h, e) = hurwitz_zeta(3, r as f64 / bf, p.abs_err() * bf * bf)?;
        acc += unit(a * r % b, b) * h;
        err += e + 2.0 * f64::EPSILON * h;
    }
    let scale = bf.powi(-3);
    let value = acc * scale;
    Ok((value, err * scale + 4.0 * f64::EPSILON * value.norm()))
}

/// `z^p` on the principal branch, `Arg z ∈ (-π, π]`.
pub fn principal_pow(z: Complex64, p: f64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    // A negative zero imaginary part would select Arg = -π.
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    let arg = im.atan2(z.re);
    Complex64::from_polar(z.norm().powf(p), p * arg)
}
