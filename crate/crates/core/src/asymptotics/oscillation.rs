use std::f64::consts::{PI, TAU};
use std::ops::RangeInclusive;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{invalid, Result};
use crate::exact_qseries::{difference_series, RootOfUnity, TraceTable};
use crate::polylog_unit::{li3_rational, principal_pow, PrecisionSpec};

/// `pp(a1, b, n) - pp(a2, b, n) ≈ B n^{-2/3} e^{c λ₁ n^{2/3}} cos(α + c λ₂ n^{2/3})`
/// with `c = 3 · 2^{-2/3}` and `λ₁ + iλ₂ = Li₃(ζ_b)^{1/3}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillationModel {
    pub a1: u64,
    pub a2: u64,
    pub b: u64,
    pub big_b: f64,
    /// In `[0, 2π)`.
    pub alpha: f64,
    pub lambda1: f64,
    pub lambda2: f64,
}

fn rate() -> f64 {
    3.0 * 2f64.powf(-2.0 / 3.0)
}

/// `B e^{iα} = 2^{2/3}/(b√(3π)) (ζ_b^{-a1} - ζ_b^{-a2}) (1 - ζ_b)^{1/12} (λ₁ + iλ₂)^{1/2}`.
pub fn oscillation_model(a1: u64, a2: u64, b: u64, p: PrecisionSpec) -> Result<OscillationModel> {
    if b < 3 {
        return Err(invalid(format!("the cosine model needs b >= 3, got {b}")));
    }
    if a1 % b == a2 % b {
        return Err(invalid(format!("classes {a1} and {a2} coincide modulo {b}")));
    }
    let zeta = RootOfUnity::new(1, b)?;
    let (li, _) = li3_rational(zeta, p)?;
    let lambda = principal_pow(li, 1.0 / 3.0);
    let unit = |a: u64| RootOfUnity::new(-(a as i64 % b as i64), b).map(|r| r.to_c64());
    let w = 2f64.powf(2.0 / 3.0) / (b as f64 * (3.0 * PI).sqrt())
        * (unit(a1)? - unit(a2)?)
        * principal_pow(Complex64::new(1.0, 0.0) - zeta.to_c64(), 1.0 / 12.0)
        * principal_pow(lambda, 0.5);
    let alpha = w.arg().rem_euclid(TAU);
    Ok(OscillationModel {
        a1,
        a2,
        b,
        big_b: w.norm(),
        alpha: if alpha >= TAU { 0.0 } else { alpha },
        lambda1: lambda.re,
        lambda2: lambda.im,
    })
}

impl OscillationModel {
    /// `B e^{iα}`.
    pub fn amplitude(&self) -> Complex64 {
        Complex64::from_polar(self.big_b, self.alpha)
    }

    /// `B n^{power} e^{c λ₁ n^{2/3}}`.
    pub fn envelope(&self, n: u64, power: f64) -> f64 {
        let nf = n as f64;
        self.big_b * nf.powf(power) * (rate() * self.lambda1 * nf.powf(2.0 / 3.0)).exp()
    }

    /// `cos(α + c λ₂ n^{2/3})`.
    pub fn cosine(&self, n: u64) -> f64 {
        (self.alpha + rate() * self.lambda2 * (n as f64).powf(2.0 / 3.0)).cos()
    }
}

/// `B n^{-2/3} e^{c λ₁ n^{2/3}} cos(α + c λ₂ n^{2/3})`.
pub fn predicted_difference(m: &OscillationModel, n: u64) -> f64 {
    m.envelope(n, -2.0 / 3.0) * m.cosine(n)
}

/// `sup_n |diff_n / envelope(n, n_power) - cos(...)|` over `range`, with the
/// exact differences taken from the table.
pub fn normalization_sup(
    m: &OscillationModel,
    t: &TraceTable,
    n_power: f64,
    range: RangeInclusive<usize>,
) -> Result<f64> {
    let start = *range.start();
    if start == 0 {
        return Err(invalid("the normalization is undefined at n = 0"));
    }
    let diffs = difference_series(t, m.a1, m.a2, m.b, range)?;
    Ok(diffs
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let n = (start + i) as u64;
            let x = d.to_f64().unwrap_or(f64::NAN) / m.envelope(n, n_power);
            (x - m.cosine(n)).abs()
        })
        .fold(0.0, f64::max))
}
