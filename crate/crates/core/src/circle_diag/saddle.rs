//! The saddle point `t_n`, the logarithm of the two-variable product near a
//! rational point, and the error terms `E_{h,k}` with their limits.

use num_complex::Complex64;
use num_integer::Integer;

use crate::asymptotics::{trace_case, TraceCase};
use crate::error::{invalid, Error, Result};
use crate::exact_qseries::root::unit;
use crate::exact_qseries::RootOfUnity;
use crate::polylog_unit::{li3_rational, principal_pow, PrecisionSpec, CONSTANTS};

/// Most `ν` terms [`log_pp_direct`] will sum before giving up.
pub const LOG_PP_TERM_CAP: u64 = 100_000_000;

/// A point `t` with `Re t > 0`, where `q = e^{-t}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddleParam(Complex64);

impl SaddleParam {
    pub fn new(t: Complex64) -> Result<Self> {
        if !(t.re > 0.0 && t.re.is_finite() && t.im.is_finite()) {
            return Err(invalid(format!("saddle parameter {t} needs a positive finite real part")));
        }
        Ok(Self(t))
    }

    pub fn real(t: f64) -> Result<Self> {
        Self::new(Complex64::new(t, 0.0))
    }

    pub fn t(self) -> Complex64 {
        self.0
    }

    pub fn conj(self) -> Self {
        Self(self.0.conj())
    }

    /// `t - 2πiθ`.
    pub fn shifted(self, theta: f64) -> Self {
        Self(self.0 - Complex64::new(0.0, std::f64::consts::TAU * theta))
    }
}

/// The saddle point used for `T_n(ζ)`:
/// `2^{1/3} Li₃(ζ)^{1/3} n^{-1/3}` when `a/b < θ₁₂` (including `ζ = 1`), and
/// `Li₃(ζ²)^{1/3} / (2^{2/3} n^{1/3})` when `θ₁₂ < a/b <= 1/2`.
/// Below the real axis the value for `ζ̄` is conjugated.
pub fn t_n_trace(z: RootOfUnity, n: u64) -> Result<SaddleParam> {
    if n == 0 {
        return Err(invalid("t_n needs n >= 1"));
    }
    if !z.in_upper_half() {
        return Ok(t_n_trace(z.conj(), n)?.conj());
    }
    let p = PrecisionSpec::default();
    let nf = (n as f64).cbrt();
    let t = if z.is_one() {
        Complex64::new(2f64.cbrt() * CONSTANTS.zeta3.cbrt() / nf, 0.0)
    } else {
        match trace_case(z)? {
            TraceCase::Primary => {
                let (li, _) = li3_rational(z, p)?;
                2f64.cbrt() * principal_pow(li, 1.0 / 3.0) / nf
            }
            TraceCase::Doubled | TraceCase::MinusOne => {
                let (li, _) = li3_rational(z.pow(2), p)?;
                principal_pow(li, 1.0 / 3.0) / (2f64.powf(2.0 / 3.0) * nf)
            }
        }
    };
    SaddleParam::new(t)
}

fn check_hk(h: i64, k: u64) -> Result<()> {
    if k == 0 || h.unsigned_abs().gcd(&k) != 1 {
        return Err(invalid(format!("{h}/{k} is not a reduced fraction")));
    }
    Ok(())
}

/// `Log PP(ζ_b^a; ζ_k^h e^{-t})` together with a bound on its absolute error.
pub(crate) fn log_pp_bounded(
    z: RootOfUnity,
    h: i64,
    k: u64,
    t: SaddleParam,
    p: PrecisionSpec,
) -> Result<(Complex64, f64)> {
    check_hk(h, k)?;
    let t = t.t();
    let (a, b) = (z.numer(), z.denom());
    let bk = b * k;
    let hb = (h.rem_euclid(k as i64) as u64) * b;
    let r = (-t.re).exp();
    let one = Complex64::new(1.0, 0.0);
    // Neumaier sums of the real and imaginary parts.
    let (mut re, mut re_c, mut im, mut im_c) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut rounding = 0.0;
    let mut nu = 0u64;
    let mut r_nu = 1.0;
    loop {
        nu += 1;
        r_nu *= r;
        let phase = unit((a * k + hb * (nu % bk)) % bk, bk);
        let x = phase * (-(nu as f64) * t).exp();
        let term = -(nu as f64) * (one - x).ln();
        neumaier(&mut re, &mut re_c, term.re);
        neumaier(&mut im, &mut im_c, term.im);
        rounding += term.norm() * (nu as f64 * t.norm() + 8.0);
        // Σ_{ν>V} ν |Log(1 - x_ν)| <= Σ_{ν>V} ν r^ν / (1 - r^{V+1})
        let rv = r_nu * r;
        let vf = nu as f64;
        let tail = rv * ((vf + 1.0) - vf * r) / ((1.0 - r) * (1.0 - r)) / (1.0 - rv);
        if tail <= 0.5 * p.abs_err() || (tail == 0.0 && r_nu == 0.0) {
            let value = Complex64::new(re + re_c, im + im_c);
            return Ok((value, tail + rounding * f64::EPSILON));
        }
        if nu >= LOG_PP_TERM_CAP {
            return Err(Error::Resource(format!(
                "product logarithm at Re t = {:e} needs more than {LOG_PP_TERM_CAP} factors",
                t.re
            )));
        }
    }
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let s = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - s) + x;
    } else {
        *comp += (x - s) + *sum;
    }
    *sum = s;
}

/// `Log PP(ζ_b^a; ζ_k^h e^{-t}) = -Σ_{ν>=1} ν Log(1 - ζ_b^a ζ_k^{hν} e^{-νt})`,
/// summed until the geometric tail bound drops below half of `p`.
pub fn log_pp_direct(z: RootOfUnity, h: i64, k: u64, t: SaddleParam, p: PrecisionSpec) -> Result<Complex64> {
    Ok(log_pp_bounded(z, h, k, t, p)?.0)
}

/// `E_{h,k}(ζ; t) = Log PP(ζ; ζ_k^h e^{-t}) - Li₃(ζ^k)/(k³t²)` and an error bound.
pub(crate) fn error_term_bounded(
    z: RootOfUnity,
    h: i64,
    k: u64,
    t: SaddleParam,
    p: PrecisionSpec,
) -> Result<(Complex64, f64)> {
    let (lp, e1) = log_pp_bounded(z, h, k, t, p)?;
    let (li, e2) = li3_rational(z.pow(k as i64), p)?;
    let denom = (k as f64).powi(3) * t.t() * t.t();
    let main = li / denom;
    Ok((lp - main, e1 + e2 / denom.norm() + 4.0 * f64::EPSILON * main.norm()))
}

/// `E_{h,k}(ζ; t) = Log PP(ζ; ζ_k^h e^{-t}) - Li₃(ζ^k)/(k³t²)`.
pub fn error_term_e(z: RootOfUnity, h: i64, k: u64, t: SaddleParam, p: PrecisionSpec) -> Result<Complex64> {
    Ok(error_term_bounded(z, h, k, t, p)?.0)
}

/// The four major-arc limits of `E_{h,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaddleCase {
    /// `ζ ≠ 1` before the transition angle, arc `0/1`: `(1/12) Log(1 - ζ)`.
    Primary,
    /// `ζ = 1`, arc `0/1`: `(1/12) Log t + ζ'(-1)`.
    One,
    /// `ζ` past the transition angle, arc `1/2`:
    /// `(1/6) Log(1 - ζ) - (1/12) Log(1 + ζ)`.
    Doubled,
    /// `ζ = -1`, arc `1/2`: `-(1/12) Log t - ζ'(-1)`.
    MinusOne,
}

impl SaddleCase {
    pub fn number(self) -> u8 {
        match self {
            Self::Primary => 1,
            Self::One => 2,
            Self::Doubled => 3,
            Self::MinusOne => 4,
        }
    }

    pub fn from_number(case: u8) -> Result<Self> {
        Ok(match case {
            1 => Self::Primary,
            2 => Self::One,
            3 => Self::Doubled,
            4 => Self::MinusOne,
            _ => return Err(invalid(format!("case must be 1 to 4, got {case}"))),
        })
    }

    /// The case that governs the major arc of `T_n(ζ)`.
    pub fn of(z: RootOfUnity) -> Result<Self> {
        if z.is_one() {
            return Ok(Self::One);
        }
        Ok(match trace_case(z)? {
            TraceCase::Primary => Self::Primary,
            TraceCase::Doubled => Self::Doubled,
            TraceCase::MinusOne => Self::MinusOne,
        })
    }

    /// The dominant arc `h/k`.
    pub fn arc(self) -> (i64, u64) {
        match self {
            Self::Primary | Self::One => (0, 1),
            Self::Doubled | Self::MinusOne => (1, 2),
        }
    }

    /// The limiting value of `E_{h,k}(ζ; t)` as `t → 0`.
    pub fn limit(self, z: RootOfUnity, t: SaddleParam) -> Complex64 {
        let zeta = z.to_c64();
        let one = Complex64::new(1.0, 0.0);
        let zp = CONSTANTS.zeta_prime_minus1;
        match self {
            Self::Primary => (one - zeta).ln() / 12.0,
            Self::One => t.t().ln() / 12.0 + zp,
            Self::Doubled => (one - zeta).ln() / 6.0 - (one + zeta).ln() / 12.0,
            Self::MinusOne => -t.t().ln() / 12.0 - zp,
        }
    }
}

/// One evaluation of `E_{h,k}(ζ; t_n - 2πiθ)` against its limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddleRow {
    pub n: u64,
    pub t: Complex64,
    pub value: Complex64,
    pub limit: Complex64,
    /// `|E - limit|`.
    pub deviation: f64,
    /// Error bound on `value`.
    pub err: f64,
}

/// Compares `E_{h,k}(ζ; t_n - 2πiθ)` on the dominant arc with its limit.
/// `ζ` must belong to `case`.
pub fn saddle_deviation(
    case: SaddleCase,
    z: RootOfUnity,
    n: u64,
    theta: f64,
    p: PrecisionSpec,
) -> Result<SaddleRow> {
    let actual = SaddleCase::of(z)?;
    if actual != case {
        return Err(invalid(format!("ζ = e^(2πi {z}) belongs to case {}, not {}", actual.number(), case.number())));
    }
    let (h, k) = case.arc();
    let t = t_n_trace(z, n)?.shifted(theta);
    let (value, err) = error_term_bounded(z, h, k, t, p)?;
    let limit = case.limit(z, t);
    Ok(SaddleRow { n, t: t.t(), value, limit, deviation: (value - limit).norm(), err })
}

/// Least-squares slope of `log deviation` against `log n`.
pub fn loglog_slope(rows: &[SaddleRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n as f64).ln(), r.deviation.ln())).collect();
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) = pts
        .iter()
        .fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx) * (x - mx)));
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(a: i64, b: u64) -> RootOfUnity {
        RootOfUnity::new(a, b).unwrap()
    }

    fn p() -> PrecisionSpec {
        PrecisionSpec::default()
    }

    #[test]
    fn saddle_points() {
        let t = t_n_trace(RootOfUnity::ONE, 1000).unwrap().t();
        assert_eq!(t.im, 0.0);
        assert!((t.re - (2.0 * CONSTANTS.zeta3).cbrt() / 10.0).abs() < 1e-15);
        let t = t_n_trace(RootOfUnity::MINUS_ONE, 8).unwrap().t();
        assert!(t.im == 0.0 && (t.re - CONSTANTS.zeta3.cbrt() / 2f64.powf(5.0 / 3.0)).abs() < 1e-14, "{t}");
        let z = root(1, 5);
        let t = t_n_trace(z, 1000).unwrap().t();
        let (li, _) = li3_rational(z, p()).unwrap();
        assert!(t.re > 0.0);
        assert!((t.arg().abs() - li.arg().abs() / 3.0).abs() < 1e-14);
        let s = t_n_trace(z.conj(), 1000).unwrap().t();
        assert_eq!(s, t.conj());
        assert!(t_n_trace(z, 0).is_err());
    }

    #[test]
    fn macmahon_logarithm() {
        let t = 0.7;
        let mut direct = 0.0;
        for n in 1..200 {
            direct -= n as f64 * (1.0 - (-t * n as f64).exp()).ln();
        }
        let v = log_pp_direct(RootOfUnity::ONE, 0, 1, SaddleParam::real(t).unwrap(), p()).unwrap();
        assert!((v.re - direct).abs() < 1e-13 && v.im == 0.0);
    }

    #[test]
    fn minus_one_product() {
        // Π (1 + q^n)^{-n} at q = e^{-1}
        let mut prod = 1.0;
        for n in 1..100 {
            prod /= (1.0 + (-(n as f64)).exp()).powi(n);
        }
        let v = log_pp_direct(RootOfUnity::MINUS_ONE, 0, 1, SaddleParam::real(1.0).unwrap(), p()).unwrap();
        assert!((v.re - prod.ln()).abs() < 1e-13, "{} {}", v.re, prod.ln());
    }

    #[test]
    fn conjugation() {
        let t = SaddleParam::new(Complex64::new(0.3, 0.2)).unwrap();
        let z = root(2, 7);
        let v = log_pp_direct(z, 1, 3, t, p()).unwrap();
        let w = log_pp_direct(z.conj(), -1, 3, t.conj(), p()).unwrap();
        assert!((v - w.conj()).norm() < 1e-12);
        assert!(log_pp_direct(z, 2, 4, t, p()).is_err());
    }

    #[test]
    fn tiny_real_part_hits_the_cap() {
        let t = SaddleParam::real(1e-9).unwrap();
        assert!(matches!(
            log_pp_direct(RootOfUnity::ONE, 0, 1, t, p()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn limits_are_approached() {
        let cases = [
            (SaddleCase::Primary, root(1, 3)),
            (SaddleCase::One, RootOfUnity::ONE),
            (SaddleCase::Doubled, root(12, 25)),
            (SaddleCase::MinusOne, RootOfUnity::MINUS_ONE),
        ];
        for (case, z) in cases {
            let rows: Vec<SaddleRow> =
                [1000, 10_000].iter().map(|&n| saddle_deviation(case, z, n, 0.0, p()).unwrap()).collect();
            assert!(rows[1].deviation < rows[0].deviation, "{case:?}");
            assert!(rows[1].deviation < 1e-2, "{case:?}: {}", rows[1].deviation);
        }
        assert!(saddle_deviation(SaddleCase::One, root(1, 3), 100, 0.0, p()).is_err());
    }
}
