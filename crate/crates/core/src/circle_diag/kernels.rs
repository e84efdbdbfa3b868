//! The kernels of the rewritten error term and their closed-form `j`-sums.
//!
//! Near `w = 0` the direct formulas cancel badly, so inside `|w| < 1` they are
//! replaced by their Laurent series in Bernoulli numbers or polynomials.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::exact_qseries::root::unit;
use crate::polylog_unit::bernoulli_f64;

/// Number of Laurent terms; the series converge like `(|w|/2π)^n`.
const SERIES_TERMS: usize = 40;
const SERIES_RADIUS: f64 = 1.0;

fn bernoulli_numbers() -> &'static [f64] {
    static B: OnceLock<Vec<f64>> = OnceLock::new();
    B.get_or_init(|| (0..=SERIES_TERMS + 2).map(bernoulli_f64).collect())
}

/// `B_n(x) = Σ_k C(n, k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let b = bernoulli_numbers();
    let mut binom = 1.0;
    let mut acc = 0.0;
    for (k, bk) in b.iter().enumerate().take(n + 1) {
        acc += binom * bk * x.powi((n - k) as i32);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}

fn check_regular(w: Complex64) -> Result<()> {
    if !(w.re.is_finite() && w.im.is_finite()) || w.norm() == 0.0 {
        return Err(invalid(format!("kernel argument {w} is singular")));
    }
    if (1.0 - (-w).exp()).norm() < 1e-12 {
        return Err(invalid(format!("kernel argument {w} is on the singular set e^{{-w}} = 1")));
    }
    Ok(())
}

/// `φ_a(w) = e^{-w-aw}/(1-e^{-w})² + a e^{-aw}/(1-e^{-w}) - 1/w²`,
/// holomorphic at `w = 0` with value `-a²/2 + a/2 - 1/12`.
///
/// Since `φ_a(w) = -d/dw[e^{(1-a)w}/(e^w - 1)] - 1/w²`, its Taylor series is
/// `-Σ_{n>=2} (n-1) B_n(1-a) w^{n-2} / n!`.
pub fn phi(a: f64, w: Complex64) -> Result<Complex64> {
    if !(0.0..=1.0).contains(&a) {
        return Err(invalid(format!("φ_a needs 0 <= a <= 1, got {a}")));
    }
    if w.norm() < SERIES_RADIUS {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut wp = Complex64::new(1.0, 0.0);
        let mut fact = 2.0;
        for n in 2..SERIES_TERMS {
            acc -= (n - 1) as f64 * bernoulli_poly(n, 1.0 - a) / fact * wp;
            wp *= w;
            fact *= (n + 1) as f64;
        }
        return Ok(acc);
    }
    check_regular(w)?;
    let e = (-w).exp();
    let one = Complex64::new(1.0, 0.0);
    let ea = (-a * w).exp();
    Ok(e * ea / ((one - e) * (one - e)) + a * ea / (one - e) - one / (w * w))
}

/// `g_{j,k}(w) = e^{-w-jw/k}/(w(1-e^{-w})²) + (j/k) e^{-jw/k}/(w(1-e^{-w})) - 1/w³`,
/// which is `φ_{j/k}(w)/w`.
pub fn g_jk(j: u64, k: u64, w: Complex64) -> Result<Complex64> {
    if k == 0 || j == 0 || j > k {
        return Err(invalid(format!("g_jk needs 1 <= j <= k, got j = {j}, k = {k}")));
    }
    if w.norm() == 0.0 {
        return Err(invalid("g_jk has a pole at w = 0"));
    }
    let a = j as f64 / k as f64;
    if w.norm() < SERIES_RADIUS {
        return Ok(phi(a, w)? / w);
    }
    check_regular(w)?;
    let e = (-w).exp();
    let one = Complex64::new(1.0, 0.0);
    let ea = (-a * w).exp();
    Ok(e * ea / (w * (one - e) * (one - e)) + a * ea / (w * (one - e)) - one / (w * w * w))
}

/// `b_{-1}(j/k) = -j²/(2k²) - 1/12 + j/(2k)`, the residue of `g_{j,k}` at 0.
pub fn g_residue(j: u64, k: u64) -> f64 {
    let a = j as f64 / k as f64;
    -a * a / 2.0 - 1.0 / 12.0 + a / 2.0
}

/// `Σ_{j=1}^{k} ζ_k^{cj} g_{j,k}(w)` when `k | c`:
/// `f_1(w) = -k/w³ + e^{-w/k}/(k w (1-e^{-w/k})²)`.
///
/// Its Laurent series is `-(1/(kw)) Σ_{n>=2} (n-1) B_n (w/k)^{n-2} / n!`,
/// starting `-1/(12kw)`.
pub fn f1(k: u64, w: Complex64) -> Result<Complex64> {
    if k == 0 {
        return Err(invalid("f1 needs k >= 1"));
    }
    if w.norm() == 0.0 {
        return Err(invalid("f1 has a pole at w = 0"));
    }
    let kf = k as f64;
    let u = w / kf;
    if u.norm() < SERIES_RADIUS {
        let b = bernoulli_numbers();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut up = Complex64::new(1.0, 0.0);
        let mut fact = 2.0;
        for n in 2..SERIES_TERMS {
            acc += (n - 1) as f64 * b[n] / fact * up;
            up *= u;
            fact *= (n + 1) as f64;
        }
        return Ok(-acc / (kf * w));
    }
    check_regular(u)?;
    let e = (-u).exp();
    let one = Complex64::new(1.0, 0.0);
    Ok(-kf / (w * w * w) + e / (kf * w * (one - e) * (one - e)))
}

/// `Σ_{j=1}^{k} ζ_k^{cj} g_{j,k}(w)` when `k ∤ c`:
/// `f_2(w) = ζ_k^c e^{-w/k} / (k w (1 - ζ_k^c e^{-w/k})²)`.
pub fn f2(k: u64, c: u64, w: Complex64) -> Result<Complex64> {
    if k == 0 || c % k == 0 {
        return Err(invalid(format!("f2 needs k not dividing c, got k = {k}, c = {c}")));
    }
    if w.norm() == 0.0 {
        return Err(invalid("f2 has a pole at w = 0"));
    }
    let kf = k as f64;
    let x = unit(c % k, k) * (-w / kf).exp();
    let one = Complex64::new(1.0, 0.0);
    Ok(x / (kf * w * (one - x) * (one - x)))
}
