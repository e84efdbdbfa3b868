//! The rewrite of `E_{h,k}` as a lattice sum of `g_{j,k}`, checked against the
//! direct evaluation with every tail bounded.

use num_complex::Complex64;
use num_integer::Integer;

use super::kernels::g_jk;
use super::saddle::{error_term_bounded, SaddleParam};
use crate::error::{invalid, Error, Result};
use crate::exact_qseries::root::unit;
use crate::exact_qseries::RootOfUnity;
use crate::polylog_unit::{hurwitz_zeta, PrecisionSpec};

/// Largest `ℓ` cutoff [`lattice_truncation`] will propose.
pub const LATTICE_TRUNCATION_CAP: u64 = 10_000_000;

fn check(z: RootOfUnity, h: i64, k: u64) -> Result<()> {
    if k == 0 || h.unsigned_abs().gcd(&k) != 1 {
        return Err(invalid(format!("{h}/{k} is not a reduced fraction")));
    }
    if z.denom() * k > 4096 {
        return Err(invalid(format!("b k = {} is too large for the lattice sum", z.denom() * k)));
    }
    Ok(())
}

/// Bound on `Σ_{ℓ>L} |g_{j,k}(w_ℓ) + w_ℓ^{-3}|` for `w_ℓ = t(bk²ℓ + km)`.
///
/// With `R = Re w`, `|1 - e^{-w}| >= 1 - e^{-R}` and `|w| >= R`, so the
/// exponential part of `g` is at most `C(R) e^{-aR}` where
/// `C(R) = (e^{-R}/(1-e^{-R})² + a/(1-e^{-R}))/R` decreases in `R`.
fn exp_tail(a: f64, step: f64, first: f64) -> f64 {
    let e = (-first).exp();
    let c = (e / ((1.0 - e) * (1.0 - e)) + a / (1.0 - e)) / first;
    c * (-a * first).exp() / (1.0 - (-a * step).exp())
}

fn total_exp_tail(b: u64, k: u64, t: Complex64, l: u64) -> f64 {
    let (bf, kf) = (b as f64, k as f64);
    let step = t.re * bf * kf * kf;
    let scale = kf * kf * t.norm();
    let mut acc = 0.0;
    for j in 1..=k {
        let a = j as f64 / kf;
        for m in 1..=b * k {
            let first = t.re * (bf * kf * kf * (l + 1) as f64 + kf * m as f64);
            acc += exp_tail(a, step, first);
        }
    }
    scale * acc
}

/// The smallest `ℓ` cutoff (a power of two, or zero) whose tail bound is below `tol`.
pub fn lattice_truncation(z: RootOfUnity, k: u64, t: SaddleParam, tol: f64) -> Result<u64> {
    let mut l = 0u64;
    loop {
        if total_exp_tail(z.denom(), k, t.t(), l) <= tol {
            return Ok(l);
        }
        if l >= LATTICE_TRUNCATION_CAP {
            return Err(Error::Resource(format!(
                "lattice sum at Re t = {:e} does not reach {tol:e} within {LATTICE_TRUNCATION_CAP} terms",
                t.t().re
            )));
        }
        l = if l == 0 { 1 } else { 2 * l };
    }
}

/// `|E_{h,k}(ζ; t) - Σ_{j<=k, m<=bk} ζ_b^{ma} ζ_k^{mjh} k² t Σ_{ℓ>=0} g_{j,k}(t(bk²ℓ + km))|`
/// plus bounds on everything not computed exactly, so the true difference
/// is at most the returned value.
///
/// Terms with `ℓ <= truncation` are summed directly. Beyond that the
/// `-w^{-3}` part of `g` is summed in closed form with Hurwitz zeta values and
/// the rest is bounded geometrically.
pub fn lemma42_identity_residual(
    z: RootOfUnity,
    h: i64,
    k: u64,
    t: SaddleParam,
    truncation: u64,
    p: PrecisionSpec,
) -> Result<f64> {
    check(z, h, k)?;
    let (e, e_err) = error_term_bounded(z, h, k, t, p)?;
    let (a, b) = (z.numer(), z.denom());
    let bk = b * k;
    let hb = (h.rem_euclid(k as i64) as u64) * b;
    let tv = t.t();
    let (bf, kf) = (b as f64, k as f64);
    let lattice = bf * kf * kf;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut rounding = 0.0;
    let mut hurwitz_err = 0.0;
    for m in 1..=bk {
        // Σ_{ℓ>L} (bk²ℓ + km)^{-3} = (bk²)^{-3} ζ(3, L + 1 + m/(bk))
        let (hz, hz_err) = hurwitz_zeta(3, (truncation + 1) as f64 + m as f64 / bk as f64, 1e-18)?;
        let inv3 = lattice.powi(-3);
        for j in 1..=k {
            // ζ_b^{ma} ζ_k^{mjh} = e^{2πi m(ak + jhb)/(bk)}
            let phase = unit((m % bk) * ((a * k + j * hb) % bk) % bk, bk);
            let mut inner = Complex64::new(0.0, 0.0);
            for l in 0..=truncation {
                let w = tv * (lattice * l as f64 + kf * m as f64);
                let g = g_jk(j, k, w)?;
                inner += g;
                rounding += g.norm();
            }
            inner -= hz * inv3 / (tv * tv * tv);
            hurwitz_err += hz_err * inv3 / tv.norm().powi(3);
            sum += phase * inner;
        }
    }
    let scale = kf * kf * tv;
    let sum = sum * scale;
    let tail = total_exp_tail(b, k, tv, truncation);
    let rounding = (rounding * scale.norm() + sum.norm()) * 64.0 * f64::EPSILON;
    Ok((e - sum).norm() + e_err + tail + hurwitz_err * scale.norm() + rounding)
}

/// One point `(ζ_b^a, h/k, t)` of the standard check grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeCase {
    pub a: i64,
    pub b: u64,
    pub h: i64,
    pub k: u64,
    pub t: Complex64,
}

const fn case(a: i64, b: u64, h: i64, k: u64, re: f64, im: f64) -> LatticeCase {
    LatticeCase { a, b, h, k, t: Complex64::new(re, im) }
}

/// Twenty cases with `b, k <= 6` and `Re t >= 0.05`, mixing real and complex `t`.
pub const LATTICE_GRID: [LatticeCase; 20] = [
    case(0, 1, 0, 1, 0.05, 0.0),
    case(0, 1, 1, 2, 0.1, 0.05),
    case(1, 2, 1, 1, 0.3, 0.0),
    case(1, 2, 0, 1, 0.05, -0.02),
    case(1, 2, 1, 2, 0.08, 0.0),
    case(1, 3, 1, 2, 0.2, 0.1),
    case(2, 3, 1, 3, 0.1, -0.1),
    case(1, 3, 2, 5, 0.06, 0.03),
    case(1, 4, 1, 4, 0.05, 0.0),
    case(3, 4, 3, 5, 0.12, 0.2),
    case(1, 5, 0, 1, 0.05, 0.01),
    case(2, 5, 3, 4, 0.05, 0.0),
    case(4, 5, 1, 6, 0.07, -0.04),
    case(3, 5, 5, 6, 0.25, 0.25),
    case(1, 6, 1, 5, 0.05, 0.02),
    case(5, 6, 5, 6, 0.1, -0.1),
    case(1, 6, 1, 3, 0.15, 0.0),
    case(0, 1, 2, 3, 0.5, 0.4),
    case(2, 5, 1, 1, 0.05, 0.0),
    case(1, 3, 1, 6, 0.05, 0.05),
];

/// Runs [`lemma42_identity_residual`] with the truncation from
/// [`lattice_truncation`] at tolerance `tol`. Returns the cutoff and residual.
pub fn lattice_check(c: &LatticeCase, tol: f64, p: PrecisionSpec) -> Result<(u64, f64)> {
    let z = RootOfUnity::new(c.a, c.b)?;
    let t = SaddleParam::new(c.t)?;
    let l = lattice_truncation(z, c.k, t, tol)?;
    Ok((l, lemma42_identity_residual(z, c.h, c.k, t, l, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(a: i64, b: u64) -> RootOfUnity {
        RootOfUnity::new(a, b).unwrap()
    }

    fn residual(z: RootOfUnity, h: i64, k: u64, t: Complex64) -> f64 {
        let t = SaddleParam::new(t).unwrap();
        let l = lattice_truncation(z, k, t, 1e-12).unwrap();
        lemma42_identity_residual(z, h, k, t, l, PrecisionSpec::default()).unwrap()
    }

    #[test]
    fn identity_holds() {
        assert!(residual(RootOfUnity::MINUS_ONE, 1, 1, Complex64::new(0.3, 0.0)) < 1e-8);
        assert!(residual(root(1, 3), 1, 2, Complex64::new(0.2, 0.1)) < 1e-8);
        assert!(residual(RootOfUnity::ONE, 0, 1, Complex64::new(0.1, -0.05)) < 1e-8);
        assert!(residual(root(2, 5), 2, 3, Complex64::new(0.08, 0.02)) < 1e-8);
    }

    #[test]
    fn standard_grid() {
        for c in &LATTICE_GRID {
            let (_, r) = lattice_check(c, 1e-12, PrecisionSpec::default()).unwrap();
            assert!(r < 1e-8, "{c:?}: {r:e}");
        }
    }

    #[test]
    fn short_truncation_is_reported_honestly() {
        let z = root(1, 2);
        let t = SaddleParam::real(0.05).unwrap();
        let r = lemma42_identity_residual(z, 0, 1, t, 0, PrecisionSpec::default()).unwrap();
        assert!(r > 1e-3);
    }

    #[test]
    fn rejects_bad_fractions() {
        let t = SaddleParam::real(0.3).unwrap();
        assert!(lemma42_identity_residual(RootOfUnity::ONE, 2, 4, t, 3, PrecisionSpec::default()).is_err());
    }
}
