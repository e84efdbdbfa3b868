//! Numerical integration of the approximated integrand over the dominant arc.


use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use super::farey::farey;
use super::saddle::{t_n_trace, SaddleCase, SaddleParam};
use crate::error::{invalid, Error, Result};
use crate::exact_qseries::root::unit;
use crate::exact_qseries::RootOfUnity;
use crate::polylog_unit::{li3_rational, PrecisionSpec};

/// Most interval splits before the adaptive rule gives up.
pub const MAX_SUBDIVISIONS: usize = 2000;

// Kronrod nodes on [0, 1]; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// 15-point Kronrod value and the difference from the embedded 7-point Gauss value.
fn gk15(f: &impl Fn(f64) -> Result<Complex64>, lo: f64, hi: f64) -> Result<(Complex64, f64)> {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let fc = f(c)?;
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x)? + f(c + x)?;
        k += s * WGK[i];
        if i % 2 == 1 {
            g += s * WG[i / 2];
        }
    }
    Ok((k * h, ((k - g) * h).norm()))
}

/// Adaptive Gauss–Kronrod integration of `f` over `[lo, hi]` to relative
/// tolerance `rel_tol`, bisecting the interval with the largest error.
pub fn integrate(
    f: impl Fn(f64) -> Result<Complex64>,
    lo: f64,
    hi: f64,
    rel_tol: f64,
) -> Result<(Complex64, f64)> {
    let (v, e) = gk15(&f, lo, hi)?;
    let mut parts = vec![(lo, hi, v, e)];
    for _ in 0..MAX_SUBDIVISIONS {
        let total: Complex64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(Error::Resource("integrand overflows double precision".into()));
        }
        if err <= rel_tol * total.norm() || err == 0.0 {
            return Ok((total, err));
        }
        let worst = (0..parts.len())
            .max_by(|&i, &j| parts[i].3.total_cmp(&parts[j].3))
            .expect("nonempty");
        let (a, b, _, _) = parts.swap_remove(worst);
        let m = 0.5 * (a + b);
        let (v1, e1) = gk15(&f, a, m)?;
        let (v2, e2) = gk15(&f, m, b)?;
        parts.push((a, m, v1, e1));
        parts.push((m, b, v2, e2));
    }
    Err(Error::Resource(format!(
        "quadrature did not converge within {MAX_SUBDIVISIONS} subdivisions"
    )))
}

/// The integral over one arc with its estimated error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcIntegral {
    pub value: Complex64,
    pub abs_err: f64,
    pub h: i64,
    pub k: i64,
    pub theta_lo: f64,
    pub theta_hi: f64,
}

fn to_f64(r: Rational64) -> f64 {
    r.to_f64().expect("small rational")
}

/// `ζ_k^{nh} ∫ exp(Li₃(ζ^k)/(k³t_θ²) + n t_θ + c(t_θ)) dθ` over the arc of the
/// dominant `h/k` in the Farey dissection of order `order`, where
/// `t_θ = t_n - 2πiθ` and `c` is the limit of `E_{h,k}` on that arc.
///
/// This drops only the `o(1)` part of the error term, so it sits between the
/// exact `T_n(ζ)` (or `pp(n)` for `ζ = 1`) and the closed-form main term.
pub fn major_arc_quadrature(z: RootOfUnity, n: u64, order: i64, p: PrecisionSpec) -> Result<ArcIntegral> {
    let case = SaddleCase::of(z)?;
    let (h, k) = case.arc();
    if (k as i64) > order {
        return Err(invalid(format!("the arc {h}/{k} needs Farey order at least {k}")));
    }
    let arc = farey(order)?
        .into_iter()
        .find(|a| a.h == h && a.k == k as i64)
        .expect("h/k belongs to every Farey sequence of order >= k");
    let (li, _) = li3_rational(z.pow(k as i64), p)?;
    let t_n = t_n_trace(z, n)?;
    let kf = k as f64;
    let nf = n as f64;
    let integrand = |theta: f64| -> Result<Complex64> {
        let t = t_n.shifted(theta);
        let tv = t.t();
        let c = case.limit(z, SaddleParam::new(tv)?);
        Ok((li / (kf * kf * kf * tv * tv) + nf * tv + c).exp())
    };
    let (lo, hi) = (-to_f64(arc.theta_lo), to_f64(arc.theta_hi));
    let rel_tol = p.abs_err().max(1e-13);
    let (v, err) = integrate(integrand, lo, hi, rel_tol)?;
    let twist = unit((n % k) * h as u64 % k, k);
    Ok(ArcIntegral { value: v * twist, abs_err: err, h, k: k as i64, theta_lo: lo, theta_hi: hi })
}
