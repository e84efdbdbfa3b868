use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive};

use crate::error::{invalid, Result};

/// `Δ^m(a)_n = Σ_{j=0}^{m} C(m, j) (-1)^j a_{n+j}`.
pub fn forward_difference<T, F>(seq: F, m: usize, n: usize) -> T
where
    T: Num + Clone + FromPrimitive,
    F: Fn(usize) -> T,
{
    let mut acc = T::zero();
    let mut binom: u128 = 1;
    for j in 0..=m {
        let c = T::from_u128(binom).expect("binomial coefficient fits the target type");
        let term = c * seq(n + j);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
        binom = binom * (m - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// Exact `Δ^m(1/x^k)` at `x`.
pub fn inverse_power_difference(k: u32, m: usize, x: u64) -> BigRational {
    forward_difference(
        |i| BigRational::new(BigInt::from(1), BigInt::from(x + i as u64).pow(k)),
        m,
        0,
    )
}

/// An interval certified to contain a real number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedInterval {
    pub lo: f64,
    pub hi: f64,
}

/// Enclosures of `Δ^m A_n` for `n = 1..=n_max`, where
/// `A_n = ζ(3)/n³ - Σ_k 1/(k³(k+n)³) = Σ_k k^{-3} (n^{-3} - (n+k)^{-3})`.
///
/// With `d(x) = Δ^m(1/x³)`, each summand of `Δ^m A_n = Σ_k k^{-3}(d(n) - d(n+k))`
/// is positive because `d` is positive and decreasing, so the first `k_terms`
/// summands give a lower bound. The tail is at most `d(n) / (2 k_terms²)`.
/// The `d` values are exact rationals rounded once, and the bounds widen each
/// rounding step outward.
pub fn gap_coefficient_difference(m: usize, n_max: usize, k_terms: usize) -> Result<Vec<CertifiedInterval>> {
    if n_max == 0 || k_terms == 0 {
        return Err(invalid("need n_max >= 1 and at least one term"));
    }
    let eps = f64::EPSILON;
    let d: Vec<f64> = (0..=n_max + k_terms)
        .map(|x| {
            if x == 0 {
                0.0
            } else {
                inverse_power_difference(3, m, x as u64).to_f64().unwrap_or(f64::NAN)
            }
        })
        .collect();
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (mut lo, mut hi) = (0.0f64, 0.0f64);
        for k in 1..=k_terms {
            let w = (k as f64).powi(-3);
            // d values carry one rounding, w one more, the product and difference one each.
            let lo_term = w * (d[n] * (1.0 - 4.0 * eps) - d[n + k] * (1.0 + 4.0 * eps));
            let hi_term = w * (d[n] * (1.0 + 4.0 * eps) - d[n + k] * (1.0 - 4.0 * eps));
            lo += lo_term.max(0.0);
            hi += hi_term;
        }
        let widen = (k_terms + 2) as f64 * eps;
        let tail = d[n] / (2.0 * (k_terms * k_terms) as f64);
        out.push(CertifiedInterval { lo: lo * (1.0 - widen), hi: (hi + tail) * (1.0 + widen) });
    }
    Ok(out)
}
