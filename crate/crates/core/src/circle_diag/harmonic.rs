use num_complex::Complex64;

/// `G_M(θ) = Σ_{m=1}^{M} e^{2πiθm} / m`, the partial sums of the twisted
/// harmonic series. `θ` is reduced modulo 1 before use.
pub fn twisted_harmonic_g(m_max: u64, theta: f64) -> Complex64 {
    let theta = theta.rem_euclid(1.0);
    let mut acc = Complex64::new(0.0, 0.0);
    // Sum the small terms first.
    for m in (1..=m_max).rev() {
        let phase = std::f64::consts::TAU * (theta * m as f64).rem_euclid(1.0);
        acc += Complex64::from_polar(1.0 / m as f64, phase);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_sum() {
        let g = twisted_harmonic_g(4, 0.5);
        assert!((g.re + 7.0 / 12.0).abs() < 1e-15 && g.im.abs() < 1e-15);
        assert_eq!(twisted_harmonic_g(0, 0.3), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn logarithmic_bound() {
        // one constant for the whole grid
        let mut worst: f64 = 0.0;
        for i in 1..200 {
            let theta = i as f64 / 200.0;
            let rhs = (1.0 / theta).ln() + (1.0 / (1.0 - theta)).ln();
            for m in [1, 7, 50, 400, 3000] {
                worst = worst.max(twisted_harmonic_g(m, theta).norm() / rhs);
            }
        }
        assert!(worst < 2.0, "{worst}");
    }

    #[test]
    fn doubling_stays_bounded() {
        for &theta in &[0.01, 0.2, 0.5, 0.77] {
            let a = twisted_harmonic_g(1000, theta).norm();
            let b = twisted_harmonic_g(2000, theta).norm();
            // partial summation: |G_2M - G_M| <= 1/(M sin πθ)
            assert!((a - b).abs() <= 1.0 / (1000.0 * (std::f64::consts::PI * theta).sin()));
        }
    }
}
