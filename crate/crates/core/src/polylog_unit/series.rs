use num_complex::Complex64;

use super::{PrecisionSpec, Rotation};
use crate::error::{invalid, Error, Result};

/// Most terms [`li`] will add before giving up.
const TERM_CAP: u64 = 1 << 30;

/// Neumaier's compensated sum.
#[derive(Default)]
struct Compensated {
    sum: f64,
    c: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.c
    }
}

/// `Li_s(e^{2πiθ}) = Σ_{n>=1} e^{2πinθ} / n^s` by direct summation.
///
/// The sum stops at `N` with `N^{1-s}/(s-1) <= abs_err/2`, which bounds the
/// tail. This is slow and is kept as an independent reference.
pub fn li(s: u32, r: Rotation, p: PrecisionSpec) -> Result<Complex64> {
    if s < 2 {
        return Err(invalid(format!("the boundary series needs s >= 2, got {s}")));
    }
    let sf = s as f64;
    // N^{1-s}/(s-1) <= abs_err/2
    let n_terms = ((p.abs_err() * (sf - 1.0) / 2.0).powf(1.0 / (1.0 - sf))).ceil();
    if !(n_terms < TERM_CAP as f64) {
        return Err(Error::Resource(format!(
            "direct polylog sum needs {n_terms:e} terms for {:e}",
            p.abs_err()
        )));
    }
    let n_terms = n_terms as u64;
    let theta = r.theta();
    let (s1, c1) = (std::f64::consts::TAU * theta).sin_cos();
    let step = Complex64::new(c1, s1);
    let mut z = step;
    let mut re = Compensated::default();
    let mut im = Compensated::default();
    for n in 1..=n_terms {
        if n % 4096 == 0 {
            // Reset the running power to stop drift.
            let phase = (n as f64 * theta).fract();
            let (s, c) = (std::f64::consts::TAU * phase).sin_cos();
            z = Complex64::new(c, s);
        }
        let w = (n as f64).powi(-(s as i32));
        re.add(z.re * w);
        im.add(z.im * w);
        z *= step;
    }
    Ok(Complex64::new(re.value(), im.value()))
}
