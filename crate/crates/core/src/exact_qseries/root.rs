use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{invalid, Result};

/// The root of unity `exp(2πi a/b)`, stored as a reduced fraction `a/b` with `0 <= a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    a: u64,
    b: u64,
}

impl RootOfUnity {
    /// Builds `exp(2πi a/b)`, reducing `a` modulo `b` and the fraction to lowest terms.
    pub fn new(a: i64, b: u64) -> Result<Self> {
        if b == 0 {
            return Err(invalid("root of unity needs a positive denominator"));
        }
        let a = a.rem_euclid(b as i64) as u64;
        let g = a.gcd(&b);
        Ok(Self { a: a / g, b: b / g })
    }

    pub const ONE: Self = Self { a: 0, b: 1 };
    pub const MINUS_ONE: Self = Self { a: 1, b: 2 };

    pub fn numer(&self) -> u64 {
        self.a
    }

    pub fn denom(&self) -> u64 {
        self.b
    }

    /// The rotation `a/b` in `[0, 1)`.
    pub fn rotation(&self) -> f64 {
        self.a as f64 / self.b as f64
    }

    pub fn is_one(&self) -> bool {
        self.a == 0
    }

    pub fn conj(&self) -> Self {
        if self.a == 0 {
            *self
        } else {
            Self { a: self.b - self.a, b: self.b }
        }
    }

    /// `ζ^k`, reduced.
    pub fn pow(&self, k: i64) -> Self {
        let a = ((self.a as i128 * k as i128).rem_euclid(self.b as i128)) as i64;
        Self::new(a, self.b).expect("denominator is positive")
    }

    /// Whether `Im(ζ) >= 0`, i.e. `a/b <= 1/2`.
    pub fn in_upper_half(&self) -> bool {
        2 * self.a <= self.b
    }

    pub fn to_c64(&self) -> Complex64 {
        unit(self.a, self.b)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

/// `exp(2πi p/q)` in double precision, with the phase reduced exactly first.
pub(crate) fn unit(p: u64, q: u64) -> Complex64 {
    let r = p % q;
    // Exact values where they exist keep symmetric sums exactly real.
    match (r * 4).checked_rem(q) {
        Some(0) => match r * 4 / q {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        },
        _ => {
            let phase = std::f64::consts::TAU * (r as f64 / q as f64);
            Complex64::new(phase.cos(), phase.sin())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes() {
        let z = RootOfUnity::new(6, 8).unwrap();
        assert_eq!((z.numer(), z.denom()), (3, 4));
        let z = RootOfUnity::new(-1, 5).unwrap();
        assert_eq!((z.numer(), z.denom()), (4, 5));
        let z = RootOfUnity::new(7, 7).unwrap();
        assert_eq!(z, RootOfUnity::ONE);
        assert!(RootOfUnity::new(1, 0).is_err());
    }

    #[test]
    fn conj_and_pow() {
        let z = RootOfUnity::new(1, 5).unwrap();
        assert_eq!(z.conj(), RootOfUnity::new(4, 5).unwrap());
        assert_eq!(z.pow(5), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(1, 4).unwrap().pow(2), RootOfUnity::MINUS_ONE);
        let c = z.to_c64() * z.conj().to_c64();
        assert!((c.re - 1.0).abs() < 1e-15 && c.im.abs() < 1e-15);
    }
}
