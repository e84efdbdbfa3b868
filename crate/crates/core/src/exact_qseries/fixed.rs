//! Fixed-point complex arithmetic on top of exact integer sums.
//!
//! A value is `(re + i im) / 2^frac_bits` with big-integer `re` and `im`,
//! plus an absolute error bound. Trigonometric values come from
//! `astro-float` at a guard-padded precision and are truncated to fixed point.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Extra working bits used for the floating evaluation of `cos` and `sin`.
const GUARD_BITS: usize = 64;

/// Error of each tabulated `cos`/`sin` value, in units of `2^-frac_bits`.
/// One unit from truncation, one for the floating evaluation.
const TRIG_ERR_UNITS: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct FixedComplex {
    pub re: BigInt,
    pub im: BigInt,
    pub frac_bits: u32,
    /// Bound on the absolute error of each component.
    pub err: f64,
}

/// `cos(2πr/b)` and `sin(2πr/b)` for `r = 0..b`, scaled by `2^frac_bits`.
#[derive(Debug, Clone)]
pub(crate) struct UnitTable {
    pub frac_bits: u32,
    pub cos: Vec<BigInt>,
    pub sin: Vec<BigInt>,
}

fn big_to_fixed(x: &BigFloat, frac_bits: u32) -> Result<BigInt> {
    if x.is_zero() {
        return Ok(BigInt::zero());
    }
    let (words, _, sign, exp, _) = x
        .as_raw_parts()
        .ok_or_else(|| Error::Precision("trigonometric evaluation returned NaN".into()))?;
    let mut m = BigUint::zero();
    for w in words.iter().rev() {
        m = (m << 64u32) + BigUint::from(*w);
    }
    // value = m * 2^(exp - 64 * len)
    let shift = exp as i64 - 64 * words.len() as i64 + frac_bits as i64;
    let m = if shift >= 0 { m << (shift as u64) } else { m >> ((-shift) as u64) };
    let m = BigInt::from(m);
    Ok(if sign == Sign::Neg { -m } else { m })
}

impl UnitTable {
    pub fn new(b: u64, frac_bits: u32) -> Result<Self> {
        let p = frac_bits as usize + GUARD_BITS;
        let rm = RoundingMode::ToEven;
        let mut cc = Consts::new().map_err(|e| Error::Resource(format!("{e:?}")))?;
        let tau = cc.pi(p, rm).mul(&BigFloat::from_u64(2, p), p, rm);
        let bf = BigFloat::from_u64(b, p);
        let mut cos = Vec::with_capacity(b as usize);
        let mut sin = Vec::with_capacity(b as usize);
        for r in 0..b {
            let (c, s) = match (4 * r) % b {
                // Quarter turns are exact.
                0 => {
                    let one = BigInt::from(1) << frac_bits;
                    match 4 * r / b {
                        0 => (one, BigInt::zero()),
                        1 => (BigInt::zero(), one),
                        2 => (-one, BigInt::zero()),
                        _ => (BigInt::zero(), -one),
                    }
                }
                _ => {
                    let x = tau.mul(&BigFloat::from_u64(r, p), p, rm).div(&bf, p, rm);
                    let c = x.cos(p, rm, &mut cc);
                    let s = x.sin(p, rm, &mut cc);
                    (big_to_fixed(&c, frac_bits)?, big_to_fixed(&s, frac_bits)?)
                }
            };
            cos.push(c);
            sin.push(s);
        }
        Ok(Self { frac_bits, cos, sin })
    }

    fn b(&self) -> usize {
        self.cos.len()
    }

    /// `Σ_r s_r e^{2πi νr/b}` for integer weights `s_r` indexed by `r mod b`.
    pub fn combine(&self, sums: &[BigInt], nu: u64) -> FixedComplex {
        let b = self.b();
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        let mut mass = 0.0f64;
        for (r, s) in sums.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let idx = ((r as u128 * nu as u128) % b as u128) as usize;
            re += s * &self.cos[idx];
            im += s * &self.sin[idx];
            if !is_exact(idx, b) {
                mass += s.to_f64().unwrap_or(f64::INFINITY).abs();
            }
        }
        let unit = (-(self.frac_bits as f64)).exp2();
        FixedComplex { re, im, frac_bits: self.frac_bits, err: mass * TRIG_ERR_UNITS * unit }
    }

    /// `e^{2πi r/b}` as a fixed-point value.
    pub fn unit(&self, r: u64) -> FixedComplex {
        let idx = (r % self.b() as u64) as usize;
        let err = if is_exact(idx, self.b()) {
            0.0
        } else {
            TRIG_ERR_UNITS * (-(self.frac_bits as f64)).exp2()
        };
        FixedComplex {
            re: self.cos[idx].clone(),
            im: self.sin[idx].clone(),
            frac_bits: self.frac_bits,
            err,
        }
    }
}

fn is_exact(r: usize, b: usize) -> bool {
    (4 * r) % b == 0
}

impl FixedComplex {
    pub fn zero(frac_bits: u32) -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero(), frac_bits, err: 0.0 }
    }

    fn magnitude_bound(&self) -> f64 {
        let s = (-(self.frac_bits as f64)).exp2();
        let re = self.re.to_f64().unwrap_or(f64::INFINITY).abs() * s;
        let im = self.im.to_f64().unwrap_or(f64::INFINITY).abs() * s;
        re + im + self.err
    }

    pub fn add_assign(&mut self, other: &FixedComplex) {
        debug_assert_eq!(self.frac_bits, other.frac_bits);
        self.re += &other.re;
        self.im += &other.im;
        self.err += other.err;
    }

    /// Product, truncated back to `frac_bits`.
    pub fn mul(&self, other: &FixedComplex) -> FixedComplex {
        debug_assert_eq!(self.frac_bits, other.frac_bits);
        let f = self.frac_bits;
        let re = (&self.re * &other.re - &self.im * &other.im) >> f;
        let im = (&self.re * &other.im + &self.im * &other.re) >> f;
        // |xy - x'y'| <= |x| e_y + |y| e_x + e_x e_y, per component with both parts
        let err = self.magnitude_bound() * other.err
            + other.magnitude_bound() * self.err
            + 2.0 * (-(f as f64)).exp2();
        FixedComplex { re, im, frac_bits: f, err }
    }

    pub fn to_c64(&self) -> Complex64 {
        let s = (-(self.frac_bits as f64)).exp2();
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN) * s,
            self.im.to_f64().unwrap_or(f64::NAN) * s,
        )
    }

    /// Rounds the value divided by `d` to the nearest integer, provided both the
    /// distance to it and the certified error stay below 1/4. The imaginary
    /// part must round to zero under the same rule.
    pub fn round_div(&self, d: u64) -> Result<BigInt> {
        let err = self.err / d as f64;
        if err >= 0.25 {
            return Err(Error::Precision(format!(
                "error bound {err:.3e} is too large to round; raise the precision"
            )));
        }
        let denom = BigInt::from(d) << self.frac_bits;
        let round = |x: &BigInt| -> (BigInt, f64) {
            let num: BigInt = x * 2 + &denom;
            let q = num.div_floor(&(&denom * 2));
            let rem = x - &q * &denom;
            let dist = rem.to_f64().unwrap_or(f64::INFINITY).abs()
                / denom.to_f64().unwrap_or(f64::INFINITY);
            (q, dist)
        };
        let (re, dre) = round(&self.re);
        let (im, dim) = round(&self.im);
        if dre + err > 0.25 || dim + err > 0.25 || !im.is_zero() {
            return Err(Error::Precision(format!(
                "value is not within 1/4 of an integer (distance {:.3e}); raise the precision",
                dre.max(dim)
            )));
        }
        Ok(re)
    }
}
