//! Evaluation at roots of unity and counts by trace class.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::Zero;

use super::fixed::{FixedComplex, UnitTable};
use super::root::RootOfUnity;
use super::table::{OverTable, TraceTable};
use crate::error::{invalid, Error, Result};

/// A table of polynomial coefficients `c(m, n)` in `ζ`.
pub trait CoeffTable {
    fn max_n(&self) -> usize;

    /// Exact `Σ_{m ≡ r (mod b)} c(m, n)` for `r = 0..b`.
    fn class_sums(&self, n: usize, b: u64) -> Result<Vec<BigInt>>;
}

impl CoeffTable for TraceTable {
    fn max_n(&self) -> usize {
        TraceTable::max_n(self)
    }

    fn class_sums(&self, n: usize, b: u64) -> Result<Vec<BigInt>> {
        Ok(self.residue_sums(n, b)?.into_iter().map(BigInt::from).collect())
    }
}

impl CoeffTable for OverTable {
    fn max_n(&self) -> usize {
        OverTable::max_n(self)
    }

    fn class_sums(&self, n: usize, b: u64) -> Result<Vec<BigInt>> {
        self.residue_sums(n, b)
    }
}

/// `Σ_m c(m, n) ζ^m` with `frac_bits` fractional bits.
///
/// Coefficients are first summed exactly by `m mod b`; only the final
/// combination with `cos`/`sin` is approximate, so no cancellation happens
/// in floating point. The returned value carries a certified error bound.
pub fn eval_poly<T: CoeffTable + ?Sized>(
    table: &T,
    n: usize,
    z: RootOfUnity,
    frac_bits: u32,
) -> Result<FixedComplex> {
    check_bits(frac_bits)?;
    let sums = table.class_sums(n, z.denom())?;
    let units = UnitTable::new(z.denom(), frac_bits)?;
    Ok(units.combine(&sums, z.numer()))
}

/// `T_n(ζ)` from an exact trace table, see [`eval_poly`].
pub fn eval_trace_poly(t: &TraceTable, n: usize, z: RootOfUnity, frac_bits: u32) -> Result<FixedComplex> {
    eval_poly(t, n, z, frac_bits)
}

/// `T_n(ζ)` rounded to double precision.
pub fn eval_trace_c64(t: &TraceTable, n: usize, z: RootOfUnity) -> Result<Complex64> {
    Ok(eval_poly(t, n, z, 128)?.to_c64())
}

fn check_bits(frac_bits: u32) -> Result<()> {
    if !(2..=1 << 20).contains(&frac_bits) {
        return Err(invalid(format!("precision of {frac_bits} bits is out of range")));
    }
    Ok(())
}

/// `pp(a, b, n)` for `0 <= a < b` and `0 <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCounts {
    b: u64,
    rows: Vec<Vec<BigUint>>,
}

impl ResidueCounts {
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn count(&self, a: u64, n: usize) -> &BigUint {
        &self.rows[n][(a % self.b) as usize]
    }

    /// `pp(0, b, n), ..., pp(b-1, b, n)`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }
}

/// Counts by trace class, summing table coefficients directly.
pub fn residue_counts_direct(t: &TraceTable, b: u64) -> Result<ResidueCounts> {
    if b == 0 {
        return Err(invalid("modulus must be positive"));
    }
    let rows = (0..=t.max_n()).map(|n| t.residue_sums(n, b)).collect::<Result<_>>()?;
    Ok(ResidueCounts { b, rows })
}

/// Counts by trace class through character orthogonality,
/// `pp(a, b, n) = (1/b) Σ_{ν<b} ζ_b^{-aν} T_n(ζ_b^ν)`, in fixed point with
/// `frac_bits` fractional bits. Each count is rounded to the nearest integer;
/// an [`Error::Precision`] is returned when the rounding is not certain.
pub fn residue_counts_via_roots(t: &TraceTable, b: u64, frac_bits: u32) -> Result<ResidueCounts> {
    if b == 0 {
        return Err(invalid("modulus must be positive"));
    }
    check_bits(frac_bits)?;
    let units = UnitTable::new(b, frac_bits)?;
    let mut rows = Vec::with_capacity(t.max_n() + 1);
    for n in 0..=t.max_n() {
        let sums = t.class_sums(n, b)?;
        let values: Vec<FixedComplex> = (0..b).map(|nu| units.combine(&sums, nu)).collect();
        let mut row = Vec::with_capacity(b as usize);
        for a in 0..b {
            let mut acc = FixedComplex::zero(frac_bits);
            for (nu, v) in values.iter().enumerate() {
                let phase = (b - a * nu as u64 % b) % b;
                acc.add_assign(&units.unit(phase).mul(v));
            }
            let count = acc.round_div(b)?;
            let count = count.to_biguint().ok_or_else(|| {
                Error::Precision(format!("count for class {a} at n = {n} rounded to a negative value"))
            })?;
            row.push(count);
        }
        rows.push(row);
    }
    Ok(ResidueCounts { b, rows })
}

/// Exact `pp(a1, b, n) - pp(a2, b, n)` for `n` in `range`.
pub fn difference_series(
    t: &TraceTable,
    a1: u64,
    a2: u64,
    b: u64,
    range: RangeInclusive<usize>,
) -> Result<Vec<BigInt>> {
    if b == 0 {
        return Err(invalid("modulus must be positive"));
    }
    if a1 % b == a2 % b {
        return Err(invalid(format!("classes {a1} and {a2} coincide modulo {b}")));
    }
    if *range.end() > t.max_n() {
        return Err(invalid(format!(
            "n = {} is beyond the table order {}",
            range.end(),
            t.max_n()
        )));
    }
    range
        .map(|n| {
            let mut d = BigInt::zero();
            for (m, c) in t.row(n)?.iter().enumerate() {
                let r = m as u64 % b;
                if r == a1 % b {
                    d += BigInt::from(c.clone());
                } else if r == a2 % b {
                    d -= BigInt::from(c.clone());
                }
            }
            Ok(d)
        })
        .collect()
}
