//! Exact coefficient tables for the trace-refined MacMahon product and the
//! overpartition product.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{invalid, Error, Result};

/// Largest order accepted by the table builders. The dense triangle holds
/// about `N²/2` big integers, so this keeps memory well under 2 GB.
pub const TABLE_CAP: usize = 3000;

fn check_cap(max_n: usize) -> Result<()> {
    if max_n > TABLE_CAP {
        return Err(Error::Resource(format!(
            "table order {max_n} exceeds the cap {TABLE_CAP}"
        )));
    }
    Ok(())
}

/// `pp(m, n)`: the number of plane partitions of `n` with trace `m`, for
/// `0 <= m <= n <= max_n`. Row `n` holds the coefficients of `T_n(ζ)`.
#[derive(Debug, Clone)]
pub struct TraceTable {
    rows: Vec<Vec<BigUint>>,
    totals: Vec<BigUint>,
    zero: BigUint,
}

/// `d(m, n)`: the `ζ^m q^n` coefficient of `∏ ((1 - ζq^k)/(1 - q^k))^k`.
/// Row `n` holds the coefficients of `A_n(ζ)`.
#[derive(Debug, Clone)]
pub struct OverTable {
    rows: Vec<Vec<BigInt>>,
    zero: BigInt,
}

/// `C(k + j - 1, j)` for `j = 0..=jmax`.
fn neg_binomials(k: usize, jmax: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(jmax + 1);
    let mut c = BigUint::from(1u32);
    out.push(c.clone());
    for j in 1..=jmax {
        c *= (k + j - 1) as u64;
        c /= j as u64;
        out.push(c.clone());
    }
    out
}

/// Builds the table of `∏_{k=1}^{N} (1 - ζq^k)^{-k}` truncated at `q^N`.
///
/// Each factor is expanded as `Σ_j C(k+j-1, j) ζ^j q^{kj}` and multiplied in
/// place. Factors with `k > N` cannot reach `q^{<=N}`, so the result is exact.
pub fn build_trace_table(max_n: usize) -> Result<TraceTable> {
    check_cap(max_n)?;
    let mut rows: Vec<Vec<BigUint>> = (0..=max_n).map(|n| vec![BigUint::zero(); n + 1]).collect();
    rows[0][0] = BigUint::from(1u32);
    let mut scratch = BigUint::zero();

    for k in 1..=max_n {
        let binom = neg_binomials(k, max_n / k);
        // Descending n: every source row n - kj is still the previous partial product.
        for n in (k..=max_n).rev() {
            let (lower, upper) = rows.split_at_mut(n);
            let target = &mut upper[0];
            for j in 1..=n / k {
                let c = &binom[j];
                let source = &lower[n - k * j];
                for (i, v) in source.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    scratch.clone_from(v);
                    scratch *= c;
                    target[i + j] += &scratch;
                }
            }
        }
    }

    let totals = rows.iter().map(|r| r.iter().sum()).collect();
    Ok(TraceTable { rows, totals, zero: BigUint::zero() })
}

impl TraceTable {
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `pp(m, n)`; zero when `m > n` or `n` is beyond the table.
    pub fn coeff(&self, m: usize, n: usize) -> &BigUint {
        self.rows.get(n).and_then(|r| r.get(m)).unwrap_or(&self.zero)
    }

    /// Coefficients of `T_n(ζ)`, indexed by the power of `ζ`.
    pub fn row(&self, n: usize) -> Result<&[BigUint]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or_else(|| invalid(format!("n = {n} is beyond the table order {}", self.max_n())))
    }

    /// `pp(n) = T_n(1)`.
    pub fn pp(&self, n: usize) -> Result<&BigUint> {
        self.totals
            .get(n)
            .ok_or_else(|| invalid(format!("n = {n} is beyond the table order {}", self.max_n())))
    }

    /// `pp(0), ..., pp(max_n)`.
    pub fn pp_sequence(&self) -> &[BigUint] {
        &self.totals
    }

    /// Exact sums of the coefficients of `T_n` over each residue class of
    /// the trace modulo `b`.
    pub fn residue_sums(&self, n: usize, b: u64) -> Result<Vec<BigUint>> {
        if b == 0 {
            return Err(invalid("modulus must be positive"));
        }
        let row = self.row(n)?;
        let mut sums = vec![BigUint::zero(); b as usize];
        for (m, c) in row.iter().enumerate() {
            sums[m % b as usize] += c;
        }
        Ok(sums)
    }
}

/// Builds the table of `∏_{k=1}^{N} ((1 - ζq^k)/(1 - q^k))^k` truncated at `q^N`.
///
/// The numerator `∏ (1 - ζq^k)^k` is expanded binomially; the denominator
/// contributes the series `Σ pp(n) q^n`, taken from [`build_trace_table`].
pub fn build_over_table(max_n: usize) -> Result<OverTable> {
    let trace = build_trace_table(max_n)?;
    Ok(over_table_from(&trace))
}

/// Same as [`build_over_table`], reusing an existing trace table.
pub fn over_table_from(trace: &TraceTable) -> OverTable {
    let max_n = trace.max_n();
    let mut numer: Vec<Vec<BigInt>> = (0..=max_n).map(|n| vec![BigInt::zero(); n + 1]).collect();
    numer[0][0] = BigInt::from(1);
    let mut scratch = BigInt::zero();

    for k in 1..=max_n {
        // (1 - ζq^k)^k = Σ_{j<=k} (-1)^j C(k, j) ζ^j q^{kj}
        let mut binom = Vec::with_capacity(k + 1);
        let mut c = BigInt::from(1);
        binom.push(c.clone());
        for j in 1..=k {
            c *= (k + 1 - j) as i64;
            c /= j as i64;
            binom.push(if j % 2 == 1 { -c.clone() } else { c.clone() });
        }
        for n in (k..=max_n).rev() {
            let (lower, upper) = numer.split_at_mut(n);
            let target = &mut upper[0];
            for j in 1..=(n / k).min(k) {
                let source = &lower[n - k * j];
                for (i, v) in source.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    scratch.clone_from(v);
                    scratch *= &binom[j];
                    target[i + j] += &scratch;
                }
            }
        }
    }

    let pp: Vec<BigInt> = trace.pp_sequence().iter().map(|v| BigInt::from(v.clone())).collect();
    let mut rows: Vec<Vec<BigInt>> = (0..=max_n).map(|n| vec![BigInt::zero(); n + 1]).collect();
    for (n, row) in rows.iter_mut().enumerate() {
        for i in 0..=n {
            let weight = &pp[n - i];
            for (m, v) in numer[i].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                scratch.clone_from(v);
                scratch *= weight;
                row[m] += &scratch;
            }
        }
    }
    OverTable { rows, zero: BigInt::zero() }
}

impl OverTable {
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn coeff(&self, m: usize, n: usize) -> &BigInt {
        self.rows.get(n).and_then(|r| r.get(m)).unwrap_or(&self.zero)
    }

    /// Coefficients of `A_n(ζ)`, indexed by the power of `ζ`.
    pub fn row(&self, n: usize) -> Result<&[BigInt]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or_else(|| invalid(format!("n = {n} is beyond the table order {}", self.max_n())))
    }

    /// The number of plane overpartitions of `n`, `A_n(-1)`.
    pub fn overpartitions(&self, n: usize) -> Result<BigInt> {
        Ok(self
            .row(n)?
            .iter()
            .enumerate()
            .map(|(m, c)| if m % 2 == 0 { c.clone() } else { -c })
            .sum())
    }

    pub fn residue_sums(&self, n: usize, b: u64) -> Result<Vec<BigInt>> {
        if b == 0 {
            return Err(invalid("modulus must be positive"));
        }
        let row = self.row(n)?;
        let mut sums = vec![BigInt::zero(); b as usize];
        for (m, c) in row.iter().enumerate() {
            sums[m % b as usize] += c;
        }
        Ok(sums)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_qseries::enumerate::enumerate_plane_partitions;

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn empty_product() {
        let t = build_trace_table(0).unwrap();
        assert_eq!(t.max_n(), 0);
        assert_eq!(t.row(0).unwrap(), u(&[1]).as_slice());
    }

    #[test]
    fn small_rows() {
        let t = build_trace_table(4).unwrap();
        assert_eq!(t.row(2).unwrap(), u(&[0, 2, 1]).as_slice());
        assert_eq!(t.row(4).unwrap(), u(&[0, 4, 6, 2, 1]).as_slice());
        assert_eq!(t.pp(4).unwrap(), &BigUint::from(13u32));
        assert!(t.row(5).is_err());
        assert!(t.coeff(7, 3).is_zero());
    }

    #[test]
    fn matches_enumeration() {
        let t = build_trace_table(8).unwrap();
        for n in 0..=8 {
            let mut hist = vec![BigUint::zero(); n + 1];
            for p in enumerate_plane_partitions(n).unwrap() {
                hist[p.trace() as usize] += 1u32;
            }
            assert_eq!(t.row(n).unwrap(), hist.as_slice(), "n = {n}");
        }
    }

    /// Independent route: `n T_n(ζ) = Σ_k c_k(ζ) T_{n-k}(ζ)` with
    /// `c_k(ζ) = Σ_{l | k} (k/l)² ζ^l`, from the logarithmic derivative.
    fn log_derivative_rows(max_n: usize) -> Vec<Vec<BigUint>> {
        let mut c: Vec<Vec<BigUint>> = vec![Vec::new()];
        for k in 1..=max_n {
            let mut ck = vec![BigUint::zero(); k + 1];
            for l in (1..=k).filter(|l| k % l == 0) {
                ck[l] = BigUint::from(((k / l) * (k / l)) as u64);
            }
            c.push(ck);
        }
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
        for n in 1..=max_n {
            let mut acc = vec![BigUint::zero(); n + 1];
            for k in 1..=n {
                for (l, ckl) in c[k].iter().enumerate() {
                    if ckl.is_zero() {
                        continue;
                    }
                    for (m, v) in rows[n - k].iter().enumerate() {
                        acc[l + m] += ckl * v;
                    }
                }
            }
            rows.push(acc.into_iter().map(|v| v / n as u64).collect());
        }
        rows
    }

    #[test]
    fn matches_log_derivative_recurrence() {
        let t = build_trace_table(40).unwrap();
        let rows = log_derivative_rows(40);
        for n in 0..=40 {
            assert_eq!(t.row(n).unwrap(), rows[n].as_slice(), "n = {n}");
        }
    }

    #[test]
    fn trace_table_invariants() {
        let t = build_trace_table(60).unwrap();
        for n in 1..=60 {
            assert_eq!(t.coeff(n, n), &BigUint::from(1u32));
            assert_eq!(t.coeff(1, n), &BigUint::from(n as u64));
            assert!(t.coeff(0, n).is_zero());
        }
        // MacMahon numbers, OEIS A000219
        let pp = [1u64, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479, 2485, 4167, 6879];
        assert_eq!(&t.pp_sequence()[..pp.len()], u(&pp).as_slice());
    }

    #[test]
    fn over_table_first_rows() {
        let o = build_over_table(2).unwrap();
        // ((1 - ζq)/(1 - q)) ((1 - ζq²)/(1 - q²))² to order q²
        assert_eq!(o.row(0).unwrap(), &[BigInt::from(1)]);
        assert_eq!(o.row(1).unwrap(), &[BigInt::from(1), BigInt::from(-1)]);
        assert_eq!(o.row(2).unwrap(), &[BigInt::from(3), BigInt::from(-3), BigInt::from(0)]);
        assert_eq!(o.overpartitions(1).unwrap(), BigInt::from(2));
        assert_eq!(o.overpartitions(2).unwrap(), BigInt::from(6));
    }

    #[test]
    fn over_table_invariants() {
        let t = build_trace_table(50).unwrap();
        let o = over_table_from(&t);
        for n in 0..=50 {
            let total: BigInt = o.row(n).unwrap().iter().sum();
            assert_eq!(total, BigInt::from((n == 0) as i32), "n = {n}");
            assert_eq!(o.coeff(0, n), &BigInt::from(t.pp(n).unwrap().clone()));
        }
        // Plane overpartitions, expanded from ∏ ((1 + q^k)/(1 - q^k))^k
        let expected = [1i64, 2, 6, 16, 38, 88, 196, 420, 878, 1794, 3584, 7032, 13572];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(o.overpartitions(n).unwrap(), BigInt::from(v), "n = {n}");
        }
    }
}
