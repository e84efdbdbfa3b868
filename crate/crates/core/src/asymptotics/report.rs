use num_complex::Complex64;

use super::main_term::MainTermEstimate;
use crate::error::Result;
use crate::exact_qseries::{eval_poly, CoeffTable, RootOfUnity};

/// Working precision of the exact side of a comparison.
const EXACT_BITS: u32 = 128;

/// One comparison of an exact value with a main term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRow {
    pub n: u64,
    /// Exact value divided by the main term, parity sign included.
    pub ratio: Complex64,
    pub deviation: f64,
}

/// Ratios `c_n(ζ) / estimate(n)` for every `n` in `n_grid`, where `c_n` is
/// the polynomial in row `n` of `table`.
pub fn ratio_report<T: CoeffTable + ?Sized>(
    table: &T,
    z: RootOfUnity,
    est: &MainTermEstimate,
    n_grid: &[u64],
) -> Result<Vec<RatioRow>> {
    n_grid
        .iter()
        .map(|&n| {
            let exact = eval_poly(table, n as usize, z, EXACT_BITS)?.to_c64();
            let ratio = exact / est.eval(n);
            Ok(RatioRow { n, ratio, deviation: (ratio - 1.0).norm() })
        })
        .collect()
}
