use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigRational::from_integer(1.into())]));
    let mut b = cache.lock().unwrap_or_else(|e| e.into_inner());
    // Σ_{k<m+1} C(m+1, k) B_k = 0
    while b.len() <= n {
        let m = b.len();
        let mut binom = BigInt::from(1);
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom.clone());
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b[n].clone()
}

pub fn bernoulli_f64(n: usize) -> f64 {
    bernoulli(n).to_f64().unwrap_or(f64::NAN)
}
