use num_rational::Rational64;

use crate::error::{invalid, Result};

/// A member `h/k` of the Farey sequence of order `N`, with the distances to
/// the mediants on either side: the arc around `h/k` is
/// `[h/k - theta_lo, h/k + theta_hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FareyArc {
    pub h: i64,
    pub k: i64,
    pub theta_lo: Rational64,
    pub theta_hi: Rational64,
}

impl FareyArc {
    pub fn center(&self) -> Rational64 {
        Rational64::new(self.h, self.k)
    }

    pub fn start(&self) -> Rational64 {
        self.center() - self.theta_lo
    }

    pub fn end(&self) -> Rational64 {
        self.center() + self.theta_hi
    }
}

/// The Farey sequence of order `N` from `0/1` to `1/1`, each member with its
/// mediant gaps. The sequence is read on a period of length 1, so `0/1` sees
/// `(N-1)/N - 1` on its left and `1/1` sees `1 + 1/N` on its right.
///
/// For adjacent `h'/k' < h/k` the gap is `1/(k(k + k'))`. The arcs of every
/// member except `1/1` tile `[-θ'_{0,1}, 1 - θ'_{0,1})`.
pub fn farey(order: i64) -> Result<Vec<FareyArc>> {
    if order < 1 {
        return Err(invalid(format!("Farey order must be at least 1, got {order}")));
    }
    // Next-term recurrence for consecutive fractions.
    let mut fracs = vec![(0i64, 1i64), (1, order)];
    while fracs[fracs.len() - 1] != (1, 1) {
        let (a, b) = fracs[fracs.len() - 2];
        let (c, d) = fracs[fracs.len() - 1];
        let q = (order + b) / d;
        fracs.push((q * c - a, q * d - b));
    }
    let len = fracs.len();
    let arcs = (0..len)
        .map(|i| {
            let (h, k) = fracs[i];
            // Neighbour denominators; the period wraps 0/1 and 1/1 onto each other.
            let k_left = if i == 0 { fracs[len - 2].1 } else { fracs[i - 1].1 };
            let k_right = if i == len - 1 { fracs[1].1 } else { fracs[i + 1].1 };
            FareyArc {
                h,
                k,
                theta_lo: Rational64::new(1, k * (k + k_left)),
                theta_hi: Rational64::new(1, k * (k + k_right)),
            }
        })
        .collect();
    Ok(arcs)
}
