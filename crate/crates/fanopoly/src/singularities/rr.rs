use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::cqs::CyclicQuotientSingularity;
use crate::lattice::Rat;

/// Coefficients `c_0..=c_D` of a power series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesWindow {
    pub degree_bound: usize,
    #[serde(serialize_with = "crate::io::ser_rats")]
    pub coefficients: Vec<Rat>,
}

/// Riemann–Roch correction of a singularity: the numerator of
/// `Q_σ = (1/(1-t^R)) Σ_{i=1}^{R-1} (δ_{ai} - δ_0) t^{i-1}` and its expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RiemannRochTerm {
    pub order: usize,
    /// Coefficients of `t^0 … t^{R-2}`.
    #[serde(serialize_with = "crate::io::ser_rats")]
    pub numerator: Vec<Rat>,
    pub window: SeriesWindow,
}

impl RiemannRochTerm {
    /// Coefficient of `t^i` in `Q_σ`.
    pub fn coefficient(&self, i: usize) -> Rat {
        self.numerator.get(i % self.order).cloned().unwrap_or_else(Rat::zero)
    }
}

/// `δ_j` for `j = 0..R`, where
/// `δ_j = (1/R) Σ_{ε^R = 1, ε ≠ 1} ε^j / ((1-ε)(1-ε^q))`.
///
/// Uses `1/(1-ζ) = -(1/R) Σ_{m<R} m ζ^m` for a nontrivial `R`-th root of unity
/// `ζ`, which turns the sum over roots into a count over residues:
/// `δ_j = (R·T(j) - S) / R³` with `S = Σ m m'` and `T(j)` the same sum restricted
/// to `j + m + q m' ≡ 0 (mod R)`.
pub fn dedekind_deltas(big_r: usize, q: usize) -> Vec<Rat> {
    let r = big_r as u128;
    let mut t = vec![0u128; big_r];
    let mut s: u128 = 0;
    for m in 0..r {
        for mp in 0..r {
            let w = m * mp;
            s += w;
            t[((m + q as u128 * mp) % r) as usize] += w;
        }
    }
    let r3 = BigInt::from(r * r * r);
    (0..big_r)
        .map(|j| {
            let idx = (big_r - j % big_r) % big_r;
            let num = BigInt::from(r) * BigInt::from(t[idx]) - BigInt::from(s);
            Rat::new(num, r3.clone())
        })
        .collect()
}

/// The Riemann–Roch correction of `sigma`, expanded up to `t^D`.
pub fn rr_contribution(sigma: &CyclicQuotientSingularity, d: usize) -> RiemannRochTerm {
    let big_r = sigma.order().to_usize().expect("singularity order fits in usize");
    let q = sigma.q().to_usize().expect("weight fits in usize");
    if big_r <= 1 {
        return RiemannRochTerm {
            order: 1,
            numerator: vec![],
            window: SeriesWindow { degree_bound: d, coefficients: vec![Rat::zero(); d + 1] },
        };
    }
    let a = (q + 1) % big_r;
    let delta = dedekind_deltas(big_r, q);
    let numerator: Vec<Rat> = (1..big_r).map(|i| &delta[(a * i).mod_floor(&big_r)] - &delta[0]).collect();
    let coeff = |i: usize| numerator.get(i % big_r).cloned().unwrap_or_else(Rat::zero);
    let coefficients = (0..=d).map(coeff).collect();
    RiemannRochTerm { order: big_r, numerator, window: SeriesWindow { degree_bound: d, coefficients } }
}
