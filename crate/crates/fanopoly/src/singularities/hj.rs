use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::cqs::CyclicQuotientSingularity;
use crate::error::{Error, Result};
use crate::lattice::{rat_int, Rat};

/// Hirzebruch–Jung expansion `p/q = [b_1, …, b_s]` with the companion
/// sequences `α`, `β` and discrepancies `d_i = -1 + (α_i + β_i)/p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HJExpansion {
    pub p: BigInt,
    pub q: BigInt,
    pub b: Vec<BigInt>,
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
    #[serde(serialize_with = "crate::io::ser_rats")]
    pub d: Vec<Rat>,
}

impl HJExpansion {
    /// Evaluate `b_1 - 1/(b_2 - 1/(… - 1/b_s))`.
    pub fn value(&self) -> Rat {
        eval_hj(&self.b)
    }
}

pub(crate) fn eval_hj(b: &[BigInt]) -> Rat {
    let mut acc: Option<Rat> = None;
    for bi in b.iter().rev() {
        acc = Some(match acc {
            None => rat_int(bi),
            Some(x) => rat_int(bi) - Rat::one() / x,
        });
    }
    acc.unwrap_or_else(Rat::zero)
}

/// Expand `p/q` for `0 < q < p`, `gcd(p, q) = 1`.
pub fn hj_expand(p: &BigInt, q: &BigInt) -> Result<HJExpansion> {
    if !q.is_positive() || q >= p || !p.gcd(q).is_one() {
        return Err(Error::BadInput(format!("hj_expand needs 0 < q < p coprime, got p={p}, q={q}")));
    }
    let mut b = Vec::new();
    let (mut num, mut den) = (p.clone(), q.clone());
    while !den.is_zero() {
        let bi = num.div_ceil(&den);
        let next = &bi * &den - &num;
        b.push(bi);
        num = den;
        den = next;
    }
    let s = b.len();
    // α_0 = 0, α_1 = 1, α_{i+1} = b_i α_i - α_{i-1}
    let mut alpha = vec![BigInt::one()];
    let mut prev = BigInt::zero();
    for i in 0..s - 1 {
        let next = &b[i] * &alpha[i] - &prev;
        prev = alpha[i].clone();
        alpha.push(next);
    }
    // β_{s+1} = 0, β_s = 1, β_{i-1} = b_i β_i - β_{i+1}
    let mut beta = vec![BigInt::zero(); s];
    beta[s - 1] = BigInt::one();
    let mut after = BigInt::zero();
    for i in (1..s).rev() {
        let next = &b[i] * &beta[i] - &after;
        after = beta[i].clone();
        beta[i - 1] = next;
    }
    let pr = rat_int(p);
    let d = (0..s).map(|i| rat_int(&(&alpha[i] + &beta[i])) / &pr - Rat::one()).collect();
    Ok(HJExpansion { p: p.clone(), q: q.clone(), b, alpha, beta, d })
}

/// HJ expansion of `R/q` for the presentation `1/R(1, q)` of `sigma`.
pub fn hj_of(sigma: &CyclicQuotientSingularity) -> Option<HJExpansion> {
    let big_r = sigma.order();
    let q = sigma.q();
    if q.is_zero() {
        return None;
    }
    hj_expand(&big_r, &q).ok()
}

/// Degree contribution `A_σ = s + 1 - Σ d_i² b_i + 2 Σ d_i d_{i+1}`.
pub fn degree_contribution(sigma: &CyclicQuotientSingularity) -> Rat {
    let hj = match hj_of(sigma) {
        Some(h) => h,
        None => return Rat::one(),
    };
    let s = hj.b.len();
    let mut a = Rat::from_integer(BigInt::from(s + 1));
    for i in 0..s {
        a -= &hj.d[i] * &hj.d[i] * rat_int(&hj.b[i]);
    }
    for i in 0..s.saturating_sub(1) {
        a += Rat::from_integer(BigInt::from(2)) * &hj.d[i] * &hj.d[i + 1];
    }
    a
}
