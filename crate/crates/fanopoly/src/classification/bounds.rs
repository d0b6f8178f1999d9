use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::ser_rat;
use crate::lattice::Rat;
use crate::singularities::{degree_contribution, CyclicQuotientSingularity};

/// Numerical bounds attached to a residual basket: the largest local index
/// `m`, the common denominator `d` of the degree contributions, and the
/// largest negative contribution `s`, negated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasketBounds {
    pub m: i64,
    pub d: i64,
    #[serde(serialize_with = "ser_rat")]
    pub s: Rat,
}

impl BasketBounds {
    /// Largest `r` with `r² - s·d·r - d·(a·s + c) < 0`, i.e. strictly below
    /// the positive root of that quadratic.
    fn r_limit(&self, a: i64, c: i64) -> i64 {
        let d = Rat::from_integer(BigInt::from(self.d));
        let lin = &self.s * &d;
        let cst = &d * (&self.s * Rat::from_integer(BigInt::from(a)) + Rat::from_integer(BigInt::from(c)));
        let mut r = 0i64;
        loop {
            let x = Rat::from_integer(BigInt::from(r + 1));
            if &x * &x - &lin * &x - &cst >= Rat::zero() {
                return r;
            }
            r += 1;
        }
    }

    /// Largest `j` with `j < 11 + (r + extra)·s`.
    fn j_limit(&self, r: i64, extra: i64) -> i64 {
        let bound = Rat::from_integer(BigInt::from(11)) + Rat::from_integer(BigInt::from(r + extra)) * &self.s;
        let f = bound.floor().to_integer();
        let f = if Rat::from_integer(f.clone()) == bound { f - 1 } else { f };
        f.to_i64().expect("j bound fits in i64")
    }
}

pub fn basket_bounds(basket: &[CyclicQuotientSingularity]) -> Result<BasketBounds> {
    let mut m = BigInt::one();
    let mut d = BigInt::one();
    let mut min_a = Rat::zero();
    for sigma in basket {
        if !sigma.is_residual() {
            return Err(Error::NonResidualEntry(sigma.text()));
        }
        m = m.max(sigma.r().clone());
        let a = degree_contribution(sigma);
        d = d.lcm(a.denom());
        if a < min_a {
            min_a = a;
        }
    }
    let to = |x: &BigInt| x.to_i64().ok_or_else(|| Error::Unsupported(format!("basket bound {x} exceeds 64 bits")));
    Ok(BasketBounds { m: to(&m)?, d: to(&d)?, s: -min_a })
}

/// Parameters of the vertical-edge case: an edge of `j` primitive T-cones at
/// height `b`, opposite a top edge of height `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CandidateTriple {
    pub j: i64,
    pub r: i64,
    pub b: i64,
}

/// All triples `(j, r, b)` with `j ≥ 5`, `r > m_B` (and `r ≥ 2`),
/// `gcd(b, r) = 1`, `2r ≤ jb`, `2b ≤ r` and `r²(j − 4) ≤ j²·d_B`.
///
/// For an empty basket `j ≤ 9`: the top edge and at least one further edge
/// carry a T-cone each. Otherwise `j < 11 + (r + 1)·s_B`.
pub fn candidate_triples(basket: &[CyclicQuotientSingularity]) -> Result<Vec<CandidateTriple>> {
    let bb = basket_bounds(basket)?;
    let mut out = Vec::new();
    let r_max = bb.r_limit(1, 31);
    for r in (bb.m + 1).max(2)..=r_max {
        let j_max = if basket.is_empty() { 9 } else { bb.j_limit(r, 1) };
        for j in 5..=j_max {
            if r * r * (j - 4) > j * j * bb.d {
                continue;
            }
            let b_min = Integer::div_ceil(&(2 * r), &j);
            for b in b_min.max(1)..=r / 2 {
                if b.gcd(&r) == 1 {
                    out.push(CandidateTriple { j, r, b });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Parameters of the vertical-edge case where that edge also carries a
/// residual cone `(b, l)`; `b` and `l` are the local index and width of a
/// basket entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ResidualCandidate {
    pub j: i64,
    pub r: i64,
    pub b: i64,
    pub l: i64,
}

pub(crate) fn residual_candidates(basket: &[CyclicQuotientSingularity]) -> Result<Vec<ResidualCandidate>> {
    let bb = basket_bounds(basket)?;
    let mut pairs: Vec<(i64, i64)> = basket
        .iter()
        .map(|s| (s.r().to_i64().expect("bounded index"), s.k().to_i64().expect("bounded width")))
        .collect();
    pairs.sort();
    pairs.dedup();
    let mut out = Vec::new();
    let r_max = bb.r_limit_residual();
    for &(b, l) in &pairs {
        for r in (bb.m + 1)..=r_max {
            if 2 * b >= r || b.gcd(&r) != 1 || b.gcd(&(r - l)) != 1 {
                continue;
            }
            let j_max = bb.j_limit(r, 2);
            for j in 4..=j_max {
                if 2 * r > j * b + l {
                    continue;
                }
                if j == 4 {
                    // r − l/2 ≤ 2b and r < 10·d_B
                    if 2 * r - l > 4 * b || r >= 10 * bb.d {
                        continue;
                    }
                } else if (j - 4) * r * r + 2 * l * r >= j * (j + 1) * bb.d {
                    continue;
                }
                out.push(ResidualCandidate { j, r, b, l });
            }
        }
    }
    out.sort();
    Ok(out)
}

impl BasketBounds {
    /// Bound on `r` in the residual vertical-edge case; also covers `j = 4`,
    /// where `r < 10·d_B`.
    fn r_limit_residual(&self) -> i64 {
        self.r_limit(2, 36).max(10 * self.d - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn third() -> CyclicQuotientSingularity {
        CyclicQuotientSingularity::from_i64(3, 1, 2).unwrap()
    }

    #[test]
    fn bounds_of_small_baskets() {
        let e = basket_bounds(&[]).unwrap();
        assert_eq!((e.m, e.d, e.s.clone()), (1, 1, Rat::zero()));
        let t = basket_bounds(&[third(), third()]).unwrap();
        assert_eq!((t.m, t.d, t.s.clone()), (3, 3, Rat::zero()));
        let six = CyclicQuotientSingularity::parse("1/6(1,1)").unwrap();
        let b = basket_bounds(&[six]).unwrap();
        assert_eq!((b.m, b.d), (3, 3));
        assert_eq!(b.s, Rat::new(2.into(), 3.into()));
    }

    #[test]
    fn t_singularity_is_rejected() {
        let t = CyclicQuotientSingularity::parse("1/4(1,1)").unwrap();
        assert!(matches!(basket_bounds(&[t]), Err(Error::NonResidualEntry(_))));
    }

    #[test]
    fn r_limit_is_strict() {
        // r² < 31 for the empty basket; r² < 93 for ⅓-baskets
        assert_eq!(basket_bounds(&[]).unwrap().r_limit(1, 31), 5);
        assert_eq!(basket_bounds(&[third()]).unwrap().r_limit(1, 31), 9);
    }

    #[test]
    fn j_limit_is_strict() {
        let mut bb = basket_bounds(&[]).unwrap();
        assert_eq!(bb.j_limit(7, 1), 10);
        bb.s = Rat::new(1.into(), 2.into());
        // 11 + 4·½ = 13 exactly, so j ≤ 12
        assert_eq!(bb.j_limit(3, 1), 12);
    }

    #[test]
    fn third_triples_respect_ranges() {
        let ts = candidate_triples(&[third()]).unwrap();
        assert!(!ts.is_empty());
        for t in &ts {
            assert!((5..11).contains(&t.j) && 3 < t.r && t.r <= 9);
            assert!(2 * t.r <= t.j * t.b && 2 * t.b <= t.r);
        }
    }

    #[test]
    fn large_s_stays_finite() {
        let s = CyclicQuotientSingularity::parse("1/7(1,1)").unwrap();
        let bb = basket_bounds(std::slice::from_ref(&s)).unwrap();
        assert!(bb.s.is_positive());
        assert!(candidate_triples(&[s]).unwrap().len() < 100_000);
    }
}
