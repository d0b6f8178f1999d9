use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{edge_data, ext_gcd, hermite_map, FanoPolygon, IntVec2};

/// A two-dimensional cyclic quotient singularity `1/(kr)(1, kc-1)`, stored by
/// its Gorenstein index `r`, width `k` and parameter `c`.
///
/// `c` is kept in `1..=r`, and of the two presentations obtained by swapping
/// the cone's rays the one with smaller `c` is stored, so equality of values is
/// equality of singularities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicQuotientSingularity {
    r: BigInt,
    k: BigInt,
    c: BigInt,
}

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, s, _) = ext_gcd(a, m);
    if g.is_one() {
        Some(s.mod_floor(m))
    } else {
        None
    }
}

/// Reduce `c` into `1..=r`.
fn reduce_c(c: &BigInt, r: &BigInt) -> BigInt {
    (c - BigInt::one()).mod_floor(r) + BigInt::one()
}

impl CyclicQuotientSingularity {
    /// Build from `(r, k, c)`; rejects parameters that do not describe an isolated singularity.
    pub fn new(r: BigInt, k: BigInt, c: BigInt) -> Result<Self> {
        if !r.is_positive() || !k.is_positive() {
            return Err(Error::BadInput(format!("r and k must be positive, got r={r}, k={k}")));
        }
        let big_r = &k * &r;
        let q = (&k * &c - BigInt::one()).mod_floor(&big_r);
        if !q.gcd(&big_r).is_one() && !big_r.is_one() {
            return Err(Error::BadInput(format!("(r,k,c)=({r},{k},{c}) is not an isolated cyclic quotient singularity")));
        }
        Ok(Self::from_q(&big_r, &q))
    }

    pub fn from_i64(r: i64, k: i64, c: i64) -> Result<Self> {
        Self::new(BigInt::from(r), BigInt::from(k), BigInt::from(c))
    }

    /// The singularity `1/R(a, b)` with `gcd(R, a) = gcd(R, b) = 1`.
    pub fn from_weights(big_r: &BigInt, a: &BigInt, b: &BigInt) -> Result<Self> {
        if !big_r.is_positive() {
            return Err(Error::BadInput(format!("order must be positive, got {big_r}")));
        }
        if big_r.is_one() {
            return Ok(Self::from_q(big_r, &BigInt::zero()));
        }
        let ainv = modinv(a, big_r).ok_or_else(|| Error::BadInput(format!("gcd({big_r},{a}) != 1")))?;
        if !b.gcd(big_r).is_one() {
            return Err(Error::BadInput(format!("gcd({big_r},{b}) != 1")));
        }
        Ok(Self::from_q(big_r, &(b * ainv).mod_floor(big_r)))
    }

    /// The singularity `1/R(1, q)`; `q` must be a unit mod `R` (or `R = 1`).
    pub(crate) fn from_q(big_r: &BigInt, q: &BigInt) -> Self {
        let k = big_r.gcd(&(q + BigInt::one()));
        let r = big_r / &k;
        let c1 = reduce_c(&((q + BigInt::one()) / &k), &r);
        let c = match modinv(q, big_r) {
            Some(qi) if !big_r.is_one() => {
                let c2 = reduce_c(&((qi + BigInt::one()) / &k), &r);
                c1.min(c2)
            }
            _ => c1,
        };
        CyclicQuotientSingularity { r, k, c }
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// The order `R = kr` of the cyclic group.
    pub fn order(&self) -> BigInt {
        &self.k * &self.r
    }

    /// The weight `q` of the presentation `1/R(1, q)`, in `0..R`.
    pub fn q(&self) -> BigInt {
        let big_r = self.order();
        (&self.k * &self.c - BigInt::one()).mod_floor(&big_r)
    }

    pub fn is_t(&self) -> bool {
        self.k.is_multiple_of(&self.r)
    }

    pub fn is_primitive_t(&self) -> bool {
        self.k == self.r
    }

    pub fn is_residual(&self) -> bool {
        self.k < self.r
    }

    /// Text form `1/R(1,q)`.
    pub fn text(&self) -> String {
        format!("1/{}(1,{})", self.order(), self.q())
    }

    /// Parse `1/R(a,b)`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("expected 1/R(a,b), got {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = t.strip_prefix("1/").ok_or_else(err)?;
        let open = rest.find('(').ok_or_else(err)?;
        let big_r: BigInt = rest[..open].parse().map_err(|_| err())?;
        let inner = rest[open + 1..].strip_suffix(')').ok_or_else(err)?;
        let mut parts = inner.split(',');
        let a: BigInt = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        let b: BigInt = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        if parts.next().is_some() {
            return Err(err());
        }
        Self::from_weights(&big_r, &a, &b)
    }
}

impl fmt::Display for CyclicQuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl Serialize for CyclicQuotientSingularity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.text())
    }
}

impl<'de> Deserialize<'de> for CyclicQuotientSingularity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CyclicQuotientSingularity::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// The singularity of the cone spanned by the primitive vectors `rho0`, `rho1`.
pub fn classify_cone(rho0: &IntVec2, rho1: &IntVec2) -> Result<CyclicQuotientSingularity> {
    if !rho0.is_primitive() || !rho1.is_primitive() {
        return Err(Error::DegenerateCone);
    }
    let d = rho0.det(rho1);
    if d.is_zero() {
        return Err(Error::DegenerateCone);
    }
    let (a, b) = if d.is_positive() { (rho0, rho1) } else { (rho1, rho0) };
    // Send a to (1,0) and b to (s, R) with 0 <= s < R; the cone is then 1/R(1, R - s).
    let g = hermite_map(a, b);
    let img = g.apply(b);
    let big_r = img.y;
    let q = (&big_r - &img.x).mod_floor(&big_r);
    Ok(CyclicQuotientSingularity::from_q(&big_r, &q))
}

/// Singularity content of a single cone: primitive T-cone count and residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConeContent {
    pub n: BigInt,
    pub residue: Option<CyclicQuotientSingularity>,
}

pub fn cone_content(sigma: &CyclicQuotientSingularity) -> ConeContent {
    let (n, k0) = sigma.k.div_mod_floor(&sigma.r);
    let residue = if k0.is_zero() {
        None
    } else {
        Some(
            CyclicQuotientSingularity::new(sigma.r.clone(), k0, sigma.c.clone())
                .expect("residue of an isolated singularity is isolated"),
        )
    };
    ConeContent { n, residue }
}

/// Singularity content `(n, basket)` of a polygon; the basket keeps cyclic edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularityContent {
    pub n: BigInt,
    pub basket: Vec<CyclicQuotientSingularity>,
}

impl SingularityContent {
    /// Basket as a sorted multiset.
    pub fn basket_sorted(&self) -> Vec<CyclicQuotientSingularity> {
        let mut b = self.basket.clone();
        b.sort();
        b
    }

    /// Equality with the basket compared as an unordered multiset.
    pub fn eq_multiset(&self, other: &SingularityContent) -> bool {
        self.n == other.n && self.basket_sorted() == other.basket_sorted()
    }

    /// Equality with the basket compared as a cyclic sequence up to rotation and reflection.
    pub fn eq_cyclic(&self, other: &SingularityContent) -> bool {
        self.n == other.n && cyclic_equal(&self.basket, &other.basket)
    }

    /// Number of basket entries equal to `sigma`.
    pub fn count_of(&self, sigma: &CyclicQuotientSingularity) -> usize {
        self.basket.iter().filter(|s| *s == sigma).count()
    }

    /// True iff every basket entry equals `sigma` (vacuously true for an empty basket).
    pub fn basket_only(&self, sigma: &CyclicQuotientSingularity) -> bool {
        self.basket.iter().all(|s| s == sigma)
    }
}

fn cyclic_equal<T: PartialEq + Clone>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let n = a.len();
    let rev: Vec<T> = b.iter().rev().cloned().collect();
    (0..n).any(|s| (0..n).all(|i| a[i] == b[(s + i) % n]) || (0..n).all(|i| a[i] == rev[(s + i) % n]))
}

impl fmt::Display for SingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.n)?;
        for (i, s) in self.basket.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}})")
    }
}

/// Per-edge singularities of a polygon, in edge order.
pub fn edge_singularities(p: &FanoPolygon) -> Vec<CyclicQuotientSingularity> {
    edge_data(p)
        .iter()
        .map(|e| classify_cone(&e.start, &e.end).expect("vertices of a Fano polygon span proper cones"))
        .collect()
}

pub fn singularity_content(p: &FanoPolygon) -> SingularityContent {
    let mut n = BigInt::zero();
    let mut basket = Vec::new();
    for sigma in edge_singularities(p) {
        let cc = cone_content(&sigma);
        n += cc.n;
        if let Some(res) = cc.residue {
            basket.push(res);
        }
    }
    SingularityContent { n, basket }
}
