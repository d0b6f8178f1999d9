use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rat = BigRational;

pub(crate) fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub(crate) fn rat_int(v: &BigInt) -> Rat {
    Rat::from_integer(v.clone())
}

/// A vector in a rank-two lattice (either N or its dual M).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVec2 {
    pub x: BigInt,
    pub y: BigInt,
}

impl IntVec2 {
    pub fn new(x: i64, y: i64) -> Self {
        IntVec2 { x: big(x), y: big(y) }
    }

    pub fn from_big(x: BigInt, y: BigInt) -> Self {
        IntVec2 { x, y }
    }

    pub fn zero() -> Self {
        IntVec2::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Non-negative gcd of the two coordinates.
    pub fn content(&self) -> BigInt {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    /// Divide out the content. The zero vector is returned unchanged.
    pub fn primitive(&self) -> IntVec2 {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        IntVec2 { x: &self.x / &g, y: &self.y / &g }
    }

    /// Pairing of a vector of M with a vector of N.
    pub fn dot(&self, other: &IntVec2) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    /// The determinant `self ∧ other`.
    pub fn det(&self, other: &IntVec2) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, s: &BigInt) -> IntVec2 {
        IntVec2 { x: &self.x * s, y: &self.y * s }
    }

    pub fn to_rat(&self) -> RatVec2 {
        RatVec2 { x: rat_int(&self.x), y: rat_int(&self.y) }
    }

    /// Coordinates as `i64`, if they fit.
    pub fn to_i64(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        Some((self.x.to_i64()?, self.y.to_i64()?))
    }
}

impl fmt::Display for IntVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for &IntVec2 {
    type Output = IntVec2;
    fn add(self, o: &IntVec2) -> IntVec2 {
        IntVec2 { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl Sub for &IntVec2 {
    type Output = IntVec2;
    fn sub(self, o: &IntVec2) -> IntVec2 {
        IntVec2 { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl Neg for &IntVec2 {
    type Output = IntVec2;
    fn neg(self) -> IntVec2 {
        IntVec2 { x: -&self.x, y: -&self.y }
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec2 {
    pub x: Rat,
    pub y: Rat,
}

impl RatVec2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        RatVec2 { x, y }
    }

    pub fn det(&self, o: &RatVec2) -> Rat {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot_int(&self, v: &IntVec2) -> Rat {
        &self.x * rat_int(&v.x) + &self.y * rat_int(&v.y)
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn to_int(&self) -> Option<IntVec2> {
        if self.is_integral() {
            Some(IntVec2 { x: self.x.to_integer(), y: self.y.to_integer() })
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Rat) -> RatVec2 {
        RatVec2 { x: &self.x * s, y: &self.y * s }
    }
}

impl Add for &RatVec2 {
    type Output = RatVec2;
    fn add(self, o: &RatVec2) -> RatVec2 {
        RatVec2 { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl Sub for &RatVec2 {
    type Output = RatVec2;
    fn sub(self, o: &RatVec2) -> RatVec2 {
        RatVec2 { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl fmt::Display for RatVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Orientation of the triple `(a, b, c)`: positive for a left turn.
pub(crate) fn orient(a: &IntVec2, b: &IntVec2, c: &IntVec2) -> BigInt {
    (b - a).det(&(c - a))
}

pub(crate) fn orient_rat(a: &RatVec2, b: &RatVec2, c: &RatVec2) -> Rat {
    (b - a).det(&(c - a))
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// An element of GL₂(ℤ) acting on column vectors: `(x, y) ↦ (a x + b y, c x + d y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMap {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl UnimodularMap {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let m = UnimodularMap { a, b, c, d };
        let det = m.det();
        if det.is_one() || (-&det).is_one() {
            Ok(m)
        } else {
            Err(Error::BadInput(format!("matrix has determinant {det}, expected ±1")))
        }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(big(a), big(b), big(c), big(d))
    }

    pub fn identity() -> Self {
        UnimodularMap { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero(), d: BigInt::one() }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, v: &IntVec2) -> IntVec2 {
        IntVec2 { x: &self.a * &v.x + &self.b * &v.y, y: &self.c * &v.x + &self.d * &v.y }
    }

    pub fn apply_rat(&self, v: &RatVec2) -> RatVec2 {
        let (a, b, c, d) = (rat_int(&self.a), rat_int(&self.b), rat_int(&self.c), rat_int(&self.d));
        RatVec2 { x: &a * &v.x + &b * &v.y, y: &c * &v.x + &d * &v.y }
    }

    /// `self ∘ other`.
    pub fn compose(&self, o: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let det = self.det();
        UnimodularMap { a: &self.d * &det, b: -&self.b * &det, c: -&self.c * &det, d: &self.a * &det }
    }

    /// The induced action on the dual lattice, `u ↦ u ∘ self⁻¹`, so that pairings are preserved.
    pub fn dual_map(&self) -> UnimodularMap {
        let inv = self.inverse();
        UnimodularMap { a: inv.a, b: inv.c, c: inv.b, d: inv.d }
    }
}

impl Mul for &UnimodularMap {
    type Output = UnimodularMap;
    fn mul(self, o: &UnimodularMap) -> UnimodularMap {
        self.compose(o)
    }
}
