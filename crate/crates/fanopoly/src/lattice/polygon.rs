use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::vec::{orient, IntVec2, UnimodularMap};
use crate::error::{Error, Result};

/// A Fano polygon: primitive lattice vertices in counter-clockwise order with
/// the origin strictly inside.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FanoPolygon {
    vertices: Vec<IntVec2>,
}

/// Data attached to one edge of a polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub index: usize,
    pub start: IntVec2,
    pub end: IntVec2,
    /// Primitive inner normal in M, with `w·v = -r` on the edge.
    pub w: IntVec2,
    /// Height (local index) of the edge.
    pub r: BigInt,
    /// Width: number of lattice segments along the edge.
    pub k: BigInt,
}

impl EdgeData {
    /// Number of primitive T-cones in the cone over this edge.
    pub fn t_cones(&self) -> BigInt {
        self.k.div_floor(&self.r)
    }

    pub fn admits_mutation(&self) -> bool {
        self.k >= self.r
    }
}

/// Strict convex hull (no collinear points kept), counter-clockwise, starting
/// from the lowest-then-leftmost point.
pub(crate) fn convex_hull(points: &[IntVec2]) -> Vec<IntVec2> {
    let mut pts: Vec<IntVec2> = points.to_vec();
    pts.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    // Monotone chain on (y, x) order.
    let mut lower: Vec<IntVec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<IntVec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Build a Fano polygon as the convex hull of `points`.
pub fn make_polygon(points: &[IntVec2]) -> Result<FanoPolygon> {
    let mut distinct = points.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(Error::Degenerate(format!("need at least 3 distinct points, got {}", distinct.len())));
    }
    let hull = convex_hull(&distinct);
    if hull.len() < 3 {
        return Err(Error::Degenerate("points are collinear".into()));
    }
    FanoPolygon::from_ccw(hull)
}

impl FanoPolygon {
    /// Validate an already strictly convex counter-clockwise vertex list.
    pub(crate) fn from_ccw(vertices: Vec<IntVec2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Degenerate(format!("{n} vertices")));
        }
        for v in &vertices {
            if !v.is_primitive() {
                return Err(Error::NotFano(format!("vertex {v} is not primitive")));
            }
        }
        for i in 0..n {
            let (a, b, c) = (&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if !orient(a, b, c).is_positive() {
                return Err(Error::Degenerate(format!("vertices {a}, {b}, {c} are not strictly convex")));
            }
            if !a.det(b).is_positive() {
                return Err(Error::NotFano(format!("origin is not strictly inside (edge {a} to {b})")));
            }
        }
        Ok(FanoPolygon { vertices })
    }

    /// Build from a strictly convex counter-clockwise list of small coordinates.
    pub fn from_i64_ccw(coords: &[(i64, i64)]) -> Result<Self> {
        Self::from_ccw(coords.iter().map(|&(x, y)| IntVec2::new(x, y)).collect())
    }

    /// Convex hull of small coordinate pairs.
    pub fn from_i64(coords: &[(i64, i64)]) -> Result<Self> {
        make_polygon(&coords.iter().map(|&(x, y)| IntVec2::new(x, y)).collect::<Vec<_>>())
    }

    pub fn vertices(&self) -> &[IntVec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &IntVec2 {
        &self.vertices[i % self.vertices.len()]
    }

    /// Image under a unimodular map, re-oriented counter-clockwise.
    pub fn transform(&self, g: &UnimodularMap) -> FanoPolygon {
        let mut vs: Vec<IntVec2> = self.vertices.iter().map(|v| g.apply(v)).collect();
        if g.det().is_negative() {
            vs.reverse();
        }
        FanoPolygon { vertices: vs }
    }

    pub fn as_i64(&self) -> Option<Vec<(i64, i64)>> {
        self.vertices.iter().map(|v| v.to_i64()).collect()
    }

    /// True iff `p` lies in the closed polygon.
    pub fn contains(&self, p: &IntVec2) -> bool {
        let n = self.len();
        (0..n).all(|i| !orient(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative())
    }

    pub fn is_reflexive(&self) -> bool {
        edge_data(self).iter().all(|e| e.r == BigInt::from(1))
    }
}

impl fmt::Display for FanoPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Edge data for every edge, edge `i` running from vertex `i` to vertex `i+1`.
pub fn edge_data(p: &FanoPolygon) -> Vec<EdgeData> {
    let n = p.len();
    (0..n)
        .map(|i| {
            let a = &p.vertices[i];
            let b = &p.vertices[(i + 1) % n];
            let d = b - a;
            let k = d.content();
            let e = d.primitive();
            let w = IntVec2 { x: -&e.y, y: e.x.clone() };
            let r = -w.dot(a);
            EdgeData { index: i, start: a.clone(), end: b.clone(), w, r, k }
        })
        .collect()
}

/// `(boundary points, interior points, normalized volume)`.
pub fn counts(p: &FanoPolygon) -> (BigInt, BigInt, BigInt) {
    let n = p.len();
    let mut boundary = BigInt::zero();
    let mut vol = BigInt::zero();
    for i in 0..n {
        let a = &p.vertices[i];
        let b = &p.vertices[(i + 1) % n];
        boundary += (b - a).content();
        vol += a.det(b);
    }
    let interior = (&vol - &boundary + BigInt::from(2)) / BigInt::from(2);
    (boundary, interior, vol)
}
