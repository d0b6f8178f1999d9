use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

use super::polygon::{edge_data, FanoPolygon};
use super::vec::{orient_rat, rat_int, Rat, RatVec2};
use crate::error::{Error, Result};

/// A convex polygon with rational vertices, counter-clockwise, origin strictly inside.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolygon {
    vertices: Vec<RatVec2>,
}

fn rat_hull(points: &[RatVec2]) -> Vec<RatVec2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<RatVec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !orient_rat(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RatVec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !orient_rat(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl RationalPolygon {
    /// Convex hull of `points`; the origin must end up strictly inside.
    pub fn from_points(points: &[RatVec2]) -> Result<Self> {
        let hull = rat_hull(points);
        if hull.len() < 3 {
            return Err(Error::Degenerate("rational polygon is not two-dimensional".into()));
        }
        let n = hull.len();
        for i in 0..n {
            if !hull[i].det(&hull[(i + 1) % n]).is_positive() {
                return Err(Error::NotFano("origin is not strictly inside the rational polygon".into()));
            }
        }
        Ok(RationalPolygon { vertices: hull })
    }

    pub fn vertices(&self) -> &[RatVec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Canonically rotated copy: starts at the lowest-then-leftmost vertex.
    pub fn normalized(&self) -> RationalPolygon {
        let n = self.vertices.len();
        let start = (0..n).min_by(|&i, &j| {
            let (a, b) = (&self.vertices[i], &self.vertices[j]);
            (&a.y, &a.x).cmp(&(&b.y, &b.x))
        });
        let start = start.unwrap_or(0);
        RationalPolygon { vertices: (0..n).map(|i| self.vertices[(start + i) % n].clone()).collect() }
    }

    /// Polar dual `{x : u(x) >= -1 for all u}`; counter-clockwise.
    pub fn dual(&self) -> RationalPolygon {
        let n = self.vertices.len();
        let vertices = (0..n)
            .map(|i| {
                let (u1, u2) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
                let d = u1.det(u2);
                RatVec2 { x: -(&u2.y - &u1.y) / &d, y: -(&u1.x - &u2.x) / &d }
            })
            .collect();
        RationalPolygon { vertices }
    }

    /// Integral polygon with the same vertices, if all vertices are lattice points.
    pub fn to_fano(&self) -> Result<FanoPolygon> {
        let vs = self
            .vertices
            .iter()
            .map(|v| v.to_int().ok_or_else(|| Error::NotFano(format!("vertex {v} is not a lattice point"))))
            .collect::<Result<Vec<_>>>()?;
        FanoPolygon::from_ccw(vs)
    }

    /// Twice the Euclidean area.
    pub fn normalized_volume(&self) -> Rat {
        let n = self.vertices.len();
        let mut s = Rat::zero();
        for i in 0..n {
            s += self.vertices[i].det(&self.vertices[(i + 1) % n]);
        }
        s
    }

    /// True iff `p` lies in the closed dilate `i·self`.
    pub fn dilate_contains(&self, i: u64, p: &RatVec2) -> bool {
        let s = Rat::from_integer(BigInt::from(i));
        let n = self.vertices.len();
        (0..n).all(|j| {
            let a = self.vertices[j].scale(&s);
            let b = self.vertices[(j + 1) % n].scale(&s);
            !orient_rat(&a, &b, p).is_negative()
        })
    }
}

impl fmt::Display for RationalPolygon {
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

/// The dual polygon: one vertex `w_E / r_E` per edge `E`, counter-clockwise.
pub fn dual_polygon(p: &FanoPolygon) -> RationalPolygon {
    let vertices = edge_data(p)
        .iter()
        .map(|e| {
            let r = rat_int(&e.r);
            RatVec2 { x: rat_int(&e.w.x) / &r, y: rat_int(&e.w.y) / &r }
        })
        .collect();
    RationalPolygon { vertices }
}

/// Twice the area of the dual polygon.
pub fn normalized_dual_volume(p: &FanoPolygon) -> Rat {
    dual_polygon(p).normalized_volume()
}

fn floor_rat(q: &Rat) -> BigInt {
    q.floor().to_integer()
}

fn ceil_rat(q: &Rat) -> BigInt {
    q.ceil().to_integer()
}

fn to_i128(v: &BigInt) -> i128 {
    v.to_i128().expect("bounding box fits in i128")
}

/// Number of lattice points in `i·D`, by scanning the bounding box with exact half-plane tests.
pub fn ehrhart_count(d: &RationalPolygon, i: u64) -> BigInt {
    if i == 0 {
        return BigInt::from(1);
    }
    let s = Rat::from_integer(BigInt::from(i));
    let scaled: Vec<RatVec2> = d.vertices.iter().map(|v| v.scale(&s)).collect();
    let xmin = scaled.iter().map(|v| v.x.clone()).min().expect("nonempty");
    let xmax = scaled.iter().map(|v| v.x.clone()).max().expect("nonempty");
    let ymin = scaled.iter().map(|v| v.y.clone()).min().expect("nonempty");
    let ymax = scaled.iter().map(|v| v.y.clone()).max().expect("nonempty");
    // Each edge a→b gives an integer inequality A·x + B·y + C >= 0 after clearing denominators.
    let n = scaled.len();
    let mut ineqs: Vec<(BigInt, BigInt, BigInt)> = Vec::with_capacity(n);
    for j in 0..n {
        let (a, b) = (&scaled[j], &scaled[(j + 1) % n]);
        // orient(a, b, p) = (b-a) ∧ (p-a) = dx*(py-ay) - dy*(px-ax)
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        let ca = -&dy;
        let cb = dx.clone();
        let cc = &dy * &a.x - &dx * &a.y;
        let den = ca.denom().lcm(cb.denom()).lcm(cc.denom());
        let q = Rat::from_integer(den);
        ineqs.push(((&ca * &q).to_integer(), (&cb * &q).to_integer(), (&cc * &q).to_integer()));
    }
    let (x0, x1) = (to_i128(&ceil_rat(&xmin)), to_i128(&floor_rat(&xmax)));
    let (y0, y1) = (to_i128(&ceil_rat(&ymin)), to_i128(&floor_rat(&ymax)));
    let small: Option<Vec<(i128, i128, i128)>> =
        ineqs.iter().map(|(a, b, c)| Some((a.to_i128()?, b.to_i128()?, c.to_i128()?))).collect();
    let mut count: u64 = 0;
    match small {
        Some(ineqs) if ineqs.iter().all(|(a, b, c)| a.abs() < 1 << 40 && b.abs() < 1 << 40 && c.abs() < 1 << 80) => {
            for y in y0..=y1 {
                for x in x0..=x1 {
                    if ineqs.iter().all(|&(a, b, c)| a * x + b * y + c >= 0) {
                        count += 1;
                    }
                }
            }
        }
        _ => {
            for y in y0..=y1 {
                for x in x0..=x1 {
                    let (bx, by) = (BigInt::from(x), BigInt::from(y));
                    if ineqs.iter().all(|(a, b, c)| !(a * &bx + b * &by + c).is_negative()) {
                        count += 1;
                    }
                }
            }
        }
    }
    BigInt::from(count)
}

/// Number of lattice points in `i·D`, by intersecting each horizontal lattice
/// line with the polygon and counting the integers in the resulting interval.
pub fn ehrhart_count_rows(d: &RationalPolygon, i: u64) -> BigInt {
    if i == 0 {
        return BigInt::from(1);
    }
    let s = Rat::from_integer(BigInt::from(i));
    let scaled: Vec<RatVec2> = d.vertices.iter().map(|v| v.scale(&s)).collect();
    let n = scaled.len();
    let ymin = scaled.iter().map(|v| v.y.clone()).min().expect("nonempty");
    let ymax = scaled.iter().map(|v| v.y.clone()).max().expect("nonempty");
    let mut total = BigInt::zero();
    let mut y = ceil_rat(&ymin);
    let ytop = floor_rat(&ymax);
    while y <= ytop {
        let yr = rat_int(&y);
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for j in 0..n {
            let (a, b) = (&scaled[j], &scaled[(j + 1) % n]);
            let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
            if yr < *ylo || yr > *yhi {
                continue;
            }
            let xs: Vec<Rat> = if a.y == b.y {
                vec![a.x.clone(), b.x.clone()]
            } else {
                let t = (&yr - &a.y) / (&b.y - &a.y);
                vec![&a.x + &t * (&b.x - &a.x)]
            };
            for x in xs {
                lo = Some(match lo {
                    Some(l) if l <= x => l,
                    _ => x.clone(),
                });
                hi = Some(match hi {
                    Some(h) if h >= x => h,
                    _ => x,
                });
            }
        }
        if let (Some(l), Some(h)) = (lo, hi) {
            let c = floor_rat(&h) - ceil_rat(&l) + BigInt::from(1);
            if c.is_positive() {
                total += c;
            }
        }
        y += BigInt::from(1);
    }
    total
}
