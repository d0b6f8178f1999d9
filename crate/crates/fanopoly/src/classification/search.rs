//! Depth-first search for convex chains of primitive lattice points.
//!
//! Coordinates are bounded by the search box, so the search runs on `i64`
//! (with `i128` products); results are converted to exact polygons.

use num_integer::Integer;

pub(crate) type P2 = (i64, i64);

fn det(a: P2, b: P2) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn dot(a: P2, b: P2) -> i128 {
    a.0 as i128 * b.0 as i128 + a.1 as i128 * b.1 as i128
}

fn sub(a: P2, b: P2) -> P2 {
    (a.0 - b.0, a.1 - b.1)
}

pub(crate) fn is_primitive(v: P2) -> bool {
    v.0.gcd(&v.1) == 1
}

/// `(s, t)` with `s·a + t·b = gcd(a, b)`.
fn bezout(a: i64, b: i64) -> (i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.x, -e.y)
    } else {
        (e.x, e.y)
    }
}

/// Integers `j` with `lo <= a + j·b <= hi`, or `None` when `b = 0` leaves `j` free.
fn j_range(a: i64, b: i64, lo: i64, hi: i64) -> Option<(i64, i64)> {
    if b == 0 {
        return if lo <= a && a <= hi { None } else { Some((1, 0)) };
    }
    let (p, q) = ((lo - a), (hi - a));
    if b > 0 {
        Some((Integer::div_ceil(&p, &b), Integer::div_floor(&q, &b)))
    } else {
        Some((Integer::div_ceil(&q, &b), Integer::div_floor(&p, &b)))
    }
}

/// A chain problem: find every strictly convex chain of primitive points
/// `start = u_0, u_1, …, u_s, end` (counter-clockwise) such that
/// the edge directions strictly increase in angle after `d_in` and stay
/// strictly before `d_out`, every edge has height in `1..=max_height`, and every
/// free vertex lies in the box.
#[derive(Clone, Debug)]
pub(crate) struct ChainProblem {
    pub start: P2,
    pub d_in: P2,
    pub end: P2,
    pub d_out: P2,
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
    pub max_height: i64,
}

impl ChainProblem {
    fn half(&self, v: P2) -> u8 {
        let d = det(self.d_in, v);
        if d > 0 || (d == 0 && dot(self.d_in, v) > 0) {
            0
        } else {
            1
        }
    }

    /// Angle order of directions measured counter-clockwise from `d_in`.
    fn before(&self, a: P2, b: P2) -> bool {
        let (ha, hb) = (self.half(a), self.half(b));
        if ha != hb {
            return ha < hb;
        }
        det(a, b) > 0
    }

    fn full_turn(&self) -> bool {
        det(self.d_in, self.d_out) == 0 && dot(self.d_in, self.d_out) > 0
    }

    /// `e` comes strictly after `prev` and strictly before `d_out`.
    fn admissible_direction(&self, prev: P2, e: P2, first: bool) -> bool {
        let after_prev = if first {
            // relative to d_in itself: anything but d_in
            !(det(self.d_in, e) == 0 && dot(self.d_in, e) > 0)
        } else {
            self.before(prev, e)
        };
        after_prev && (self.full_turn() || self.before(e, self.d_out))
    }

    fn in_box(&self, v: P2) -> bool {
        self.xmin <= v.0 && v.0 <= self.xmax && self.ymin <= v.1 && v.1 <= self.ymax
    }

    /// Call `visit` with the free vertices of every solution.
    pub fn solve(&self, visit: &mut dyn FnMut(&[P2])) {
        let mut chain = Vec::new();
        self.dfs(self.start, self.d_in, true, &mut chain, visit);
    }

    fn dfs(&self, u: P2, prev: P2, first: bool, chain: &mut Vec<P2>, visit: &mut dyn FnMut(&[P2])) {
        // Close the chain with the edge u → end.
        let close = sub(self.end, u);
        let g = close.0.gcd(&close.1);
        if g > 0 {
            let e = (close.0 / g, close.1 / g);
            let h = det(u, e);
            if h >= 1 && h <= self.max_height as i128 && self.admissible_direction(prev, e, first) {
                visit(chain);
            }
        }
        // Extend by one more vertex v = u + m·e with det(u, e) = c.
        let (s, t) = bezout(u.0, u.1);
        let e1 = (-t, s);
        for c in 1..=self.max_height {
            let base = (u.0 + c * e1.0, u.1 + c * e1.1);
            let rx = j_range(base.0, u.0, self.xmin, self.xmax);
            let ry = j_range(base.1, u.1, self.ymin, self.ymax);
            let (jlo, jhi) = match (rx, ry) {
                (Some(a), Some(b)) => (a.0.max(b.0), a.1.min(b.1)),
                (Some(a), None) | (None, Some(a)) => a,
                (None, None) => unreachable!("u is nonzero"),
            };
            for j in jlo..=jhi {
                if c.gcd(&j) != 1 {
                    continue;
                }
                let e = (c * e1.0 + j * u.0, c * e1.1 + j * u.1);
                if !self.admissible_direction(prev, e, first) {
                    continue;
                }
                // end must stay strictly to the left of the new edge's line
                if det(e, sub(self.end, u)) <= 0 {
                    continue;
                }
                let mut v = (u.0 + e.0, u.1 + e.1);
                while self.in_box(v) {
                    if v != self.end && is_primitive(v) {
                        chain.push(v);
                        self.dfs(v, e, false, chain, visit);
                        chain.pop();
                    }
                    v = (v.0 + e.0, v.1 + e.1);
                }
            }
        }
    }
}
