#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;
use rand::Rng;

use fanopoly::classification::{table_polygons, TableId};
use fanopoly::{edge_data, make_polygon, CyclicQuotientSingularity, FanoPolygon, IntVec2, UnimodularMap};

pub fn poly(v: &[(i64, i64)]) -> FanoPolygon {
    FanoPolygon::from_i64(v).unwrap()
}

pub fn third() -> CyclicQuotientSingularity {
    CyclicQuotientSingularity::from_i64(3, 1, 2).unwrap()
}

pub fn all_table_polygons() -> Vec<FanoPolygon> {
    TableId::ALL.iter().flat_map(|&id| table_polygons(id)).collect()
}

pub fn ints(p: &FanoPolygon) -> Vec<(i64, i64)> {
    p.as_i64().expect("small coordinates")
}

/// Convex hull of `npts` random primitive points in `[-half, half]²`, retried
/// until the origin is strictly inside.
pub fn random_fano<R: Rng>(rng: &mut R, half: i64, npts: usize) -> FanoPolygon {
    loop {
        let pts: Vec<IntVec2> = (0..npts)
            .map(|_| loop {
                let (x, y) = (rng.gen_range(-half..=half), rng.gen_range(-half..=half));
                if x.gcd(&y) == 1 {
                    break IntVec2::new(x, y);
                }
            })
            .collect();
        if let Ok(p) = make_polygon(&pts) {
            return p;
        }
    }
}

/// A random Fano polygon of varying size.
pub fn random_polygon<R: Rng>(rng: &mut R) -> FanoPolygon {
    let half = rng.gen_range(2..=6);
    let npts = rng.gen_range(3..=7);
    random_fano(rng, half, npts)
}

/// A random Fano polygon with at least one edge admitting a mutation.
pub fn random_mutable<R: Rng>(rng: &mut R) -> FanoPolygon {
    loop {
        let p = random_polygon(rng);
        if edge_data(&p).iter().any(|e| e.admits_mutation()) {
            return p;
        }
    }
}

pub fn random_gl2<R: Rng>(rng: &mut R) -> UnimodularMap {
    let mut m = UnimodularMap::identity();
    for _ in 0..rng.gen_range(1..6) {
        let t = rng.gen_range(-3..=3);
        let step = match rng.gen_range(0..4) {
            0 => UnimodularMap::from_i64(1, t, 0, 1),
            1 => UnimodularMap::from_i64(1, 0, t, 1),
            2 => UnimodularMap::from_i64(0, 1, 1, 0),
            _ => UnimodularMap::from_i64(-1, 0, 0, 1),
        };
        m = m.compose(&step.unwrap());
    }
    m
}

prop_compose! {
    pub fn arb_fano()(pts in prop::collection::vec((-5i64..=5, -5i64..=5), 3..8)) -> Option<FanoPolygon> {
        let prim: Vec<IntVec2> = pts.iter().filter(|(x, y)| x.gcd(y) == 1).map(|&(x, y)| IntVec2::new(x, y)).collect();
        make_polygon(&prim).ok()
    }
}

/// Equivalence by direct search: try every way of sending one edge of `p` onto
/// an edge of `q` (either orientation) and test the resulting linear map.
pub fn equivalent_by_search(p: &FanoPolygon, q: &FanoPolygon) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let (a, b) = (&p.vertices()[0], &p.vertices()[1]);
    let det_ab = a.det(b);
    let mut target: Vec<IntVec2> = q.vertices().to_vec();
    target.sort();
    let n = q.len();
    for i in 0..n {
        for (c, d) in [(&q.vertices()[i], &q.vertices()[(i + 1) % n]), (&q.vertices()[(i + 1) % n], &q.vertices()[i])] {
            // M with M a = c, M b = d: M = [c d] [a b]^{-1}
            let num = [
                &c.x * &b.y - &d.x * &a.y,
                -&c.x * &b.x + &d.x * &a.x,
                &c.y * &b.y - &d.y * &a.y,
                -&c.y * &b.x + &d.y * &a.x,
            ];
            if num.iter().any(|x| !x.is_multiple_of(&det_ab)) {
                continue;
            }
            let m: Vec<BigInt> = num.iter().map(|x| x / &det_ab).collect();
            let det = &m[0] * &m[3] - &m[1] * &m[2];
            if det != BigInt::from(1) && det != BigInt::from(-1) {
                continue;
            }
            let mut img: Vec<IntVec2> = p
                .vertices()
                .iter()
                .map(|v| IntVec2::from_big(&m[0] * &v.x + &m[1] * &v.y, &m[2] * &v.x + &m[3] * &v.y))
                .collect();
            img.sort();
            if img == target {
                return true;
            }
        }
    }
    false
}

/// Lattice points of `i·P*` counted straight from the inequalities
/// `u·v ≥ -i` over the vertices `v` of `P`.
pub fn dual_points_by_inequalities(p: &FanoPolygon, i: i64) -> u64 {
    let vs: Vec<(i64, i64)> = ints(p);
    // P* lies in |u| ≤ max over edges of |w|/r; a generous box is enough
    let bound = edge_data(p)
        .iter()
        .map(|e| e.w.x.abs().max(e.w.y.abs()).to_i64().unwrap() + 1)
        .max()
        .unwrap()
        * i.max(1);
    let mut n = 0;
    for x in -bound..=bound {
        for y in -bound..=bound {
            if vs.iter().all(|&(a, b)| x * a + y * b >= -i) {
                n += 1;
            }
        }
    }
    n
}

/// Boundary lattice points, summed edge by edge.
pub fn boundary_points(p: &FanoPolygon) -> i64 {
    let vs = ints(p);
    let n = vs.len();
    (0..n)
        .map(|i| {
            let (a, b) = (vs[i], vs[(i + 1) % n]);
            (b.0 - a.0).gcd(&(b.1 - a.1))
        })
        .sum()
}
