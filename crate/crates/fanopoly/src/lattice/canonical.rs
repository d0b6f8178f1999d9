use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::polygon::FanoPolygon;
use super::vec::{ext_gcd, IntVec2, UnimodularMap};

/// The unique unimodular map sending `v0` to `(1,0)` and `v1` to `(s,t)` with
/// `t > 0` and `0 <= s < t`. Requires `v0` primitive and `v0, v1` independent.
pub(crate) fn hermite_map(v0: &IntVec2, v1: &IntVec2) -> UnimodularMap {
    let (_, p, q) = ext_gcd(&v0.x, &v0.y);
    // Rows (p, q) and (-y, x): sends v0 to (1, 0), determinant 1.
    let mut m = UnimodularMap { a: p, b: q, c: -&v0.y, d: v0.x.clone() };
    let img = m.apply(v1);
    if img.y.is_negative() {
        m.c = -m.c;
        m.d = -m.d;
    }
    let img = m.apply(v1);
    let t = img.y.clone();
    // Shear the first row by a multiple of the second to reduce s mod t.
    let shift = img.x.div_floor(&t);
    if !shift.is_zero() {
        m.a -= &shift * &m.c;
        m.b -= &shift * &m.d;
    }
    m
}

fn candidate(seq: &[IntVec2]) -> (Vec<IntVec2>, UnimodularMap) {
    let g = hermite_map(&seq[0], &seq[1]);
    (seq.iter().map(|v| g.apply(v)).collect(), g)
}

/// Canonical representative of the GL₂(ℤ)-orbit of `p`, with a map `g` such that `g(p)` is it.
///
/// Every cyclic vertex sequence (both orientations, every start) is put into
/// Hermite normal form; the lexicographically smallest result wins.
pub fn canonical_form(p: &FanoPolygon) -> (FanoPolygon, UnimodularMap) {
    let n = p.len();
    let vs = p.vertices();
    let mut best: Option<(Vec<IntVec2>, UnimodularMap)> = None;
    for reversed in [false, true] {
        for start in 0..n {
            let seq: Vec<IntVec2> = (0..n)
                .map(|i| if reversed { vs[(start + n - i) % n].clone() } else { vs[(start + i) % n].clone() })
                .collect();
            let cand = candidate(&seq);
            let better = match &best {
                None => true,
                Some((b, _)) => cand.0 < *b,
            };
            if better {
                best = Some(cand);
            }
        }
    }
    let (seq, g) = best.expect("polygon has vertices");
    // The Hermite form sends the first two vertices to a positively oriented
    // pair, so the sequence is counter-clockwise.
    debug_assert!(seq[0].det(&seq[1]).is_positive());
    (FanoPolygon::from_ccw(seq).expect("canonical image of a Fano polygon is Fano"), g)
}

/// Canonical form only.
pub fn canonical(p: &FanoPolygon) -> FanoPolygon {
    canonical_form(p).0
}

/// True iff the two polygons are GL₂(ℤ)-equivalent.
pub fn equivalent(p: &FanoPolygon, q: &FanoPolygon) -> bool {
    p.len() == q.len() && canonical(p) == canonical(q)
}
