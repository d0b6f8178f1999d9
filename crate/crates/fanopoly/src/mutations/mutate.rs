use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    canonical, edge_data, make_polygon, rat_int, FanoPolygon, IntVec2, Rat, RatVec2, RationalPolygon,
};

/// Data of a mutation: the grading `w`, the factor direction `v_e` with
/// `w(v_e) = 0`, and the range of heights `w` takes on the polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationSpec {
    pub w: IntVec2,
    pub v_e: IntVec2,
    pub h_min: BigInt,
    pub h_max: BigInt,
}

impl MutationSpec {
    /// The mutation undoing this one: grading `-w`, same factor.
    pub fn inverse_on(&self, mutated: &FanoPolygon) -> MutationSpec {
        let w = -&self.w;
        let (h_min, h_max) = height_range(mutated, &w);
        MutationSpec { w, v_e: self.v_e.clone(), h_min, h_max }
    }

    /// Same grading, opposite factor direction.
    pub fn flipped(&self) -> MutationSpec {
        MutationSpec { v_e: -&self.v_e, ..self.clone() }
    }
}

fn height_range(p: &FanoPolygon, w: &IntVec2) -> (BigInt, BigInt) {
    let hs: Vec<BigInt> = p.vertices().iter().map(|v| w.dot(v)).collect();
    (hs.iter().min().cloned().expect("nonempty"), hs.iter().max().cloned().expect("nonempty"))
}

/// True iff the edge's width is at least its height.
pub fn mutation_exists(p: &FanoPolygon, edge_index: usize) -> bool {
    edge_data(p).get(edge_index).is_some_and(|e| e.admits_mutation())
}

/// Mutation data for the edge `edge_index` (grading by its inner normal).
pub fn mutation_spec(p: &FanoPolygon, edge_index: usize) -> Result<MutationSpec> {
    let edges = edge_data(p);
    let e = edges.get(edge_index).ok_or(Error::NoMutation(edge_index))?;
    if !e.admits_mutation() {
        return Err(Error::NoMutation(edge_index));
    }
    let v_e = IntVec2 { x: -&e.w.y, y: e.w.x.clone() };
    let (h_min, h_max) = height_range(p, &e.w);
    Ok(MutationSpec { w: e.w.clone(), v_e, h_min, h_max })
}

/// Mutation data for the edge whose primitive inner normal is `w`.
pub fn mutation_spec_for_normal(p: &FanoPolygon, w: &IntVec2) -> Result<MutationSpec> {
    let edges = edge_data(p);
    let idx = edges
        .iter()
        .position(|e| e.w == *w)
        .ok_or_else(|| Error::BadInput(format!("{w} is not the inner normal of an edge of {p}")))?;
    mutation_spec(p, idx)
}

fn check_spec(p: &FanoPolygon, spec: &MutationSpec) -> Result<()> {
    if !spec.w.is_primitive() || !spec.v_e.is_primitive() || !spec.w.dot(&spec.v_e).is_zero() {
        return Err(Error::BadInput(format!("bad mutation data w={}, v_e={}", spec.w, spec.v_e)));
    }
    // The bottom slice must be an edge long enough to absorb |h_min| copies of the factor.
    let bottom: Vec<&IntVec2> = p.vertices().iter().filter(|v| spec.w.dot(v) == spec.h_min).collect();
    let width = if bottom.len() == 2 {
        let d = bottom[1] - bottom[0];
        // d is a multiple of v_e; its length in units of v_e
        d.content()
    } else {
        BigInt::zero()
    };
    if width < -&spec.h_min {
        return Err(Error::BadInput(format!("no mutation with w={} on {p}", spec.w)));
    }
    Ok(())
}

/// Mutation computed on the dual side: dualize, apply the piecewise shear, dualize back.
/// Coordinates are those of `p` (not canonicalized).
pub fn mutate_raw(p: &FanoPolygon, spec: &MutationSpec) -> Result<FanoPolygon> {
    check_spec(p, spec)?;
    let d = crate::lattice::dual_polygon(p);
    let image = mutate_dual(&d, &spec.w, &spec.v_e)?;
    image.dual().to_fano().map_err(|e| Error::CrossCheck(format!("dual-side mutation of {p} is not integral: {e}")))
}

/// Mutation computed in `N`: every height slice `[a_h, b_h]` (measured along
/// `v_e`) becomes `[a_h, b_h + h]`. The left chain of the polygon is kept and
/// the right chain is sheared by `v ↦ v + w(v)·v_e`.
pub fn mutate_n_side(p: &FanoPolygon, spec: &MutationSpec) -> Result<FanoPolygon> {
    check_spec(p, spec)?;
    let vs = p.vertices();
    let n = vs.len();
    let mut pts = Vec::with_capacity(2 * n);
    let back = -&spec.v_e;
    for i in 0..n {
        let v = &vs[i];
        let prev = &vs[(i + n - 1) % n];
        let next = &vs[(i + 1) % n];
        let h = spec.w.dot(v);
        if !points_inward(prev, v, next, &back) {
            pts.push(v.clone());
        }
        if !points_inward(prev, v, next, &spec.v_e) {
            pts.push(v + &spec.v_e.scale(&h));
        }
    }
    make_polygon(&pts)
}

/// True iff `v + εd` lies in the polygon for small `ε > 0`, at the vertex `v`.
fn points_inward(prev: &IntVec2, v: &IntVec2, next: &IntVec2, d: &IntVec2) -> bool {
    !(next - v).det(d).is_negative() && !(v - prev).det(d).is_negative()
}

/// The piecewise-linear map `u ↦ u` if `u(v_e) ≥ 0`, else `u - u(v_e)·w`.
pub fn phi(u: &RatVec2, w: &IntVec2, v_e: &IntVec2) -> RatVec2 {
    let s = u.dot_int(v_e);
    if !s.is_negative() {
        u.clone()
    } else {
        RatVec2 { x: &u.x - &s * rat_int(&w.x), y: &u.y - &s * rat_int(&w.y) }
    }
}

/// Image of a dual polygon under the piecewise shear attached to `(w, v_e)`.
pub fn mutate_dual(d: &RationalPolygon, w: &IntVec2, v_e: &IntVec2) -> Result<RationalPolygon> {
    if !w.is_primitive() || !w.dot(v_e).is_zero() {
        return Err(Error::BadInput(format!("bad mutation data w={w}, v_e={v_e}")));
    }
    let vs = d.vertices();
    let n = vs.len();
    let mut pts = Vec::with_capacity(n + 2);
    for i in 0..n {
        let (a, b) = (&vs[i], &vs[(i + 1) % n]);
        pts.push(phi(a, w, v_e));
        let (sa, sb) = (a.dot_int(v_e), b.dot_int(v_e));
        if (sa.is_positive() && sb.is_negative()) || (sa.is_negative() && sb.is_positive()) {
            // crossing of the wall u(v_e) = 0, fixed by the map
            let t: Rat = &sa / (&sa - &sb);
            pts.push(RatVec2 { x: &a.x + &t * (&b.x - &a.x), y: &a.y + &t * (&b.y - &a.y) });
        }
    }
    Ok(RationalPolygon::from_points(&pts)?.normalized())
}

/// Mutation at edge `edge_index`, returned in canonical form.
pub fn mutate(p: &FanoPolygon, edge_index: usize) -> Result<FanoPolygon> {
    let spec = mutation_spec(p, edge_index)?;
    Ok(canonical(&mutate_raw(p, &spec)?))
}
