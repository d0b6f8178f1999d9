use std::collections::BTreeSet;
use std::sync::Mutex;

use num_integer::Integer;

use super::bounds::{basket_bounds, candidate_triples, residual_candidates};
use super::search::{is_primitive, ChainProblem, P2};
use crate::error::{Error, Result};
use crate::lattice::{canonical, FanoPolygon};
use crate::mutations::is_minimal;
use crate::singularities::{singularity_content, CyclicQuotientSingularity};

/// Largest local index supported by [`enumerate_fano_max_index`].
pub const MAX_SUPPORTED_INDEX: i64 = 3;

/// Search box half-width used for local index `r`. Every polygon with all
/// local indices at most `r`, placed with a highest edge on top, has its
/// vertices within this box; `box_is_stable` in the tests checks that a
/// larger box finds nothing new.
pub(crate) fn default_box(r: i64) -> i64 {
    match r {
        1 => 4,
        2 => 10,
        _ => 8 * r,
    }
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn collect(chains: &[Vec<P2>]) -> BTreeSet<FanoPolygon> {
    chains
        .iter()
        .map(|vs| canonical(&FanoPolygon::from_i64_ccw(vs).expect("chain search yields Fano polygons")))
        .collect()
}

/// Polygons whose every edge has height at most `r`, with a highest edge
/// `(a+k, h) → (a, h)` on top and all other vertices in `|x| ≤ half`,
/// `-half ≤ y < h`.
pub(crate) fn max_index_in_box(r: i64, half: i64) -> BTreeSet<FanoPolygon> {
    let mut tops = Vec::new();
    for h in 1..=r {
        for a in 0..h {
            if a.gcd(&h) != 1 {
                continue;
            }
            for right in a + 1..=half {
                if right.gcd(&h) == 1 {
                    tops.push((h, a, right));
                }
            }
        }
    }
    let next = Mutex::new(0usize);
    let found = Mutex::new(BTreeSet::new());
    std::thread::scope(|scope| {
        for _ in 0..threads().min(tops.len()) {
            scope.spawn(|| loop {
                let i = {
                    let mut n = next.lock().expect("lock");
                    *n += 1;
                    *n - 1
                };
                let Some(&(h, a, right)) = tops.get(i) else { break };
                let prob = ChainProblem {
                    start: (a, h),
                    d_in: (-1, 0),
                    end: (right, h),
                    d_out: (-1, 0),
                    xmin: -half,
                    xmax: half,
                    ymin: -half,
                    ymax: h - 1,
                    max_height: h,
                };
                let mut chains = Vec::new();
                prob.solve(&mut |c| {
                    let mut vs = vec![(right, h), (a, h)];
                    vs.extend_from_slice(c);
                    chains.push(vs);
                });
                let local = collect(&chains);
                found.lock().expect("lock").extend(local);
            });
        }
    });
    found.into_inner().expect("lock")
}

/// Every Fano polygon whose edges all have local index at most `r`, in
/// canonical form and sorted.
pub fn enumerate_fano_max_index(r: i64) -> Result<Vec<FanoPolygon>> {
    if r < 1 {
        return Err(Error::BadInput(format!("local index bound must be positive, got {r}")));
    }
    if r > MAX_SUPPORTED_INDEX {
        return Err(Error::Unsupported(format!("local index bound {r} exceeds {MAX_SUPPORTED_INDEX}")));
    }
    Ok(max_index_in_box(r, default_box(r)).into_iter().collect())
}

/// Triangles whose top edge of height `r` has two primitive T-cones.
fn k2_triangles(r_lo: i64, r_hi: i64) -> Vec<Vec<P2>> {
    let mut out = Vec::new();
    for r in r_lo..=r_hi {
        for a in 1..r {
            if a.gcd(&r) == 1 {
                out.push(vec![(-a + 2 * r, r), (-a, r), (-a, -r)]);
            }
        }
    }
    out
}

/// Parallelograms with two opposite edges of height `r`, one T-cone each.
fn rectangles(r_lo: i64, r_hi: i64) -> Vec<Vec<P2>> {
    let mut out = Vec::new();
    for r in r_lo..=r_hi {
        for a in 1..r {
            if a.gcd(&r) == 1 {
                out.push(vec![(-a + r, r), (-a, r), (-a, -r), (-a + r, -r)]);
            }
        }
    }
    out
}

/// Polygons with top edge `(b, r) → (b − r, r)` and a vertical right edge
/// from `(b, bottom)` up to `(b, r)`; the remaining vertices lie in
/// `[b − r, b) × [bottom, r)` and every edge has height at most `r`.
fn vertical_edge(r: i64, b: i64, bottom: i64) -> Vec<Vec<P2>> {
    if !is_primitive((b, bottom)) || !is_primitive((b, r)) {
        return Vec::new();
    }
    let prob = ChainProblem {
        start: (b - r, r),
        d_in: (-1, 0),
        end: (b, bottom),
        d_out: (0, 1),
        xmin: b - r,
        xmax: b - 1,
        ymin: bottom,
        ymax: r - 1,
        max_height: r,
    };
    let mut out = Vec::new();
    prob.solve(&mut |c| {
        let mut vs = vec![(b, r), (b - r, r)];
        vs.extend_from_slice(c);
        vs.push((b, bottom));
        out.push(vs);
    });
    out
}

/// Candidates with a highest edge of height above `m_B`, from the
/// casework on the shape of that edge and its neighbours.
fn high_index_candidates(basket: &[CyclicQuotientSingularity]) -> Result<Vec<Vec<P2>>> {
    let bb = basket_bounds(basket)?;
    let m = bb.m;
    let mut out = Vec::new();
    let k2_hi = if basket.is_empty() { 6 } else { (m + 2).max(2 * m) };
    out.extend(k2_triangles(m + 1, k2_hi));
    out.extend(rectangles(m + 1, (2 * m).max(2)));
    if m < 2 {
        out.extend(vertical_edge(2, 1, 2 - 4));
    }
    for t in candidate_triples(basket)? {
        out.extend(vertical_edge(t.r, t.b, t.r - t.j * t.b));
    }
    for c in residual_candidates(basket)? {
        out.extend(vertical_edge(c.r, c.b, c.r - c.j * c.b - c.l));
    }
    Ok(out)
}

fn keep<F>(cands: impl IntoIterator<Item = FanoPolygon>, accept: &F) -> BTreeSet<FanoPolygon>
where
    F: Fn(&[CyclicQuotientSingularity]) -> bool,
{
    cands
        .into_iter()
        .filter(|p| is_minimal(p) && accept(&singularity_content(p).basket))
        .map(|p| canonical(&p))
        .collect()
}

fn enumerate_with<F>(bounds_basket: &[CyclicQuotientSingularity], accept: F) -> Result<BTreeSet<FanoPolygon>>
where
    F: Fn(&[CyclicQuotientSingularity]) -> bool,
{
    let bb = basket_bounds(bounds_basket)?;
    if bb.m > MAX_SUPPORTED_INDEX {
        return Err(Error::Unsupported(format!("basket index {} exceeds {MAX_SUPPORTED_INDEX}", bb.m)));
    }
    let mut out = keep(enumerate_fano_max_index(bb.m)?, &accept);
    let high = high_index_candidates(bounds_basket)?
        .into_iter()
        .filter_map(|vs| FanoPolygon::from_i64(&vs).ok());
    out.extend(keep(high, &accept));
    Ok(out)
}

fn same_multiset(a: &[CyclicQuotientSingularity], b: &[CyclicQuotientSingularity]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort();
    y.sort();
    x == y
}

/// The minimal Fano polygons with only T-singularities, in canonical form.
pub fn enumerate_minimal_empty() -> Vec<FanoPolygon> {
    enumerate_with(&[], |b| b.is_empty()).expect("empty basket is supported").into_iter().collect()
}

/// The minimal Fano polygons whose residual basket is exactly `basket`.
pub fn enumerate_minimal_with_basket(basket: &[CyclicQuotientSingularity]) -> Result<Vec<FanoPolygon>> {
    let target = basket.to_vec();
    Ok(enumerate_with(basket, |b| same_multiset(b, &target))?.into_iter().collect())
}

/// The minimal Fano polygons whose basket consists of `sigma` one or more times.
pub fn enumerate_minimal_with_repeated(sigma: &CyclicQuotientSingularity) -> Result<Vec<FanoPolygon>> {
    let s = sigma.clone();
    Ok(enumerate_with(std::slice::from_ref(sigma), |b| !b.is_empty() && b.iter().all(|x| *x == s))?
        .into_iter()
        .collect())
}

/// Largest local index over the edges of `p`.
pub fn max_local_index(p: &FanoPolygon) -> num_bigint::BigInt {
    crate::lattice::edge_data(p).into_iter().map(|e| e.r).max().expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_is_stable() {
        for r in 1..=MAX_SUPPORTED_INDEX {
            let half = default_box(r);
            assert_eq!(max_index_in_box(r, half), max_index_in_box(r, 2 * half), "r = {r}");
        }
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(enumerate_fano_max_index(0), Err(Error::BadInput(_))));
        assert!(matches!(enumerate_fano_max_index(MAX_SUPPORTED_INDEX + 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn local_index_of_examples() {
        let p = FanoPolygon::from_i64(&[(1, 0), (0, 1), (-1, -3)]).unwrap();
        assert_eq!(max_local_index(&p), 3.into());
        let sq = FanoPolygon::from_i64(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]).unwrap();
        assert_eq!(max_local_index(&sq), 1.into());
    }

    #[test]
    fn repeated_basket_needs_an_entry() {
        let t = CyclicQuotientSingularity::from_i64(2, 2, 1).unwrap();
        assert!(enumerate_minimal_with_repeated(&t).is_err());
    }
}
