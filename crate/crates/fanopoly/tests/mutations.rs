mod common;

use std::collections::BTreeSet;

use common::*;
use fanopoly::classification::{table_polygons, TableId};
use fanopoly::lattice::{canonical, equivalent};
use fanopoly::mutations::{
    elementary_divisors, is_minimal_by, mutate_n_side, mutate_raw, mutation_spec, mutation_spec_for_normal, mutations_of, orbit_of,
    MinimalityCriterion,
};
use fanopoly::{
    dual_polygon, edge_data, hilbert_window, is_minimal, make_polygon, minimize, mutate, mutate_dual, mutation_exists,
    neighbors, normalized_dual_volume, orbit, singularity_content, t_sublattice_invariant, Error, FanoPolygon, IntVec2,
    OrbitBudget,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Lattice points of `p`, by scanning its bounding box.
fn lattice_points(p: &FanoPolygon) -> Vec<IntVec2> {
    let vs = ints(p);
    let (x0, x1) = (vs.iter().map(|v| v.0).min().unwrap(), vs.iter().map(|v| v.0).max().unwrap());
    let (y0, y1) = (vs.iter().map(|v| v.1).min().unwrap(), vs.iter().map(|v| v.1).max().unwrap());
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let v = IntVec2::new(x, y);
            if p.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Mutation straight from the slice description: at height `h ≥ 0` each
/// slice grows by `h` copies of the factor, at `h < 0` it keeps the points `x`
/// with `x + |h| v_e` still in `p`.
fn mutate_by_slices(p: &FanoPolygon, w: &IntVec2, v_e: &IntVec2) -> FanoPolygon {
    let mut pts = Vec::new();
    for x in lattice_points(p) {
        let h = w.dot(&x);
        if h >= BigInt::from(0) {
            pts.push(&x + &v_e.scale(&h));
            pts.push(x);
        } else if p.contains(&(&x - &v_e.scale(&h))) {
            pts.push(x);
        }
    }
    make_polygon(&pts).unwrap()
}

fn random_admissible<R: Rng>(rng: &mut R) -> (FanoPolygon, usize) {
    let p = random_mutable(rng);
    let admissible: Vec<usize> = (0..p.len()).filter(|&i| mutation_exists(&p, i)).collect();
    let i = admissible[rng.gen_range(0..admissible.len())];
    (p, i)
}

fn minimal_empty_set() -> BTreeSet<FanoPolygon> {
    [TableId::Table1, TableId::Table2].iter().flat_map(|&id| table_polygons(id)).map(|p| canonical(&p)).collect()
}

#[test]
fn worked_example() {
    let p = poly(&[(1, 1), (0, 1), (-1, -2)]);
    let spec = mutation_spec_for_normal(&p, &IntVec2::new(0, -1)).unwrap();
    let q = mutate_raw(&p, &spec).unwrap();
    assert_eq!(canonical(&q), canonical(&poly(&[(0, 1), (-1, -2), (1, -2)])));
    assert!(equivalent(&mutate_n_side(&p, &spec).unwrap(), &q));
    assert_eq!(canonical(&mutate_by_slices(&p, &spec.w, &spec.v_e)), canonical(&q));
}

#[test]
fn existence_needs_width_at_least_height() {
    // P(1,1,3): the edge at height 3 has width 1 and admits no mutation
    let p = poly(&[(1, 0), (0, 1), (-1, -3)]);
    for e in edge_data(&p) {
        assert_eq!(mutation_exists(&p, e.index), e.k >= e.r);
        if e.k < e.r {
            assert!(matches!(mutate(&p, e.index), Err(Error::NoMutation(_))));
        }
    }
    assert!(mutation_spec(&p, 17).is_err());
    assert!(mutation_spec_for_normal(&p, &IntVec2::new(5, 7)).is_err());
}

#[test]
fn mutation_matches_slice_description() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let (p, i) = random_admissible(&mut rng);
        let spec = mutation_spec(&p, i).unwrap();
        let oracle = canonical(&mutate_by_slices(&p, &spec.w, &spec.v_e));
        assert_eq!(canonical(&mutate_raw(&p, &spec).unwrap()), oracle, "{p} edge {i}");
        assert_eq!(canonical(&mutate_n_side(&p, &spec).unwrap()), oracle, "{p} edge {i}");
    }
}

#[test]
fn dual_side_commutes_with_n_side() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        let (p, i) = random_admissible(&mut rng);
        let spec = mutation_spec(&p, i).unwrap();
        let n_side = mutate_n_side(&p, &spec).unwrap();
        let lhs = dual_polygon(&n_side);
        let rhs = mutate_dual(&dual_polygon(&p), &spec.w, &spec.v_e).unwrap();
        assert_eq!(lhs.normalized(), rhs.normalized(), "{p} edge {i}");
        assert_eq!(canonical(&n_side), mutate(&p, i).unwrap());
    }
}

#[test]
fn mutation_is_undone_by_its_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..300 {
        let (p, i) = random_admissible(&mut rng);
        let spec = mutation_spec(&p, i).unwrap();
        let q = mutate_raw(&p, &spec).unwrap();
        let back = mutate_raw(&q, &spec.inverse_on(&q)).unwrap();
        assert!(equivalent(&back, &p), "{p} edge {i}: came back as {back}");
        // the opposite factor direction gives an equivalent polygon
        assert!(equivalent(&mutate_raw(&p, &spec.flipped()).unwrap(), &q));
    }
}

#[test]
fn mutation_preserves_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..1000 {
        let (p, i) = random_admissible(&mut rng);
        let q = mutate(&p, i).unwrap();
        let (a, b) = (singularity_content(&p), singularity_content(&q));
        assert!(a.eq_multiset(&b), "{p} -> {q}");
        assert_eq!(normalized_dual_volume(&p), normalized_dual_volume(&q));
        assert_eq!(hilbert_window(&p, 8).unwrap(), hilbert_window(&q, 8).unwrap());
        assert_eq!(t_sublattice_invariant(&p), t_sublattice_invariant(&q));
    }
}

#[test]
fn sublattice_examples() {
    let divisors = |v: &[(i64, i64)]| {
        let s = t_sublattice_invariant(&poly(v));
        (s.d1.to_i64().unwrap(), s.d2.to_i64().unwrap())
    };
    assert_eq!(divisors(&[(1, 0), (0, 1), (-1, -1), (0, -1)]), (1, 1));
    assert_eq!(divisors(&[(1, 0), (0, 1), (-1, 0), (0, -1)]), (1, 2));
    assert_eq!(divisors(&[(6, 1), (0, 1), (-3, -1)]), (1, 0));
    let none = elementary_divisors(&[]);
    assert_eq!((none.rank(), none.index()), (0, None));
}

#[test]
fn height_criterion_matches_boundary_descent() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..500 {
        let p = random_polygon(&mut rng);
        let here = boundary_points(&p);
        let direct = edge_data(&p)
            .iter()
            .filter(|e| e.admits_mutation())
            .all(|e| boundary_points(&mutate_by_slices(&p, &e.w, &IntVec2::from_big(-&e.w.y, e.w.x.clone()))) >= here);
        assert_eq!(is_minimal(&p), direct, "{p}");
    }
}

#[test]
fn minimality_criteria_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..500 {
        let p = random_polygon(&mut rng);
        let verdict = is_minimal(&p);
        for c in MinimalityCriterion::ALL {
            assert_eq!(is_minimal_by(&p, c), verdict, "{p} under {c:?}");
        }
    }
}

#[test]
fn empty_basket_triangles_vertex_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    let mut pool: Vec<FanoPolygon> = Vec::new();
    for t in table_polygons(TableId::Table1) {
        let g = orbit(&t, &OrbitBudget { max_nodes: 200, max_boundary: Some(BigInt::from(40)), ..OrbitBudget::with_depth(4) })
            .unwrap();
        pool.extend(g.nodes.into_iter().filter(|q| q.len() == 3));
    }
    assert!(pool.len() > 30);
    let mut checked = 0;
    let mut minimal_seen = 0;
    while checked < 500 {
        let t = pool[rng.gen_range(0..pool.len())].transform(&random_gl2(&mut rng));
        let v = t.vertices();
        let sum = &(&v[0] + &v[1]) + &v[2];
        assert_eq!(is_minimal(&t), t.contains(&sum), "{t}");
        minimal_seen += usize::from(is_minimal(&t));
        checked += 1;
    }
    assert!(minimal_seen > 0 && minimal_seen < checked);
}

#[test]
fn minimize_lands_in_the_minimal_table() {
    let minimals = minimal_empty_set();
    assert_eq!(minimals.len(), 35);
    for p in &minimals {
        assert!(is_minimal(p));
        assert_eq!(&minimize(p), p);
    }
    let starts: Vec<FanoPolygon> = minimals.iter().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(28);
    for _ in 0..1000 {
        let mut p = starts[rng.gen_range(0..starts.len())].clone();
        for _ in 0..rng.gen_range(1..=4) {
            let next = mutations_of(&p);
            if next.is_empty() {
                break;
            }
            p = next[rng.gen_range(0..next.len())].clone();
        }
        let m = minimize(&p);
        assert!(minimals.contains(&m), "{p} minimized to {m}");
        assert!(singularity_content(&m).eq_multiset(&singularity_content(&p)));
    }
}

#[test]
fn neighbors_are_deduplicated() {
    // all four edges of the square give the same neighbor
    let sq = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
    let nb = neighbors(&sq);
    assert_eq!(nb.len(), 1);
    assert_eq!(nb[0].normals.len(), 4);
}

#[test]
fn orbit_is_independent_of_jobs() {
    let p = poly(&[(1, 1), (0, 1), (-1, -2)]);
    let budget = OrbitBudget { max_nodes: 60, max_boundary: Some(BigInt::from(60)), max_depth: Some(4), jobs: 1 };
    let a = orbit(&p, &budget).unwrap();
    let b = orbit(&p, &OrbitBudget { jobs: 4, ..budget.clone() }).unwrap();
    assert_eq!(a, b);
    for (i, j, w) in &a.edges {
        assert!(i < j);
        assert!(neighbors(&a.nodes[*i]).iter().any(|nb| nb.polygon == a.nodes[*j] && nb.normals.contains(w)));
    }
    assert_eq!(a.depth.iter().filter(|&&d| d == 0).count(), 1);
}

#[test]
fn orbit_rejects_mixed_starts() {
    let a = poly(&[(1, 0), (0, 1), (-1, -1)]);
    let b = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
    assert!(matches!(orbit_of(&[a, b], &OrbitBudget::with_depth(1)), Err(Error::CrossCheck(_))));
}
