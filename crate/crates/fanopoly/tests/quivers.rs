mod common;

use common::*;
use fanopoly::quivers::{find_isomorphism, mutate_quiver_by_arrows, quiver_orbit, separate_quivers, QuiverSeparation};
use fanopoly::{all_even, mutate_quiver, quiver_commutes_check, quiver_of, quivers_isomorphic, Error, Quiver};
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every relabelling; only for small quivers.
fn isomorphic_by_permutations(a: &Quiver, b: &Quiver) -> bool {
    let n = a.n();
    n == b.n()
        && permutations(n).iter().any(|perm| (0..n).all(|i| (0..n).all(|j| a.b[i][j] == b.b[perm[i]][perm[j]])))
}

fn arb_quiver() -> impl Strategy<Value = Quiver> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |upper| {
            let mut b = vec![vec![0; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let x = it.next().unwrap();
                    b[i][j] = x;
                    b[j][i] = -x;
                }
            }
            Quiver::new(b).unwrap()
        })
    })
}

#[test]
fn smooth_quivers() {
    let rj = quiver_of(&poly(&[(1, 0), (0, 1), (-1, -1), (0, -1)])).unwrap();
    let expected = Quiver::new(vec![vec![0, 1, 1, -2], vec![-1, 0, 2, -1], vec![-1, -2, 0, 3], vec![2, 1, -3, 0]]).unwrap();
    assert!(isomorphic_by_permutations(&rj, &expected));
    assert!(quivers_isomorphic(&rj, &expected).unwrap());

    let rk = quiver_of(&poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)])).unwrap();
    assert!(all_even(&rk));
    assert!(!all_even(&rj));
    assert!(rk.b.iter().flatten().all(|x| [0, 2, -2].contains(x)));
    assert!(!quivers_isomorphic(&rj, &rk).unwrap());

    let p2 = quiver_of(&poly(&[(1, 0), (0, 1), (-1, -1)])).unwrap();
    assert_eq!(p2.n(), 3);
    assert!((0..3).all(|i| (0..3).all(|j| i == j || p2.b[i][j].abs() == 3)));
}

#[test]
fn polygon_without_t_cones_has_no_quiver() {
    // every edge is shorter than its height
    let p = poly(&[(-4, -3), (3, 1), (-3, 2)]);
    assert_eq!(fanopoly::singularity_content(&p).n, 0.into());
    assert!(matches!(quiver_of(&p), Err(Error::NoTCones)));
}

#[test]
fn new_rejects_bad_matrices() {
    assert!(Quiver::new(vec![vec![0, 1], vec![1, 0]]).is_err());
    assert!(Quiver::new(vec![vec![0, 1], vec![-1]]).is_err());
    assert!(mutate_quiver(&Quiver::new(vec![vec![0]]).unwrap(), 3).is_err());
}

#[test]
fn a2_quiver_mutates_to_itself() {
    let a2 = Quiver::new(vec![vec![0, 1], vec![-1, 0]]).unwrap();
    for v in 0..2 {
        let m = mutate_quiver(&a2, v).unwrap();
        assert!(isomorphic_by_permutations(&m, &a2));
    }
    let (orbit, truncated) = quiver_orbit(&a2, 10);
    assert_eq!((orbit.len(), truncated), (1, false));
}

#[test]
fn polygon_mutation_commutes_with_quiver_mutation() {
    for p in all_table_polygons() {
        let Ok(q) = quiver_of(&p) else { continue };
        for v in 0..q.n() {
            assert!(quiver_commutes_check(&p, v).unwrap(), "{p} at vertex {v}");
            if q.n() <= 7 {
                let edge = q.labels[v];
                let spec = fanopoly::mutations::mutation_spec(&p, edge).unwrap();
                let after = quiver_of(&fanopoly::mutations::mutate_raw(&p, &spec).unwrap()).unwrap();
                assert!(isomorphic_by_permutations(&after, &mutate_quiver(&q, v).unwrap()), "{p} at vertex {v}");
            }
        }
    }
}

#[test]
fn separation_of_small_classes() {
    let a2 = Quiver::new(vec![vec![0, 1], vec![-1, 0]]).unwrap();
    let kronecker = Quiver::new(vec![vec![0, 2], vec![-2, 0]]).unwrap();
    assert_eq!(separate_quivers(&a2, &kronecker, 50), QuiverSeparation::Distinct);
    let a3 = Quiver::new(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
    let a3_other = mutate_quiver(&mutate_quiver(&a3, 1).unwrap(), 0).unwrap();
    assert_eq!(separate_quivers(&a3, &a3_other, 50), QuiverSeparation::Equivalent);
    // A3 has four quivers up to isomorphism
    assert_eq!(quiver_orbit(&a3, 50).0.len(), 4);
}

proptest! {
    #[test]
    fn matrix_and_arrow_mutation_agree(q in arb_quiver(), v in 0usize..5) {
        let v = v % q.n();
        prop_assert_eq!(mutate_quiver(&q, v).unwrap(), mutate_quiver_by_arrows(&q, v).unwrap());
    }

    #[test]
    fn mutation_is_an_involution(q in arb_quiver(), v in 0usize..5) {
        let v = v % q.n();
        prop_assert_eq!(mutate_quiver(&mutate_quiver(&q, v).unwrap(), v).unwrap(), q);
    }

    #[test]
    fn isomorphism_search_agrees_with_permutations(a in arb_quiver(), b in arb_quiver(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let shuffled = Quiver::new((0..n).map(|i| (0..n).map(|j| a.b[perm[i]][perm[j]]).collect()).collect()).unwrap();
        prop_assert!(find_isomorphism(&a, &shuffled).is_some());
        prop_assert_eq!(find_isomorphism(&a, &b).is_some(), isomorphic_by_permutations(&a, &b));
    }
}
