use num_bigint::BigInt;
use num_traits::Zero;

use super::mutate::{mutate_raw, mutation_spec};
use crate::lattice::{canonical, counts, edge_data, FanoPolygon};

/// Minimality by heights: every edge admitting a mutation has height at most
/// the largest value its normal takes on the polygon.
pub fn is_minimal(p: &FanoPolygon) -> bool {
    edge_data(p).iter().filter(|e| e.admits_mutation()).all(|e| {
        let h_max = p.vertices().iter().map(|v| e.w.dot(v)).max().expect("nonempty");
        e.r <= h_max
    })
}

/// All one-step mutations of `p` (one per admissible edge), in `p`'s coordinates.
pub fn mutations_of(p: &FanoPolygon) -> Vec<FanoPolygon> {
    (0..p.len())
        .filter_map(|i| mutation_spec(p, i).ok())
        .map(|s| mutate_raw(p, &s).expect("admissible mutation of a Fano polygon is Fano"))
        .collect()
}

/// Sum of the heights of the primitive T-cones.
pub fn t_cone_height_sum(p: &FanoPolygon) -> BigInt {
    edge_data(p).iter().fold(BigInt::zero(), |acc, e| acc + e.t_cones() * &e.r)
}

/// Which quantity a minimality test compares across single mutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalityCriterion {
    Boundary,
    Interior,
    Volume,
    HeightSum,
}

impl MinimalityCriterion {
    pub const ALL: [MinimalityCriterion; 4] = [Self::Boundary, Self::Interior, Self::Volume, Self::HeightSum];

    fn measure(self, p: &FanoPolygon) -> BigInt {
        let (b, i, v) = counts(p);
        match self {
            Self::Boundary => b,
            Self::Interior => i,
            Self::Volume => v,
            Self::HeightSum => t_cone_height_sum(p),
        }
    }
}

/// True iff no single mutation strictly decreases the chosen quantity.
pub fn is_minimal_by(p: &FanoPolygon, criterion: MinimalityCriterion) -> bool {
    let here = criterion.measure(p);
    mutations_of(p).iter().all(|q| criterion.measure(q) >= here)
}

/// A minimal polygon mutation-equivalent to `p`, by greedy descent of the
/// boundary point count; ties go to the smallest canonical form. Canonical.
pub fn minimize(p: &FanoPolygon) -> FanoPolygon {
    let mut cur = canonical(p);
    loop {
        let here = counts(&cur).0;
        let best = mutations_of(&cur).into_iter().map(|q| (counts(&q).0, canonical(&q))).min();
        match best {
            Some((b, q)) if b < here => cur = q,
            _ => return cur,
        }
    }
}
