use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cqs::singularity_content;
use super::hj::degree_contribution;
use super::rr::{rr_contribution, SeriesWindow};
use crate::error::{Error, Result};
use crate::lattice::{dual_polygon, ehrhart_count, rat_int, FanoPolygon, Rat};

/// Anticanonical degree `12 - n - Σ A_σ` from the singularity content.
pub fn degree(p: &FanoPolygon) -> Rat {
    let sc = singularity_content(p);
    let mut d = Rat::from_integer(BigInt::from(12) - &sc.n);
    for sigma in &sc.basket {
        d -= degree_contribution(sigma);
    }
    d
}

/// Hilbert series coefficients from the singularity content, without the lattice-point check.
pub fn hilbert_window_unchecked(p: &FanoPolygon, d: usize) -> SeriesWindow {
    let k2 = degree(p);
    let basket = singularity_content(p).basket;
    let terms: Vec<_> = basket.iter().map(|s| rr_contribution(s, d)).collect();
    let coefficients = (0..=d)
        .map(|i| {
            // (1 + (K²-2)t + t²)/(1-t)³ has coefficient 1 + C(i+1, 2)·K² at t^i.
            let binom = BigInt::from(i) * BigInt::from(i + 1) / BigInt::from(2);
            let mut c = Rat::one() + rat_int(&binom) * &k2;
            for t in &terms {
                c += t.coefficient(i);
            }
            c
        })
        .collect();
    SeriesWindow { degree_bound: d, coefficients }
}

/// Coefficients `c_0..=c_D` of `Hilb(X_P, -K)`, each confirmed against a
/// lattice-point count of the dilated dual polygon.
pub fn hilbert_window(p: &FanoPolygon, d: usize) -> Result<SeriesWindow> {
    let w = hilbert_window_unchecked(p, d);
    let dual = dual_polygon(p);
    for (i, c) in w.coefficients.iter().enumerate() {
        let count = ehrhart_count(&dual, i as u64);
        if *c != rat_int(&count) {
            return Err(Error::InconsistentHilbert { degree: i, series: c.to_string(), count: count.to_string() });
        }
    }
    Ok(w)
}

/// Lattice points of `P` lying strictly inside residual cones.
pub fn residual_point_count(p: &FanoPolygon) -> BigInt {
    let mut total = BigInt::zero();
    for sigma in singularity_content(p).basket {
        let (r, k0) = (sigma.r(), sigma.k());
        total += k0 * (r - BigInt::one()) / BigInt::from(2) + k0 - BigInt::one();
    }
    total
}

/// Weights `(λ0, λ1, λ2)` with `Σ λ_i v_i = 0` for a triangle's vertices, and
/// the index of the sublattice the vertices generate.
pub fn triangle_weights(p: &FanoPolygon) -> Result<(BigInt, BigInt, BigInt, BigInt)> {
    if p.len() != 3 {
        return Err(Error::NotTriangle(p.len()));
    }
    let v = p.vertices();
    let l0 = v[1].det(&v[2]);
    let l1 = v[2].det(&v[0]);
    let l2 = v[0].det(&v[1]);
    let g = l0.gcd(&l1).gcd(&l2);
    debug_assert!(g.is_positive());
    Ok((&l0 / &g, &l1 / &g, &l2 / &g, g))
}

/// Weights sorted ascending; convenient for comparing with weight tables.
pub fn sorted_weights(p: &FanoPolygon) -> Result<[i64; 3]> {
    let (a, b, c, _) = triangle_weights(p)?;
    let mut w = [a, b, c].map(|x| x.to_i64().expect("weight fits in i64"));
    w.sort_unstable();
    Ok(w)
}
