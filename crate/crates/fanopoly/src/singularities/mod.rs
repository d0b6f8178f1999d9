//! Edge cones as cyclic quotient singularities, singularity content, and the
//! degree and Hilbert series assembled from it.

mod cqs;
mod degree;
mod hj;
mod rr;

pub use cqs::{
    classify_cone, cone_content, edge_singularities, singularity_content, ConeContent, CyclicQuotientSingularity,
    SingularityContent,
};
pub use degree::{degree, hilbert_window, hilbert_window_unchecked, residual_point_count, sorted_weights, triangle_weights};
pub use hj::{degree_contribution, hj_expand, hj_of, HJExpansion};
pub use rr::{dedekind_deltas, rr_contribution, RiemannRochTerm, SeriesWindow};
