//! Exact lattice geometry of Fano polygons.
//!
//! A Fano polygon is a convex lattice polygon with primitive vertices and the
//! origin strictly in its interior. This crate computes mutations of such
//! polygons, their singularity content, degree and Hilbert series, quivers,
//! minimal representatives and mutation-equivalence classes. All arithmetic is
//! exact: coordinates are arbitrary-precision integers and dual polygons use
//! exact rationals.
//!
//! ```
//! use fanopoly::{make_polygon, degree, IntVec2};
//!
//! let p = make_polygon(&[IntVec2::new(1, 0), IntVec2::new(0, 1), IntVec2::new(-1, -3)]).unwrap();
//! assert_eq!(degree(&p).to_string(), "25/3");
//! ```

pub mod classification;
pub mod error;
pub mod io;
pub mod lattice;
pub mod mutations;
pub mod quivers;
pub mod singularities;

pub use error::{Error, Result};
pub use lattice::{
    canonical_form, counts, dual_polygon, edge_data, ehrhart_count, ehrhart_count_rows, make_polygon,
    normalized_dual_volume, EdgeData, FanoPolygon, IntVec2, Rat, RationalPolygon, UnimodularMap,
};
pub use mutations::{
    is_minimal, minimize, mutate, mutate_dual, mutation_exists, neighbors, orbit, t_sublattice_invariant,
    MutationGraph, MutationSpec, OrbitBudget, SublatticeInvariant,
};
pub use quivers::{all_even, mutate_quiver, quiver_commutes_check, quiver_of, quivers_isomorphic, Quiver};
pub use singularities::{
    classify_cone, cone_content, degree, degree_contribution, hilbert_window, hj_expand, residual_point_count,
    rr_contribution, singularity_content, triangle_weights, ConeContent, CyclicQuotientSingularity, HJExpansion,
    SeriesWindow, SingularityContent,
};
