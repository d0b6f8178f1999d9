//! Exact two-dimensional lattice geometry: vectors, unimodular maps, Fano
//! polygons, canonical forms, duals and lattice-point counts.

mod canonical;
mod dual;
mod polygon;
mod vec;

pub use canonical::{canonical, canonical_form, equivalent};
pub use dual::{dual_polygon, ehrhart_count, ehrhart_count_rows, normalized_dual_volume, RationalPolygon};
pub use polygon::{counts, edge_data, make_polygon, EdgeData, FanoPolygon};
pub use vec::{IntVec2, Rat, RatVec2, UnimodularMap};

pub(crate) use canonical::hermite_map;
pub(crate) use vec::{ext_gcd, rat_int};
