//! Mutation of Fano polygons, orbit exploration, minimality and the
//! T-sublattice invariant.

mod minimal;
mod mutate;
mod orbit;
mod sublattice;

pub use minimal::{is_minimal, is_minimal_by, minimize, mutations_of, t_cone_height_sum, MinimalityCriterion};
pub use mutate::{
    mutate, mutate_dual, mutate_n_side, mutate_raw, mutation_exists, mutation_spec, mutation_spec_for_normal, phi,
    MutationSpec,
};
pub use orbit::{neighbors, orbit, orbit_of, MutationGraph, Neighbor, OrbitBudget};
pub use sublattice::{all_normals_invariant, elementary_divisors, t_sublattice_invariant, SublatticeInvariant};
