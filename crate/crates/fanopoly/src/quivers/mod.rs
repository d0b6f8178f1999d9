//! Quivers of Fano polygons and their mutations.

mod iso;
mod quiver;

pub use iso::{find_isomorphism, quiver_key, quiver_orbit, quivers_isomorphic, separate_quivers, QuiverSeparation};
pub use quiver::{all_even, mutate_quiver, mutate_quiver_by_arrows, quiver_commutes_check, quiver_of, Quiver};
