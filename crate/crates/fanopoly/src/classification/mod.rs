//! Enumeration of minimal polygons and mutation-equivalence classes.

mod bounds;
mod classes;
mod enumerate;
mod search;
pub mod tables;

pub use bounds::{basket_bounds, candidate_triples, BasketBounds, CandidateTriple, ResidualCandidate};
pub use classes::{
    fingerprint, partition_into_classes, ClassBudget, ClassReport, DistinctPair, Fingerprint, FINGERPRINT_HILBERT_DEGREE,
};
pub use enumerate::{
    enumerate_fano_max_index, enumerate_minimal_empty, enumerate_minimal_with_basket, enumerate_minimal_with_repeated,
    max_local_index, MAX_SUPPORTED_INDEX,
};
pub use tables::{table_polygons, table_rows, verify_table, TableId, TableReport};
