//! Euler covers: closed surfaces mapping onto an even complex with every
//! face covered exactly once.
//!
//! A cover is built by cutting the complex into its faces and gluing them
//! back in pairs along each edge. The pairing at an edge is a perfect
//! matching on the faces containing it; one matching per edge is a
//! [`GluingAssignment`]. The quotient is a [`CombinatorialSurface`] whose
//! vertices are orbits of face corners.

mod assignment;
mod census;
mod classify;
mod map;
mod surface;

pub use assignment::{
    assignment_count, canonical_assignment, enumerate_matchings, matching_count, AssignmentError,
    AssignmentSpace, GluingAssignment, Matching, Pair,
};
pub use census::{census, census_with_jobs, Census, CensusOutcome, CensusRecord, EdgeChoice};
pub use classify::{classify, SurfaceType};
pub use map::{build_cover, verify_cover, CoverMap, CoverViolation};
pub use surface::{CombinatorialSurface, ComponentStats, Side, SurfaceError, SurfaceFace};

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("complex is not even; offending edges: {}", .0.join(", "))]
    NotEven(Vec<String>),
    #[error("cannot perfectly match an odd number ({0}) of faces")]
    OddMatching(usize),
    #[error(transparent)]
    Assignment(#[from] AssignmentError),
    #[error("decomposition part {part} meets edge `{edge}` in an odd number of faces")]
    OddPart { part: usize, edge: String },
    #[error("decomposition does not partition the faces: face `{face}` appears {count} times")]
    NotAPartition { face: String, count: usize },
    #[error("{count} gluing assignments exceed the limit of {limit}")]
    LimitExceeded { count: BigUint, limit: u64 },
}

pub(crate) fn require_even(k: &crate::complex::TwoComplex) -> Result<(), CoverError> {
    if k.is_even() {
        Ok(())
    } else {
        Err(CoverError::NotEven(
            k.odd_edges().into_iter().map(String::from).collect(),
        ))
    }
}
