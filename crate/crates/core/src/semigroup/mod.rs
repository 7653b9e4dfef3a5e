//! Finite semigroups given by Cayley tables, their subgroups, and rational
//! representations of those subgroups.
//!
//! Irreducibility is always meant over the rationals.

pub mod catalog;
mod decompose;
mod rep;
mod table;

pub use decompose::{decompose_invariants, InvariantBlock, DECOMPOSE_DEGREE_LIMIT};
pub use rep::{
    averaged_projection, commutant, coordinate_projection, left_right_intertwiner, permutation_representation,
    regular_representation, rep_isomorphic, AveragedProjection, Intertwiner, IsomorphismReport, Representation,
    Side,
};
pub use table::{all_subgroups, find_subgroups, validate_table, SemigroupTable, SubgroupRecord, ALL_SUBGROUPS_LIMIT};

use thiserror::Error;

use crate::rational::RationalError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("entry {value} at ({x}, {y}) is not an element index")]
    EntryOutOfRange { x: usize, y: usize, value: usize },
    #[error("not associative: ({x}·{y})·{z} differs from {x}·({y}·{z})")]
    NonAssociative { x: usize, y: usize, z: usize },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("order {order} exceeds the enumeration limit {limit}")]
    OrderBound { order: usize, limit: usize },
    #[error("representations are over different subgroups")]
    SubgroupMismatch,
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeBound { degree: usize, limit: usize },
    #[error("matrices fail M({x})·M({y}) = M({x}·{y}) or M(e) = I")]
    NotHomomorphism { x: usize, y: usize },
    #[error("subspace is not invariant under element {element}")]
    NotInvariant { element: usize },
    #[error("not a projection onto W: {0}")]
    NotProjection(String),
    #[error("action of element {element} is not a bijection")]
    ActionNotBijective { element: usize },
    #[error("action is not a homomorphism at ({x}, {y}) on point {point}")]
    ActionNotHomomorphic { x: usize, y: usize, point: usize },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

impl SemigroupError {
    pub fn code(&self) -> &'static str {
        match self {
            SemigroupError::Malformed(_) => "malformed",
            SemigroupError::EntryOutOfRange { .. } => "entry_out_of_range",
            SemigroupError::NonAssociative { .. } => "non_associative",
            SemigroupError::NotSubgroup(_) => "not_subgroup",
            SemigroupError::OrderBound { .. } => "order_bound",
            SemigroupError::SubgroupMismatch => "subgroup_mismatch",
            SemigroupError::DegreeBound { .. } => "degree_bound",
            SemigroupError::NotHomomorphism { .. } => "not_homomorphism",
            SemigroupError::NotInvariant { .. } => "not_invariant",
            SemigroupError::NotProjection(_) => "not_projection",
            SemigroupError::ActionNotBijective { .. } => "action_not_bijective",
            SemigroupError::ActionNotHomomorphic { .. } => "action_not_homomorphic",
            SemigroupError::Verification(_) => "verification_failed",
            SemigroupError::Rational(_) => "malformed",
        }
    }
}
