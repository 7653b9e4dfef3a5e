//! Linear algebra over a subfield `k` of `Z_n`.
//!
//! Everything field-dependent (elimination, characteristic polynomials,
//! eigenspaces) runs in the isomorphic prime field `Z_q` and is mapped back
//! entrywise. Scalar matrices use the subfield identity, so `I_e` has `e` on
//! the diagonal rather than `1`.

mod forms;
mod matrix;
pub mod prime;
mod spectral;

pub use forms::{bilinear_form_analyze, pseudo_inner_product, self_adjoint_check, BilinearForm};
pub use matrix::{SubfieldMatrix, SubfieldVector};
pub use prime::PrimeMatrix;
pub use spectral::{
    char_poly, eigen_system, spectral_decompose, AlienValue, CharPolyResult, EigenSystem,
    OrthogonalityCheck, SValue, SpectralDecomposition, SpectralTerm,
};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ring::{Rejection, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrices need at least one row and one column")]
    EmptyDimension,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("entry {entry} at ({row}, {col}) is not in the subfield")]
    EntryOutsideSubfield { entry: u64, row: usize, col: usize },
    #[error("scalar {0} is not in the subfield")]
    ScalarOutsideSubfield(u64),
    #[error("operands live over different subfields")]
    SubfieldMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric: entry ({row}, {col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },
    #[error("characteristic polynomial does not split over the subfield: roots account for {split_degree} of {dimension}")]
    NotSplit { split_degree: usize, dimension: usize },
    #[error("eigenvalue {eigenvalue} has algebraic multiplicity {algebraic} but geometric multiplicity {geometric}")]
    NotDiagonalizable {
        eigenvalue: u64,
        algebraic: usize,
        geometric: usize,
    },
    #[error("invalid subfield: {0}")]
    Ring(#[from] RingError),
    #[error("invalid subfield: {0}")]
    Rejected(#[from] Rejection),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl LinalgError {
    /// Stable machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            LinalgError::EmptyDimension => "empty_dimension",
            LinalgError::Shape(_) => "shape_mismatch",
            LinalgError::EntryOutsideSubfield { .. } => "entry_outside_subfield",
            LinalgError::ScalarOutsideSubfield(_) => "scalar_outside_subfield",
            LinalgError::SubfieldMismatch => "subfield_mismatch",
            LinalgError::NotSquare { .. } => "not_square",
            LinalgError::NotSymmetric { .. } => "not_symmetric",
            LinalgError::NotSplit { .. } => "not_split",
            LinalgError::NotDiagonalizable { .. } => "not_diagonalizable",
            LinalgError::Ring(_) | LinalgError::Rejected(_) => "invalid_subfield",
            LinalgError::Verification(_) => "verification_failed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatOp {
    Add,
    Mul,
}

pub fn mat_arith(a: &SubfieldMatrix, b: &SubfieldMatrix, op: MatOp) -> Result<SubfieldMatrix, LinalgError> {
    match op {
        MatOp::Add => a.add(b),
        MatOp::Mul => a.mul(b),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RrefResult {
    pub rank: usize,
    #[serde(serialize_with = "rows_only")]
    pub rref: SubfieldMatrix,
    pub pivots: Vec<usize>,
    #[serde(serialize_with = "entries_only")]
    pub nullspace: Vec<SubfieldVector>,
}

/// Rank, reduced echelon form and canonical nullspace basis, computed over
/// `Z_q` and mapped back into `k`.
pub fn rref_and_nullspace(a: &SubfieldMatrix) -> RrefResult {
    let p = a.to_prime();
    let (r, pivots) = p.rref();
    let k = a.subfield();
    let nullspace = p
        .nullspace()
        .iter()
        .map(|v| SubfieldVector::from_prime(k, v))
        .collect();
    RrefResult {
        rank: pivots.len(),
        rref: SubfieldMatrix::from_prime(k, &r).expect("same subfield and shape"),
        pivots,
        nullspace,
    }
}

pub(crate) fn rows_only<S: Serializer>(m: &SubfieldMatrix, s: S) -> Result<S::Ok, S::Error> {
    m.to_rows().serialize(s)
}

pub(crate) fn entries_only<S: Serializer>(vs: &[SubfieldVector], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(vs.iter().map(SubfieldVector::entries))
}
