//! Irreducible representations of `HI_{Z_n} ⊗ C`, formal codegrees and the
//! pseudo-unitarity test.

mod codegree;
mod representation;

pub use codegree::{
    alpha_element, codegree_report, codegree_report_on, commutative_codegrees, commutative_codegrees_with, formal_codegree,
    global_dimension_candidates, induction_dims, CodegreeReport, FormalCodegree, InductionComponent,
    IrrepSource, RESIDUAL_TOLERANCE, SCALAR_TOLERANCE, SEPARATION_TOLERANCE,
};
pub use representation::{
    completeness_check, hi_irreps_on, hi_one_dim_reps, hi_one_dim_reps_on, hi_two_dim_reps,
    hi_two_dim_reps_on, verify_representation, CMatrix, ExactTag, Representation,
};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("c(1) does not act as a scalar (deviation {deviation:e})")]
    NotScalar { deviation: f64 },
    #[error("representation #{index} fails the fusion relations (residual {residual:e})")]
    Unverified { index: usize, residual: f64 },
    #[error("ring is not commutative")]
    NotCommutative,
    #[error("could not separate characters after repeated random draws")]
    Degenerate,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Arithmetic(#[from] LinalgError),
}
