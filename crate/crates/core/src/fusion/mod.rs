//! The fusion-ring data model.

mod file;
mod fpdim;
mod ring;

pub use fpdim::{fpdim_basis, fpdim_basis_with, fpdim_ring, fpdim_ring_with, Enclosure, DEFAULT_PRECISION};
pub use ring::{is_commutative, left_mult_matrix, multiply, validate, FusionRing, RingElement, Violation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("malformed ring: {0}")]
    Shape(String),
    #[error("cannot parse ring file: {0}")]
    Parse(String),
}
