//! Exact arithmetic: big integers and rationals, the quadratic field `Q(√D)`,
//! and integer-matrix algorithms.

mod matrix;
mod quad;

pub use matrix::{det_exact, hnf, lattice_unit_generator, IntMatrix};
pub use quad::{galois_conjugate, quad_arith, QuadExt, QuadOp};

pub use num_bigint::BigInt as Integer;
pub use num_rational::BigRational as Rational;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("radicand mismatch: √{left} vs √{right}")]
    RadicandMismatch { left: BigInt, right: BigInt },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: expected {expected:?}, found {found} entries")]
    ShapeMismatch { expected: (usize, usize), found: usize },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("no positive multiple of e_{unit_index} lies in the column span")]
    NoUnitMultiple { unit_index: usize },
}
