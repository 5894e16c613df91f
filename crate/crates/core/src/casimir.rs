//! The Casimir operator `c(a) = Σ_i x_i·a·x_i*` and the invariants built on it.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use thiserror::Error;

use crate::fusion::{FusionRing, RingElement};
use crate::linalg::{IntMatrix, LinalgError};

/// Eigenvalues closer than this are reported as one cluster.
pub const SPECTRUM_CLUSTER_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CasimirError {
    #[error(transparent)]
    Lattice(#[from] LinalgError),
    #[error("left multiplication by c(1) is not symmetric")]
    NotSymmetric,
}

/// `c(a)` as a coefficient vector.
pub(crate) fn casimir_coeffs(ring: &FusionRing, a: &[BigInt]) -> Vec<BigInt> {
    let r = ring.rank();
    let mut out = vec![BigInt::from(0); r];
    for i in 0..r {
        let xa = ring.basis_times(i, a);
        let term = ring.times_basis(&xa, ring.dual(i));
        for (o, t) in out.iter_mut().zip(term) {
            *o += t;
        }
    }
    out
}

pub fn casimir_apply<'r>(a: &RingElement<'r>) -> RingElement<'r> {
    let ring = a.ring();
    ring.element(casimir_coeffs(ring, a.coeffs()))
        .expect("rank-length coefficients")
}

/// The Casimir element `c(1) = Σ_i x_i·x_i*`.
pub fn casimir_element(ring: &FusionRing) -> RingElement<'_> {
    casimir_apply(&ring.one())
}

/// Column `j` holds `c(x_j)`. Since `c` is additive its integer column span is `Im(c)`.
pub fn casimir_matrix(ring: &FusionRing) -> IntMatrix {
    let columns: Vec<Vec<BigInt>> = (0..ring.rank())
        .map(|j| casimir_coeffs(ring, ring.basis(j).coeffs()))
        .collect();
    IntMatrix::from_columns(ring.rank(), &columns)
}

#[derive(Clone, Debug)]
pub struct CasimirData<'r> {
    pub ring: &'r FusionRing,
    pub casimir_element: RingElement<'r>,
    pub casimir_matrix: IntMatrix,
    pub left_mult_of_c1: IntMatrix,
}

impl<'r> CasimirData<'r> {
    pub fn new(ring: &'r FusionRing) -> Self {
        let casimir_matrix = casimir_matrix(ring);
        let casimir_element = ring
            .element(casimir_matrix.column(ring.unit()))
            .expect("rank-length column");
        let left_mult_of_c1 = ring.left_mult_matrix(&casimir_element);
        CasimirData {
            ring,
            casimir_element,
            casimir_matrix,
            left_mult_of_c1,
        }
    }

    pub fn casimir_number(&self) -> Result<BigInt, CasimirError> {
        Ok(self.casimir_matrix.lattice_unit_generator(self.ring.unit())?)
    }

    pub fn determinant(&self) -> BigInt {
        self.left_mult_of_c1.det_exact().expect("square matrix")
    }

    pub fn spectrum(&self) -> Result<Vec<SpectrumCluster>, CasimirError> {
        symmetric_spectrum(&self.left_mult_of_c1)
    }
}

/// The positive generator of `Z ∩ Im(c)`.
pub fn casimir_number(ring: &FusionRing) -> Result<BigInt, CasimirError> {
    Ok(casimir_matrix(ring).lattice_unit_generator(ring.unit())?)
}

/// `det [c(1)]`, the determinant of left multiplication by the Casimir element.
pub fn casimir_determinant(ring: &FusionRing) -> BigInt {
    ring.left_mult_matrix(&casimir_element(ring))
        .det_exact()
        .expect("square matrix")
}

/// An eigenvalue of `[c(1)]` (cluster mean) and how many eigenvalues fell into it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumCluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues of `[c(1)]`, ascending, clustered at [`SPECTRUM_CLUSTER_TOLERANCE`].
pub fn casimir_spectrum(ring: &FusionRing) -> Result<Vec<SpectrumCluster>, CasimirError> {
    symmetric_spectrum(&ring.left_mult_matrix(&casimir_element(ring)))
}

fn symmetric_spectrum(m: &IntMatrix) -> Result<Vec<SpectrumCluster>, CasimirError> {
    if !m.is_symmetric() {
        return Err(CasimirError::NotSymmetric);
    }
    let r = m.rows();
    let rows = m.to_f64_rows();
    let dense = DMatrix::from_fn(r, r, |i, j| rows[i][j]);
    let mut values: Vec<f64> = SymmetricEigen::new(dense).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(cluster(&values, SPECTRUM_CLUSTER_TOLERANCE))
}

pub(crate) fn cluster(sorted: &[f64], tol: f64) -> Vec<SpectrumCluster> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in sorted {
        match out.last_mut() {
            Some((sum, count)) if (v - *sum / *count as f64).abs() <= tol => {
                *sum += v;
                *count += 1;
            }
            _ => out.push((v, 1)),
        }
    }
    out.into_iter()
        .map(|(sum, count)| SpectrumCluster {
            value: sum / count as f64,
            multiplicity: count,
        })
        .collect()
}

/// Whether `c(a)` commutes with every basis element.
pub fn centrality_check(a: &RingElement<'_>) -> bool {
    is_central(&casimir_apply(a))
}

/// Whether `z` commutes with every basis element.
pub fn is_central(z: &RingElement<'_>) -> bool {
    let ring = z.ring();
    (0..ring.rank()).all(|j| ring.times_basis(z.coeffs(), j) == ring.basis_times(j, z.coeffs()))
}
