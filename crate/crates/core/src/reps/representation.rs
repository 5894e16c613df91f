use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::fusion::FusionRing;
use crate::hi::hi_cyclic;
use crate::linalg::QuadExt;

pub type CMatrix = DMatrix<Complex64>;

/// Exact data behind an explicit irreducible representation of `HI_{Z_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactTag {
    /// `ρ(g) = x`, `ρ(X) = y`.
    OneDim { x: QuadExt, y: QuadExt },
    /// `ρ(g) = diag(ζ_n^i, ζ_n^{-i})`, `ρ(X)` the swap matrix.
    TwoDim { i: usize },
}

impl fmt::Display for ExactTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactTag::OneDim { x, y } => write!(f, "1-dim (x={}, y={})", x.pretty(), y.pretty()),
            ExactTag::TwoDim { i } => write!(f, "V_{i}"),
        }
    }
}

/// A finite-dimensional representation of `R ⊗ C`: one matrix per basis element.
#[derive(Clone, Debug)]
pub struct Representation {
    ring: Arc<FusionRing>,
    dim: usize,
    matrices: Vec<CMatrix>,
    exact: Option<ExactTag>,
    /// For one-dimensional representations with exact data, `ρ(x_i)` in `Q(√D)`.
    exact_values: Option<Vec<QuadExt>>,
}

impl Representation {
    /// A numeric representation; nothing is checked until [`verify_representation`].
    pub fn new(ring: Arc<FusionRing>, dim: usize, matrices: Vec<CMatrix>) -> Self {
        assert_eq!(matrices.len(), ring.rank(), "one matrix per basis element");
        assert!(matrices.iter().all(|m| m.nrows() == dim && m.ncols() == dim));
        Representation {
            ring,
            dim,
            matrices,
            exact: None,
            exact_values: None,
        }
    }

    /// A one-dimensional representation given exactly by its values on the basis.
    pub fn one_dim_exact(ring: Arc<FusionRing>, values: Vec<QuadExt>, tag: Option<ExactTag>) -> Self {
        assert_eq!(values.len(), ring.rank());
        let matrices = values
            .iter()
            .map(|v| CMatrix::from_element(1, 1, Complex64::new(v.to_f64(), 0.0)))
            .collect();
        Representation {
            ring,
            dim: 1,
            matrices,
            exact: tag,
            exact_values: Some(values),
        }
    }

    pub fn ring(&self) -> &Arc<FusionRing> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, i: usize) -> &CMatrix {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn exact_tag(&self) -> Option<&ExactTag> {
        self.exact.as_ref()
    }

    pub fn exact_values(&self) -> Option<&[QuadExt]> {
        self.exact_values.as_deref()
    }

    /// Replaces `ρ(x_i)`; drops the exact data. Used for corrupted inputs in tests.
    pub fn with_matrix(&self, i: usize, m: CMatrix) -> Representation {
        let mut out = self.clone();
        out.matrices[i] = m;
        out.exact_values = None;
        out.exact = None;
        out
    }

    pub fn trace(&self, i: usize) -> Complex64 {
        self.matrices[i].trace()
    }

    /// `Σ_k a_k ρ(x_k)` for complex coefficients.
    pub fn act(&self, coeffs: &[Complex64]) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for (c, m) in coeffs.iter().zip(&self.matrices) {
            if *c != Complex64::zero() {
                out += m * *c;
            }
        }
        out
    }

    /// `Σ_k a_k ρ(x_k)` for integer coefficients.
    pub fn act_integral(&self, coeffs: &[BigInt]) -> CMatrix {
        let c: Vec<Complex64> = coeffs
            .iter()
            .map(|v| Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0))
            .collect();
        self.act(&c)
    }
}

/// One-dimensional representations of `HI_{Z_n}` on the given ring.
///
/// `x = 1` with `y = (n ± √(n²+4))/2` always; for even `n` also
/// `x = −1` with `y = ±1`. Values are `ρ(g^k) = x^k`, `ρ(g^kX) = x^k·y`.
pub fn hi_one_dim_reps_on(ring: &Arc<FusionRing>, n: usize) -> Vec<Representation> {
    let d = BigInt::from(n * n + 4);
    let half = |a: i64, b: i64| {
        QuadExt::new(
            BigRational::new(BigInt::from(a), BigInt::from(2)),
            BigRational::new(BigInt::from(b), BigInt::from(2)),
            d.clone(),
        )
    };
    let n_i = n as i64;
    let one = QuadExt::one(d.clone());
    let minus_one = one.neg();
    let mut params = vec![(one.clone(), half(n_i, 1)), (one.clone(), half(n_i, -1))];
    if n.is_multiple_of(2) {
        params.push((minus_one.clone(), one.clone()));
        params.push((minus_one.clone(), minus_one));
    }
    params
        .into_iter()
        .map(|(x, y)| {
            let mut values = Vec::with_capacity(2 * n);
            for k in 0..n {
                values.push(x.pow(k as u32));
            }
            for k in 0..n {
                values.push(x.pow(k as u32).try_mul(&y).expect("common radicand"));
            }
            Representation::one_dim_exact(ring.clone(), values, Some(ExactTag::OneDim { x, y }))
        })
        .collect()
}

pub fn hi_one_dim_reps(n: usize) -> Vec<Representation> {
    hi_one_dim_reps_on(&Arc::new(hi_cyclic(n)), n)
}

/// The two-dimensional representations `V_i`, `1 ≤ i ≤ ⌊(n−1)/2⌋`; empty for `n < 3`.
pub fn hi_two_dim_reps_on(ring: &Arc<FusionRing>, n: usize) -> Vec<Representation> {
    if n < 3 {
        return Vec::new();
    }
    let swap = CMatrix::from_row_slice(
        2,
        2,
        &[Complex64::zero(), Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), Complex64::zero()],
    );
    (1..=(n - 1) / 2)
        .map(|i| {
            let g_pow = |k: usize| {
                // reduce the exponent first so the angle stays small
                let e = (i * k) % n;
                let z = Complex64::from_polar(1.0, 2.0 * PI * e as f64 / n as f64);
                CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![z, z.conj()]))
            };
            let mut matrices: Vec<CMatrix> = (0..n).map(g_pow).collect();
            matrices.extend((0..n).map(|k| g_pow(k) * &swap));
            let mut rep = Representation::new(ring.clone(), 2, matrices);
            rep.exact = Some(ExactTag::TwoDim { i });
            rep
        })
        .collect()
}

pub fn hi_two_dim_reps(n: usize) -> Vec<Representation> {
    hi_two_dim_reps_on(&Arc::new(hi_cyclic(n)), n)
}

/// Every irreducible representation of `HI_{Z_n} ⊗ C`, one-dimensional first.
pub fn hi_irreps_on(ring: &Arc<FusionRing>, n: usize) -> Vec<Representation> {
    let mut reps = hi_one_dim_reps_on(ring, n);
    reps.extend(hi_two_dim_reps_on(ring, n));
    reps
}

/// Largest deviation from `ρ(x_i)ρ(x_j) = Σ_k N[i][j][k] ρ(x_k)` and `ρ(1) = I`.
///
/// Exact one-dimensional data is checked in `Q(√D)`; the result is `0.0`
/// exactly when every relation holds identically.
pub fn verify_representation(rep: &Representation) -> f64 {
    match &rep.exact_values {
        Some(values) => exact_residual(&rep.ring, values),
        None => numeric_residual(rep),
    }
}

fn exact_residual(ring: &FusionRing, values: &[QuadExt]) -> f64 {
    let d = values[0].radicand().clone();
    let mut worst: f64 = 0.0;
    let unit_dev = values[ring.unit()].try_sub(&QuadExt::one(d.clone())).expect("radicand");
    if !unit_dev.is_zero() {
        worst = worst.max(unit_dev.to_f64().abs());
    }
    let r = ring.rank();
    for i in 0..r {
        for j in 0..r {
            let lhs = values[i].try_mul(&values[j]).expect("radicand");
            let mut rhs = QuadExt::zero(d.clone());
            for (k, n) in ring.product_terms(i, j) {
                let term = values[*k].scale(&BigRational::from_integer(n.clone()));
                rhs = rhs.try_add(&term).expect("radicand");
            }
            let diff = lhs.try_sub(&rhs).expect("radicand");
            if !diff.is_zero() {
                worst = worst.max(diff.to_f64().abs().max(f64::MIN_POSITIVE));
            }
        }
    }
    worst
}

fn numeric_residual(rep: &Representation) -> f64 {
    let ring = &rep.ring;
    let r = ring.rank();
    let mut worst = (&rep.matrices[ring.unit()] - CMatrix::identity(rep.dim, rep.dim)).camax();
    for i in 0..r {
        for j in 0..r {
            let mut diff = &rep.matrices[i] * &rep.matrices[j];
            for (k, n) in ring.product_terms(i, j) {
                let n = n.to_f64().unwrap_or(f64::NAN);
                diff -= &rep.matrices[*k] * Complex64::new(n, 0.0);
            }
            worst = worst.max(diff.camax());
        }
    }
    worst
}

/// `(#one-dimensional) + 4·(#two-dimensional) = 2n`.
pub fn completeness_check(n: usize) -> bool {
    let ring = Arc::new(hi_cyclic(n));
    let total: usize = hi_irreps_on(&ring, n).iter().map(|r| r.dim() * r.dim()).sum();
    total == 2 * n
}
