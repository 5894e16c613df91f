use std::fmt;
use std::ops::{AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FusionError;
use crate::linalg::IntMatrix;

/// A based ring with a distinguished unit and a duality involution.
///
/// `N[i][j][k]` is the coefficient of `x_k` in `x_i·x_j`. The dense tensor is
/// the source of truth; a sparse copy of every product `x_i·x_j` is kept
/// alongside it for multiplication and validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    tensor: Vec<BigInt>,
    products: Vec<Vec<(usize, BigInt)>>,
}

/// A failed fusion-ring axiom, with the offending indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    NegativeEntry { i: usize, j: usize, k: usize },
    Unit { i: usize, j: usize },
    Dual { i: usize, j: usize },
    DualNotInvolution { i: usize },
    Associativity { i: usize, j: usize, k: usize, l: usize },
    TransposeDual { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeEntry { i, j, k } => {
                write!(f, "negative structure constant at (i,j,k)=({i},{j},{k})")
            }
            Violation::Unit { i, j } => write!(f, "unit law violated at (j,k)=({i},{j})"),
            Violation::Dual { i, j } => write!(f, "duality violated at (i,j)=({i},{j})"),
            Violation::DualNotInvolution { i } => {
                write!(f, "dual is not an involution at i={i}")
            }
            Violation::Associativity { i, j, k, l } => {
                write!(f, "associativity violated at (i,j,k,l)=({i},{j},{k},{l})")
            }
            Violation::TransposeDual { i, j, k } => {
                write!(f, "transpose-dual symmetry violated at (i,j,k)=({i},{j},{k})")
            }
        }
    }
}

impl FusionRing {
    /// Checks shapes and index ranges only; the axioms are checked by [`validate`](Self::validate).
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        tensor: Vec<BigInt>,
    ) -> Result<Self, FusionError> {
        let r = labels.len();
        if r == 0 {
            return Err(FusionError::Shape("rank must be positive".into()));
        }
        if dual.len() != r {
            return Err(FusionError::Shape(format!(
                "dual has length {}, expected {r}",
                dual.len()
            )));
        }
        if tensor.len() != r * r * r {
            return Err(FusionError::Shape(format!(
                "tensor has {} entries, expected {}",
                tensor.len(),
                r * r * r
            )));
        }
        if unit >= r {
            return Err(FusionError::Shape(format!("unit {unit} out of range")));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= r) {
            return Err(FusionError::Shape(format!("dual entry {d} out of range")));
        }
        let mut ring = FusionRing {
            labels,
            unit,
            dual,
            tensor,
            products: Vec::new(),
        };
        ring.rebuild_products();
        Ok(ring)
    }

    /// Builds a ring from a closure giving `N[i][j][k]`.
    pub fn from_fn(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        f: impl Fn(usize, usize, usize) -> BigInt,
    ) -> Result<Self, FusionError> {
        let r = labels.len();
        let mut tensor = Vec::with_capacity(r * r * r);
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    tensor.push(f(i, j, k));
                }
            }
        }
        FusionRing::new(labels, unit, dual, tensor)
    }

    fn rebuild_products(&mut self) {
        let r = self.rank();
        self.products = (0..r * r)
            .map(|ij| {
                (0..r)
                    .filter_map(|k| {
                        let v = &self.tensor[ij * r + k];
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect()
            })
            .collect();
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> &BigInt {
        let r = self.rank();
        &self.tensor[(i * r + j) * r + k]
    }

    /// Nonzero terms of `x_i·x_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, BigInt)] {
        &self.products[i * self.rank() + j]
    }

    /// Overwrites a single structure constant. Used to build corrupted rings for negative tests.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, value: BigInt) -> FusionRing {
        let r = self.rank();
        let mut out = self.clone();
        out.tensor[(i * r + j) * r + k] = value;
        out.rebuild_products();
        out
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..i).all(|j| (0..r).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    /// Checks every fusion-ring axiom and returns the list of failures.
    pub fn validate(&self) -> Vec<Violation> {
        let r = self.rank();
        let mut out = Vec::new();
        let u = self.unit;
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.n(i, j, k).is_negative() {
                        out.push(Violation::NegativeEntry { i, j, k });
                    }
                }
            }
        }
        for j in 0..r {
            for k in 0..r {
                let delta = if j == k { BigInt::one() } else { BigInt::zero() };
                if self.n(u, j, k) != &delta || self.n(j, u, k) != &delta {
                    out.push(Violation::Unit { i: j, j: k });
                }
            }
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                out.push(Violation::DualNotInvolution { i });
            }
            for j in 0..r {
                let expected = if j == self.dual[i] {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                if self.n(i, j, u) != &expected {
                    out.push(Violation::Dual { i, j });
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let (di, dj, dk) = (self.dual[i], self.dual[j], self.dual[k]);
                    if self.n(i, j, k) != self.n(dj, di, dk) {
                        out.push(Violation::TransposeDual { i, j, k });
                    }
                }
            }
        }
        out.extend(self.associativity_violations());
        out
    }

    fn associativity_violations(&self) -> Vec<Violation> {
        let small: Option<Vec<Vec<(usize, u128)>>> = self
            .products
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(k, v)| v.to_u32().map(|v| (*k, u128::from(v))))
                    .collect()
            })
            .collect();
        match small {
            Some(products) => associativity_scan(&products, self.rank()),
            None => associativity_scan(&self.products, self.rank()),
        }
    }

    pub fn basis(&self, i: usize) -> RingElement<'_> {
        let mut coeffs = vec![BigInt::zero(); self.rank()];
        coeffs[i] = BigInt::one();
        RingElement { ring: self, coeffs }
    }

    pub fn one(&self) -> RingElement<'_> {
        self.basis(self.unit)
    }

    pub fn zero(&self) -> RingElement<'_> {
        RingElement {
            ring: self,
            coeffs: vec![BigInt::zero(); self.rank()],
        }
    }

    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<RingElement<'_>, FusionError> {
        if coeffs.len() != self.rank() {
            return Err(FusionError::Shape(format!(
                "element has {} coefficients, ring rank is {}",
                coeffs.len(),
                self.rank()
            )));
        }
        Ok(RingElement { ring: self, coeffs })
    }

    pub fn element_from_i64(&self, coeffs: &[i64]) -> Result<RingElement<'_>, FusionError> {
        self.element(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Left multiplication by the basis element `x_i`, in place of a dense product.
    pub(crate) fn basis_times(&self, i: usize, b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank()];
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for (k, n) in self.product_terms(i, j) {
                out[*k] += n * bj;
            }
        }
        out
    }

    pub(crate) fn times_basis(&self, a: &[BigInt], j: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, n) in self.product_terms(i, j) {
                out[*k] += n * ai;
            }
        }
        out
    }

    pub(crate) fn multiply_coeffs(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rank()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for (k, n) in self.product_terms(i, j) {
                    out[*k] += n * &ab;
                }
            }
        }
        out
    }

    /// Matrix of `b ↦ a·b`; column `j` holds the coefficients of `a·x_j`.
    pub fn left_mult_matrix(&self, a: &RingElement<'_>) -> IntMatrix {
        let r = self.rank();
        let columns: Vec<Vec<BigInt>> = (0..r).map(|j| self.times_basis(&a.coeffs, j)).collect();
        IntMatrix::from_columns(r, &columns)
    }

    /// `L_{x_i}` as an `f64` matrix, row-major.
    pub(crate) fn basis_left_mult_f64(&self, i: usize) -> Vec<Vec<f64>> {
        let r = self.rank();
        let mut m = vec![vec![0.0; r]; r];
        for j in 0..r {
            for (k, n) in self.product_terms(i, j) {
                m[*k][j] = n.to_f64().unwrap_or(f64::NAN);
            }
        }
        m
    }
}

fn associativity_scan<T>(products: &[Vec<(usize, T)>], r: usize) -> Vec<Violation>
where
    T: Clone + Zero + PartialEq + AddAssign,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let mut out = Vec::new();
    let mut left = vec![T::zero(); r];
    let mut right = vec![T::zero(); r];
    for i in 0..r {
        for j in 0..r {
            let ij = &products[i * r + j];
            for k in 0..r {
                left.iter_mut().for_each(|v| *v = T::zero());
                right.iter_mut().for_each(|v| *v = T::zero());
                // (x_i x_j) x_k
                for (m, a) in ij {
                    for (l, b) in &products[m * r + k] {
                        left[*l] += a * b;
                    }
                }
                // x_i (x_j x_k)
                for (m, a) in &products[j * r + k] {
                    for (l, b) in &products[i * r + m] {
                        right[*l] += a * b;
                    }
                }
                for l in 0..r {
                    if left[l] != right[l] {
                        out.push(Violation::Associativity { i, j, k, l });
                    }
                }
            }
        }
    }
    out
}

/// An integer combination of basis elements of a fixed ring.
#[derive(Clone, Debug)]
pub struct RingElement<'r> {
    ring: &'r FusionRing,
    coeffs: Vec<BigInt>,
}

impl PartialEq for RingElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ring, other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement<'_> {}

impl<'r> RingElement<'r> {
    pub fn ring(&self) -> &'r FusionRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    fn same_ring(&self, other: &RingElement<'_>) -> Result<(), FusionError> {
        if std::ptr::eq(self.ring, other.ring) {
            Ok(())
        } else {
            Err(FusionError::RingMismatch)
        }
    }

    pub fn multiply(&self, other: &RingElement<'r>) -> Result<RingElement<'r>, FusionError> {
        self.same_ring(other)?;
        Ok(RingElement {
            ring: self.ring,
            coeffs: self.ring.multiply_coeffs(&self.coeffs, &other.coeffs),
        })
    }

    pub fn add(&self, other: &RingElement<'r>) -> Result<RingElement<'r>, FusionError> {
        self.same_ring(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(RingElement {
            ring: self.ring,
            coeffs,
        })
    }

    pub fn sub(&self, other: &RingElement<'r>) -> Result<RingElement<'r>, FusionError> {
        self.same_ring(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(RingElement {
            ring: self.ring,
            coeffs,
        })
    }

    pub fn scale(&self, k: &BigInt) -> RingElement<'r> {
        RingElement {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// The image under the dual involution, extended linearly.
    pub fn dual(&self) -> RingElement<'r> {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[self.ring.dual(i)] = c.clone();
        }
        RingElement {
            ring: self.ring,
            coeffs,
        }
    }

    pub fn pow(&self, exp: u32) -> RingElement<'r> {
        let mut acc = self.ring.one();
        for _ in 0..exp {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for RingElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let label = &self.ring.labels[i];
                if c.is_one() {
                    label.clone()
                } else {
                    format!("{c}*{label}")
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub fn validate(ring: &FusionRing) -> Vec<Violation> {
    ring.validate()
}

pub fn multiply<'r>(a: &RingElement<'r>, b: &RingElement<'r>) -> Result<RingElement<'r>, FusionError> {
    a.multiply(b)
}

pub fn left_mult_matrix(a: &RingElement<'_>) -> IntMatrix {
    a.ring().left_mult_matrix(a)
}

pub fn is_commutative(ring: &FusionRing) -> bool {
    ring.is_commutative()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Z[Z_m] with basis g^0..g^{m-1}.
    fn cyclic_group_ring(m: usize) -> FusionRing {
        let labels = (0..m).map(|i| format!("g{i}")).collect();
        let dual = (0..m).map(|i| (m - i) % m).collect();
        FusionRing::from_fn(labels, 0, dual, |i, j, k| {
            BigInt::from(u8::from((i + j) % m == k))
        })
        .unwrap()
    }

    /// Yang-Lee: X² = 1 + X.
    fn yang_lee() -> FusionRing {
        let t = [[[1, 0], [0, 1]], [[0, 1], [1, 1]]];
        FusionRing::from_fn(vec!["1".into(), "X".into()], 0, vec![0, 1], |i, j, k| {
            BigInt::from(t[i][j][k])
        })
        .unwrap()
    }

    #[test]
    fn group_ring_is_valid_and_commutative() {
        let ring = cyclic_group_ring(2);
        assert!(ring.validate().is_empty());
        assert!(ring.is_commutative());
        assert!(cyclic_group_ring(5).validate().is_empty());
    }

    #[test]
    fn shape_errors() {
        assert!(FusionRing::new(vec![], 0, vec![], vec![]).is_err());
        assert!(FusionRing::new(vec!["1".into()], 0, vec![0], vec![]).is_err());
        assert!(FusionRing::new(vec!["1".into()], 1, vec![0], vec![BigInt::one()]).is_err());
        assert!(FusionRing::new(vec!["1".into()], 0, vec![3], vec![BigInt::one()]).is_err());
    }

    #[test]
    fn corrupted_unit_is_reported() {
        let ring = yang_lee().with_entry(0, 1, 0, BigInt::one());
        let v = ring.validate();
        assert!(v.contains(&Violation::Unit { i: 1, j: 0 }));
    }

    #[test]
    fn non_involutive_dual_is_reported() {
        let ring = cyclic_group_ring(3);
        let bad = FusionRing::new(
            ring.labels().to_vec(),
            0,
            vec![1, 2, 0],
            ring.tensor.clone(),
        )
        .unwrap();
        assert!(bad.validate().contains(&Violation::DualNotInvolution { i: 0 }));
    }

    #[test]
    fn negative_entry_is_reported() {
        let ring = yang_lee().with_entry(1, 1, 1, BigInt::from(-1));
        assert!(ring.validate().contains(&Violation::NegativeEntry { i: 1, j: 1, k: 1 }));
    }

    #[test]
    fn yang_lee_left_mult() {
        let ring = yang_lee();
        let a = ring.element_from_i64(&[2, 1]).unwrap();
        assert_eq!(
            ring.left_mult_matrix(&a),
            IntMatrix::from_rows(&[vec![2, 1], vec![1, 3]])
        );
        assert_eq!(ring.left_mult_matrix(&ring.one()), IntMatrix::identity(2));
    }

    #[test]
    fn ring_mismatch() {
        let a = yang_lee();
        let b = yang_lee();
        assert!(matches!(
            a.one().multiply(&b.one()),
            Err(FusionError::RingMismatch)
        ));
    }

    #[test]
    fn display_and_pow() {
        let ring = yang_lee();
        let x = ring.basis(1);
        assert_eq!(x.pow(2).to_string(), "1 + X");
        assert_eq!(x.pow(3).to_string(), "1 + 2*X");
        assert_eq!(ring.zero().to_string(), "0");
    }
}
