use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::representation::{hi_irreps_on, verify_representation, ExactTag, Representation};
use super::RepError;
use crate::casimir::casimir_element;
use crate::fusion::{fpdim_ring_with, FusionRing, DEFAULT_PRECISION};
use crate::hi::hi_cyclic;
use crate::linalg::{IntMatrix, QuadExt};

/// Tolerance for `ρ(c(1))` being a scalar matrix on the numeric path.
pub const SCALAR_TOLERANCE: f64 = 1e-9;
/// Relation residual above which a representation is rejected.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;
/// Minimum eigenvalue gap accepted when diagonalizing a random central combination.
pub const SEPARATION_TOLERANCE: f64 = 1e-6;

const MAX_DRAWS: u64 = 32;

/// Which irreducible representation a codegree belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrrepSource {
    Explicit(ExactTag),
    Character(usize),
    Unlabelled(usize),
}

impl fmt::Display for IrrepSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepSource::Explicit(tag) => write!(f, "{tag}"),
            IrrepSource::Character(k) => write!(f, "character #{k}"),
            IrrepSource::Unlabelled(k) => write!(f, "irrep #{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FormalCodegree {
    /// Exact value, when the path that produced it is exact or certified.
    pub exact: Option<QuadExt>,
    pub approx: f64,
    pub source: IrrepSource,
    pub dim: usize,
}

impl FormalCodegree {
    pub fn is_positive(&self) -> bool {
        match &self.exact {
            Some(q) => q.is_positive(),
            None => self.approx > 0.0,
        }
    }
}

/// Formal codegrees of a ring with the pseudo-unitarity test
/// `Σ 1/f² ≤ ½(1 + 1/FPdim(R))`.
#[derive(Clone, Debug)]
pub struct CodegreeReport {
    pub ring: Arc<FusionRing>,
    /// Sorted by decimal value, descending.
    pub codegrees: Vec<FormalCodegree>,
    pub sum_inverse_squares: Option<QuadExt>,
    pub sum_inverse_squares_approx: f64,
    pub fpdim: Option<QuadExt>,
    pub pseudo_unitary_bound_exact: Option<QuadExt>,
    pub pseudo_unitary_bound: f64,
    pub verdict: bool,
}

impl CodegreeReport {
    /// `Σ dim²` over the irreps; equals the rank when the list is complete.
    pub fn dimension_count(&self) -> usize {
        self.codegrees.iter().map(|f| f.dim * f.dim).sum()
    }

    /// Eigenvalues of `[c(1)]` implied by the codegrees: `f·dim` with multiplicity `dim²`.
    pub fn predicted_spectrum(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for f in &self.codegrees {
            let v = f.approx * f.dim as f64;
            match out.iter_mut().find(|(w, _)| (w - v).abs() <= crate::casimir::SPECTRUM_CLUSTER_TOLERANCE) {
                Some((_, m)) => *m += f.dim * f.dim,
                None => out.push((v, f.dim * f.dim)),
            }
        }
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }
}

/// Certifies that an integer is an eigenvalue of `[c(1)]` by an exact determinant.
struct EigenCertifier {
    lc1: IntMatrix,
    cache: HashMap<BigInt, bool>,
}

impl EigenCertifier {
    fn new(ring: &FusionRing) -> Self {
        EigenCertifier {
            lc1: ring.left_mult_matrix(&casimir_element(ring)),
            cache: HashMap::new(),
        }
    }

    fn is_eigenvalue(&mut self, lambda: &BigInt) -> bool {
        if let Some(&hit) = self.cache.get(lambda) {
            return hit;
        }
        let r = self.lc1.rows();
        let mut shifted = self.lc1.clone();
        for i in 0..r {
            let v = shifted.get(i, i) - lambda;
            shifted.set(i, i, v);
        }
        let hit = shifted.det_exact().expect("square").is_zero();
        self.cache.insert(lambda.clone(), hit);
        hit
    }

    /// Rounds a numeric eigenvalue to the nearest integer and certifies it.
    fn snap(&mut self, lambda: f64) -> Option<BigInt> {
        let rounded = lambda.round();
        if (lambda - rounded).abs() > SCALAR_TOLERANCE || !rounded.is_finite() {
            return None;
        }
        let k = BigInt::from(rounded as i128);
        self.is_eigenvalue(&k).then_some(k)
    }
}

fn source_of(rep: &Representation, index: usize) -> IrrepSource {
    match rep.exact_tag() {
        Some(tag) => IrrepSource::Explicit(tag.clone()),
        None => IrrepSource::Unlabelled(index),
    }
}

fn codegree_with(
    rep: &Representation,
    index: usize,
    radicand: &BigInt,
    certifier: &mut EigenCertifier,
) -> Result<FormalCodegree, RepError> {
    let ring = rep.ring();
    let c1 = casimir_element(ring);
    if let Some(values) = rep.exact_values() {
        // exact path: ρ(c(1)) evaluated in Q(√D)
        let mut lambda = QuadExt::zero(values[0].radicand().clone());
        for (k, c) in c1.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let term = values[k].scale(&BigRational::from_integer(c.clone()));
                lambda = lambda.try_add(&term)?;
            }
        }
        return Ok(FormalCodegree {
            approx: lambda.to_f64(),
            exact: Some(lambda),
            source: source_of(rep, index),
            dim: 1,
        });
    }
    let m = rep.act_integral(c1.coeffs());
    let d = rep.dim();
    let lambda = m.trace() / d as f64;
    let deviation = (&m - DMatrix::identity(d, d) * lambda).camax();
    if deviation > SCALAR_TOLERANCE || lambda.im.abs() > SCALAR_TOLERANCE {
        return Err(RepError::NotScalar { deviation: deviation.max(lambda.im.abs()) });
    }
    let exact = certifier.snap(lambda.re).map(|k| {
        QuadExt::rational(BigRational::new(k, BigInt::from(d)), radicand.clone())
    });
    Ok(FormalCodegree {
        exact,
        approx: lambda.re / d as f64,
        source: source_of(rep, index),
        dim: d,
    })
}

/// The scalar by which `c(1)` acts on an irreducible representation, divided by its dimension.
///
/// The radicand of the exact value is taken from the representation's exact
/// data, falling back to `1` (rational values only).
pub fn formal_codegree(rep: &Representation) -> Result<FormalCodegree, RepError> {
    let radicand = rep
        .exact_values()
        .map(|v| v[0].radicand().clone())
        .unwrap_or_else(BigInt::one);
    let mut certifier = EigenCertifier::new(rep.ring());
    codegree_with(rep, 0, &radicand, &mut certifier)
}

/// `α_φ = Σ_i Tr φ(x_i)·x_i*` as a coefficient vector.
pub fn alpha_element(rep: &Representation) -> Vec<Complex64> {
    let ring = rep.ring();
    let mut alpha = vec![Complex64::zero(); ring.rank()];
    for i in 0..ring.rank() {
        alpha[ring.dual(i)] = rep.trace(i);
    }
    alpha
}

fn sort_desc(codegrees: &mut [FormalCodegree]) {
    codegrees.sort_by(|a, b| match (&a.exact, &b.exact) {
        (Some(x), Some(y)) if x.radicand() == y.radicand() => {
            y.try_cmp(x).expect("common radicand")
        }
        _ => b.approx.partial_cmp(&a.approx).unwrap_or(Ordering::Equal),
    });
}

fn inverse_square_sum(codegrees: &[FormalCodegree], radicand: &BigInt) -> Option<QuadExt> {
    let mut sum = QuadExt::zero(radicand.clone());
    for f in codegrees {
        let x = f.exact.as_ref()?;
        let inv = x.try_mul(x).ok()?.inverse().ok()?;
        sum = sum.try_add(&inv).ok()?;
    }
    Some(sum)
}

/// Codegree report for `HI_{Z_n}` from its explicit irreducible representations.
pub fn codegree_report(n: usize) -> CodegreeReport {
    codegree_report_on(&Arc::new(hi_cyclic(n)), n).expect("HI_Z_n representations verify")
}

/// Like [`codegree_report`] but on a caller-supplied ring that should be
/// `HI_{Z_n}`. Each representation is checked against the ring first.
pub fn codegree_report_on(ring: &Arc<FusionRing>, n: usize) -> Result<CodegreeReport, RepError> {
    let radicand = BigInt::from(n * n + 4);
    let reps = hi_irreps_on(ring, n);
    let mut certifier = EigenCertifier::new(ring);
    let mut codegrees = Vec::with_capacity(reps.len());
    let mut fpdim = None;
    for (index, rep) in reps.iter().enumerate() {
        let residual = verify_representation(rep);
        if residual > RESIDUAL_TOLERANCE {
            return Err(RepError::Unverified { index, residual });
        }
        // the Frobenius-Perron character is the one-dimensional rep with all values ≥ 1
        if let Some(values) = rep.exact_values() {
            let one = QuadExt::one(radicand.clone());
            if values.iter().all(|v| v.try_cmp(&one).is_ok_and(|o| o != Ordering::Less)) {
                let mut total = QuadExt::zero(radicand.clone());
                for v in values {
                    total = total.try_add(&v.try_mul(v)?)?;
                }
                fpdim = Some(total);
            }
        }
        codegrees.push(codegree_with(rep, index, &radicand, &mut certifier)?);
    }
    sort_desc(&mut codegrees);
    let fpdim = fpdim.ok_or(RepError::Precondition("no Frobenius-Perron character".into()))?;
    let sum = inverse_square_sum(&codegrees, &radicand);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let bound = QuadExt::one(radicand.clone())
        .try_add(&fpdim.inverse()?)?
        .scale(&half);
    let (verdict, sum_approx) = match &sum {
        Some(s) => (s.try_cmp(&bound)? != Ordering::Greater, s.to_f64()),
        None => {
            let approx: f64 = codegrees.iter().map(|f| f.approx.powi(-2)).sum();
            (approx <= bound.to_f64(), approx)
        }
    };
    Ok(CodegreeReport {
        ring: ring.clone(),
        codegrees,
        sum_inverse_squares: sum,
        sum_inverse_squares_approx: sum_approx,
        pseudo_unitary_bound: bound.to_f64(),
        pseudo_unitary_bound_exact: Some(bound),
        fpdim: Some(fpdim),
        verdict,
    })
}

fn real_matrix(rows: &[Vec<f64>]) -> DMatrix<Complex64> {
    let r = rows.len();
    DMatrix::from_fn(r, r, |i, j| Complex64::new(rows[i][j], 0.0))
}

/// Codegrees of a commutative ring from its characters.
///
/// A random Hermitian combination `Σ w_i L_{x_i}` with `w_{i*} = conj(w_i)`
/// commutes with every `L_{x_i}`, so its eigenvectors are simultaneous
/// eigenvectors; `χ(x_i) = v*·L_{x_i}·v`. The draw is repeated if two
/// eigenvalues come closer than [`SEPARATION_TOLERANCE`].
pub fn commutative_codegrees(ring: &Arc<FusionRing>) -> Result<CodegreeReport, RepError> {
    commutative_codegrees_with(ring, DEFAULT_PRECISION)
}

/// [`commutative_codegrees`] with the Frobenius-Perron dimension computed to `precision`.
pub fn commutative_codegrees_with(ring: &Arc<FusionRing>, precision: f64) -> Result<CodegreeReport, RepError> {
    if !ring.is_commutative() {
        return Err(RepError::NotCommutative);
    }
    let r = ring.rank();
    let lefts: Vec<DMatrix<Complex64>> =
        (0..r).map(|i| real_matrix(&ring.basis_left_mult_f64(i))).collect();
    let mut eigen = None;
    for draw in 0..MAX_DRAWS {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + draw);
        let mut w = vec![Complex64::zero(); r];
        for i in 0..r {
            let j = ring.dual(i);
            if j < i {
                continue;
            }
            if j == i {
                w[i] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
            } else {
                w[i] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                w[j] = w[i].conj();
            }
        }
        let mut h = DMatrix::<Complex64>::zeros(r, r);
        for (wi, l) in w.iter().zip(&lefts) {
            h += l * *wi;
        }
        let e = SymmetricEigen::new(h);
        let mut vals: Vec<f64> = e.eigenvalues.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        let gap = vals.windows(2).map(|p| p[1] - p[0]).fold(f64::INFINITY, f64::min);
        if gap >= SEPARATION_TOLERANCE {
            eigen = Some(e);
            break;
        }
    }
    let eigen = eigen.ok_or(RepError::Degenerate)?;
    let mut certifier = EigenCertifier::new(ring);
    let radicand = BigInt::one();
    let mut codegrees = Vec::with_capacity(r);
    for (idx, v) in eigen.eigenvectors.column_iter().enumerate() {
        let chi: Vec<Complex64> = lefts
            .iter()
            .map(|l| (v.adjoint() * l * v)[(0, 0)])
            .collect();
        let f: Complex64 = (0..r).map(|i| chi[i] * chi[ring.dual(i)]).sum();
        let exact = certifier
            .snap(f.re)
            .filter(|_| f.im.abs() <= SCALAR_TOLERANCE)
            .map(|k| QuadExt::integer(k, radicand.clone()));
        codegrees.push(FormalCodegree {
            exact,
            approx: f.re,
            source: IrrepSource::Character(idx),
            dim: 1,
        });
    }
    sort_desc(&mut codegrees);
    let sum = inverse_square_sum(&codegrees, &radicand);
    let sum_approx = match &sum {
        Some(s) => s.to_f64(),
        None => codegrees.iter().map(|f| f.approx.powi(-2)).sum(),
    };
    let fp = fpdim_ring_with(ring, precision).value;
    let bound = 0.5 * (1.0 + 1.0 / fp);
    Ok(CodegreeReport {
        ring: ring.clone(),
        codegrees,
        sum_inverse_squares: sum,
        sum_inverse_squares_approx: sum_approx,
        fpdim: None,
        pseudo_unitary_bound_exact: None,
        pseudo_unitary_bound: bound,
        verdict: sum_approx <= bound,
    })
}

/// Codegrees that can be the global dimension of a categorification of `HI_{Z_n}`:
/// some Galois conjugate is at least the rank `2n`, and the value is not `2n`.
pub fn global_dimension_candidates(n: usize) -> Result<Vec<FormalCodegree>, RepError> {
    if n < 3 {
        return Err(RepError::Precondition(format!("needs n >= 3, got {n}")));
    }
    let report = codegree_report(n);
    let rank = QuadExt::integer(2 * n, BigInt::from(n * n + 4));
    let mut out = Vec::new();
    for f in report.codegrees {
        let x = f.exact.clone().ok_or(RepError::Precondition("inexact codegree".into()))?;
        let big_enough = x.try_cmp(&rank)? != Ordering::Less
            || x.galois_conjugate().try_cmp(&rank)? != Ordering::Less;
        if big_enough && x != rank {
            out.push(f);
        }
    }
    Ok(out)
}

/// A simple summand of the induced object, with its dimension and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionComponent {
    pub label: String,
    pub dim: QuadExt,
    pub multiplicity: usize,
}

/// Dimensions of the summands of `I(1)` for a chosen global dimension.
pub fn induction_dims(n: usize, chosen_dim: &QuadExt) -> Result<Vec<InductionComponent>, RepError> {
    let candidates = global_dimension_candidates(n)?;
    if !candidates.iter().any(|f| f.exact.as_ref() == Some(chosen_dim)) {
        return Err(RepError::Precondition(format!(
            "{} is not a global dimension candidate for n = {n}",
            chosen_dim.pretty()
        )));
    }
    let d = chosen_dim.radicand().clone();
    let int = |k: usize| QuadExt::integer(k, d.clone());
    let mut out = vec![
        InductionComponent {
            label: "1".into(),
            dim: int(1),
            multiplicity: 1,
        },
        InductionComponent {
            label: "X_1".into(),
            dim: chosen_dim.try_div(&chosen_dim.galois_conjugate())?,
            multiplicity: 1,
        },
    ];
    let z_count = if n % 2 == 1 {
        (n - 1) / 2
    } else {
        for w in ["W_1", "W_2"] {
            out.push(InductionComponent {
                label: w.into(),
                dim: chosen_dim.try_div(&int(2 * n))?,
                multiplicity: 1,
            });
        }
        (n - 2) / 2
    };
    for j in 1..=z_count {
        out.push(InductionComponent {
            label: format!("Z_{j}"),
            dim: chosen_dim.try_div(&int(n))?,
            multiplicity: 2,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{hi_one_dim_reps, hi_two_dim_reps};

    fn q(a: i64, b: i64, den: i64, d: i64) -> QuadExt {
        QuadExt::from_ints(a, b, den, d)
    }

    #[test]
    fn two_dim_codegree_is_n() {
        for n in [3, 5, 7] {
            for rep in hi_two_dim_reps(n) {
                let f = formal_codegree(&rep).unwrap();
                assert_eq!(f.exact.unwrap().as_rational().unwrap(), &BigRational::from_integer(n.into()));
                assert_eq!(f.dim, 2);
            }
        }
    }

    #[test]
    fn fp_character_codegree() {
        let rep = &hi_one_dim_reps(3)[0];
        assert_eq!(formal_codegree(rep).unwrap().exact.unwrap(), q(39, 9, 2, 13));
    }

    #[test]
    fn sign_characters_at_even_n() {
        for rep in &hi_one_dim_reps(4)[2..] {
            assert_eq!(formal_codegree(rep).unwrap().exact.unwrap(), QuadExt::integer(8, 20.into()));
        }
    }

    #[test]
    fn non_scalar_casimir_is_rejected() {
        let rep = &hi_two_dim_reps(3)[0];
        let bad = rep.with_matrix(3, DMatrix::identity(2, 2));
        assert!(matches!(formal_codegree(&bad), Err(RepError::NotScalar { .. })));
    }

    #[test]
    fn alpha_of_v1_at_three() {
        let rep = &hi_two_dim_reps(3)[0];
        let alpha = alpha_element(rep);
        let expected = [2.0, -1.0, -1.0, 0.0, 0.0, 0.0];
        for (a, e) in alpha.iter().zip(expected) {
            assert!((a - Complex64::new(e, 0.0)).norm() < 1e-12);
        }
        let on_self = rep.act(&alpha);
        assert!((on_self - DMatrix::identity(2, 2) * Complex64::new(3.0, 0.0)).camax() < 1e-8);
        for other in hi_one_dim_reps(3) {
            assert!(other.act(&alpha).camax() < 1e-8);
        }
    }

    #[test]
    fn alpha_of_fp_character_at_one() {
        let rep = &hi_one_dim_reps(1)[0];
        let v = rep.act(&alpha_element(rep))[(0, 0)];
        assert!((v.re - (5.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn report_at_three() {
        let rep = codegree_report(3);
        let exact: Vec<QuadExt> = rep.codegrees.iter().map(|f| f.exact.clone().unwrap()).collect();
        assert_eq!(exact, vec![q(39, 9, 2, 13), q(39, -9, 2, 13), q(3, 0, 1, 13)]);
        assert_eq!(rep.sum_inverse_squares.clone().unwrap(), q(8, 0, 39, 13));
        assert!(rep.verdict);
        assert_eq!(rep.dimension_count(), 6);
    }

    #[test]
    fn report_at_two() {
        let rep = codegree_report(2);
        let exact: Vec<QuadExt> = rep.codegrees.iter().map(|f| f.exact.clone().unwrap()).collect();
        assert_eq!(exact, vec![q(8, 2, 1, 8), q(4, 0, 1, 8), q(4, 0, 1, 8), q(8, -2, 1, 8)]);
    }

    #[test]
    fn report_at_one_holds() {
        // Σ1/f² = 3/5 against ½(1 + 2/(5+√5)) ≈ 0.638
        let rep = codegree_report(1);
        assert_eq!(rep.sum_inverse_squares.clone().unwrap(), q(3, 0, 5, 5));
        assert_eq!(rep.pseudo_unitary_bound_exact.clone().unwrap(), q(15, -1, 20, 5));
        assert!((rep.pseudo_unitary_bound - 0.638_196_601_1).abs() < 1e-9);
        assert!(rep.verdict);
    }

    #[test]
    fn commutative_paths() {
        let ring = Arc::new(hi_cyclic(1));
        let rep = commutative_codegrees(&ring).unwrap();
        let s5 = 5f64.sqrt();
        assert!((rep.codegrees[0].approx - (5.0 + s5) / 2.0).abs() < 1e-8);
        assert!((rep.codegrees[1].approx - (5.0 - s5) / 2.0).abs() < 1e-8);

        let ring = Arc::new(hi_cyclic(2));
        let rep = commutative_codegrees(&ring).unwrap();
        let s2 = 2f64.sqrt();
        let expected = [8.0 + 4.0 * s2, 4.0, 4.0, 8.0 - 4.0 * s2];
        for (f, e) in rep.codegrees.iter().zip(expected) {
            assert!((f.approx - e).abs() < 1e-8);
        }
        assert!(matches!(
            commutative_codegrees(&Arc::new(hi_cyclic(3))),
            Err(RepError::NotCommutative)
        ));
    }

    #[test]
    fn candidates() {
        let c = global_dimension_candidates(3).unwrap();
        let exact: Vec<QuadExt> = c.into_iter().map(|f| f.exact.unwrap()).collect();
        assert_eq!(exact, vec![q(39, 9, 2, 13), q(39, -9, 2, 13)]);
        assert_eq!(global_dimension_candidates(4).unwrap().len(), 2);
        assert!(global_dimension_candidates(2).is_err());
    }

    #[test]
    fn induction_at_three() {
        let dim = q(39, 9, 2, 13);
        let comps = induction_dims(3, &dim).unwrap();
        assert_eq!(comps[0].dim, QuadExt::one(13.into()));
        assert_eq!(comps[1].dim, q(11, 3, 2, 13));
        assert_eq!(comps[2].dim, q(13, 3, 2, 13));
        assert_eq!(comps[2].multiplicity, 2);
        let mut total = QuadExt::zero(13.into());
        for c in &comps {
            total = total
                .try_add(&c.dim.scale(&BigRational::from_integer(c.multiplicity.into())))
                .unwrap();
        }
        assert_eq!(total, dim);
        assert!(induction_dims(3, &q(3, 0, 1, 13)).is_err());
    }
}
