//! Frobenius–Perron dimensions with Collatz–Wielandt enclosures.

use super::FusionRing;

/// Default absolute error target for Perron eigenvalues.
pub const DEFAULT_PRECISION: f64 = 1e-12;

const MAX_ITERATIONS: usize = 20_000;

/// A real number known to lie in `[lower, upper]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Enclosure {
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
}

impl Enclosure {
    pub fn error_bound(&self) -> f64 {
        (self.upper - self.value).max(self.value - self.lower)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Collatz–Wielandt bounds `min (Mv)_i/v_i ≤ ρ(M) ≤ max (Mv)_i/v_i` for `v > 0`.
fn collatz_wielandt(m: &[Vec<f64>], v: &[f64]) -> Option<(f64, f64)> {
    if v.iter().any(|&x| !x.is_finite() || x <= 0.0) {
        return None;
    }
    let mv = mat_vec(m, v);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for (a, b) in mv.iter().zip(v) {
        let q = a / b;
        lo = lo.min(q);
        hi = hi.max(q);
    }
    Some((lo, hi))
}

fn normalize(v: &mut [f64]) {
    let max = v.iter().cloned().fold(0.0, f64::max);
    if max > 0.0 {
        v.iter_mut().for_each(|x| *x /= max);
    }
}

fn enclose(lo: f64, hi: f64) -> Enclosure {
    Enclosure {
        value: 0.5 * (lo + hi),
        lower: lo,
        upper: hi,
    }
}

/// Power iteration `v ← (I + M)v` from the all-ones vector, stopping once the
/// Collatz–Wielandt interval of `M` is narrower than `2·tol`.
fn shifted_power_iteration(m: &[Vec<f64>], start: Vec<f64>, tol: f64) -> Option<Enclosure> {
    let mut v = start;
    for _ in 0..MAX_ITERATIONS {
        let (lo, hi) = collatz_wielandt(m, &v)?;
        if hi - lo <= 2.0 * tol {
            return Some(enclose(lo, hi));
        }
        let mv = mat_vec(m, &v);
        v = v.iter().zip(&mv).map(|(a, b)| a + b).collect();
        normalize(&mut v);
    }
    None
}

/// The common positive eigenvector of all left-multiplication matrices.
///
/// `Σ_j L_{x_j}` is entrywise positive for a fusion ring, so the shifted power
/// iteration on it converges to the Frobenius–Perron dimension vector.
fn perron_vector(ring: &FusionRing, tol: f64) -> Vec<f64> {
    let r = ring.rank();
    let mut total = vec![vec![0.0; r]; r];
    for i in 0..r {
        let l = ring.basis_left_mult_f64(i);
        for (row, lrow) in total.iter_mut().zip(&l) {
            row.iter_mut().zip(lrow).for_each(|(a, b)| *a += b);
        }
    }
    let mut v = vec![1.0; r];
    for _ in 0..MAX_ITERATIONS {
        let mv = mat_vec(&total, &v);
        let mut next: Vec<f64> = v.iter().zip(&mv).map(|(a, b)| a + b).collect();
        normalize(&mut next);
        let delta = next
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        v = next;
        if delta <= tol * 1e-3 {
            break;
        }
    }
    v
}

/// Perron–Frobenius eigenvalue of `L_{x_j}` with a certified enclosure.
pub fn fpdim_basis(ring: &FusionRing, j: usize) -> Enclosure {
    fpdim_basis_with(ring, j, DEFAULT_PRECISION)
}

pub fn fpdim_basis_with(ring: &FusionRing, j: usize, tol: f64) -> Enclosure {
    let m = ring.basis_left_mult_f64(j);
    if let Some(e) = shifted_power_iteration(&m, vec![1.0; ring.rank()], tol) {
        return e;
    }
    // A reducible L_{x_j} can stall the interval; restart from the joint
    // Perron vector, which is an eigenvector of every L_{x_j}.
    let v = perron_vector(ring, tol);
    shifted_power_iteration(&m, v.clone(), tol).unwrap_or_else(|| {
        let (lo, hi) = collatz_wielandt(&m, &v).unwrap_or((f64::NAN, f64::NAN));
        enclose(lo, hi)
    })
}

/// `Σ_j FPdim(x_j)²` with the enclosure propagated from each term.
pub fn fpdim_ring(ring: &FusionRing) -> Enclosure {
    fpdim_ring_with(ring, DEFAULT_PRECISION)
}

pub fn fpdim_ring_with(ring: &FusionRing, tol: f64) -> Enclosure {
    let (mut lo, mut hi) = (0.0, 0.0);
    for j in 0..ring.rank() {
        let e = fpdim_basis_with(ring, j, tol);
        lo += e.lower * e.lower;
        hi += e.upper * e.upper;
    }
    enclose(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn yang_lee() -> FusionRing {
        let t = [[[1, 0], [0, 1]], [[0, 1], [1, 1]]];
        FusionRing::from_fn(vec!["1".into(), "X".into()], 0, vec![0, 1], |i, j, k| {
            BigInt::from(t[i][j][k])
        })
        .unwrap()
    }

    #[test]
    fn golden_ratio() {
        let e = fpdim_basis(&yang_lee(), 1);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(e.contains(phi) || (e.value - phi).abs() < 1e-14);
        assert!(e.error_bound() <= 1e-12);
        let unit = fpdim_basis(&yang_lee(), 0);
        assert_eq!(unit.value, 1.0);
    }

    #[test]
    fn ring_dimension() {
        let e = fpdim_ring(&yang_lee());
        assert!((e.value - (5.0 + 5f64.sqrt()) / 2.0).abs() < 1e-11);
    }

    #[test]
    fn reducible_matrix_stalls_from_all_ones() {
        // the interval stays [1, 2] until the second coordinate underflows
        let m = vec![vec![2.0, 0.0], vec![0.0, 1.0]];
        assert!(shifted_power_iteration(&m, vec![1.0, 1.0], 1e-12).is_none());
    }
}
