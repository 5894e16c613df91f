//! Haagerup–Izumi rings `HI_G` and closed-form values for `G = Z_n`.

mod group;
mod oracle;
mod sweep;

pub use group::FiniteGroup;
pub use oracle::{oracle, prime_factor_disjointness, prime_factors, ClosedFormOracle, PrimeComparison};
pub use sweep::{check_ring_against_oracle, sweep, sweep_par, Quantity, SweepRow};

use num_bigint::BigInt;
use thiserror::Error;

use crate::fusion::FusionRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HiError {
    #[error("invalid group: {0}")]
    Group(String),
    #[error("{0} requires odd n, got n = {1}")]
    OddOnly(&'static str, usize),
}

/// The ring on basis `{g} ∪ {gX}` with
/// `g·(hX) = (gh)X`, `(hX)·g⁻¹ = (gh)X` and `(gX)(hX) = gh⁻¹ + Σ_l lX`.
///
/// Group elements come first in the group's own order, followed by the
/// `X`-part in the same order. For `Z_n` this is `1, g, …, g^{n-1}, X, gX, …`.
/// The relations are only associative for abelian `G`; for other groups the
/// ring is still produced and `validate` reports the failures.
pub fn build_hi_ring(group: &FiniteGroup) -> FusionRing {
    let m = group.order();
    let e = group.identity();
    let mut labels: Vec<String> = group.labels().to_vec();
    labels.extend(group.labels().iter().enumerate().map(|(h, l)| {
        if h == e || l == "1" {
            "X".to_string()
        } else {
            format!("{l}X")
        }
    }));
    let mut dual: Vec<usize> = (0..m).map(|g| group.inv(g)).collect();
    dual.extend(m..2 * m);
    FusionRing::from_fn(labels, e, dual, |i, j, k| {
        let v = match (i < m, j < m) {
            (true, true) => u32::from(k == group.mul(i, j)),
            (true, false) => u32::from(k == m + group.mul(i, j - m)),
            // (hX)·g = (g⁻¹h)X
            (false, true) => u32::from(k == m + group.mul(group.inv(j), i - m)),
            (false, false) => {
                if k < m {
                    u32::from(k == group.mul(i - m, group.inv(j - m)))
                } else {
                    1
                }
            }
        };
        BigInt::from(v)
    })
    .expect("well-formed shapes")
}

/// `HI_{Z_n}` in the basis `Y_0 = 1, Y_1 = g, …, Y_{2n-1} = g^{n-1}X`.
pub fn hi_cyclic(n: usize) -> FusionRing {
    build_hi_ring(&FiniteGroup::cyclic(n))
}

/// Returns `n` if the ring's unit, duality and structure constants coincide
/// with those of `HI_{Z_n}` in the standard basis order.
pub fn recognize_hi_cyclic(ring: &FusionRing) -> Option<usize> {
    let r = ring.rank();
    if !r.is_multiple_of(2) || r == 0 {
        return None;
    }
    let n = r / 2;
    let reference = hi_cyclic(n);
    let same = ring.unit() == reference.unit()
        && ring.duals() == reference.duals()
        && (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| ring.n(i, j, k) == reference.n(i, j, k))));
    same.then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn haagerup_rules() {
        let ring = hi_cyclic(3);
        assert_eq!(ring.rank(), 6);
        assert_eq!(ring.labels(), ["1", "g", "g^2", "X", "gX", "g^2X"]);
        assert_eq!(ring.basis(3).pow(2).to_string(), "1 + X + gX + g^2X");
        assert_eq!(ring.basis(1).multiply(&ring.basis(3)).unwrap().to_string(), "gX");
        assert_eq!(ring.basis(3).multiply(&ring.basis(1)).unwrap().to_string(), "g^2X");
        assert!(ring.validate().is_empty());
        assert!(!ring.is_commutative());
    }

    #[test]
    fn yang_lee_from_trivial_group() {
        let ring = build_hi_ring(&FiniteGroup::trivial());
        assert_eq!(ring.rank(), 2);
        assert_eq!(ring.basis(1).pow(2).to_string(), "1 + X");
        assert!(ring.validate().is_empty());
    }

    #[test]
    fn klein_ring_is_valid() {
        let ring = build_hi_ring(&FiniteGroup::klein());
        assert_eq!(ring.rank(), 8);
        assert!(ring.validate().is_empty());
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize_hi_cyclic(&hi_cyclic(4)), Some(4));
        let bad = hi_cyclic(4).with_entry(5, 5, 6, BigInt::from(2));
        assert_eq!(recognize_hi_cyclic(&bad), None);
        assert_eq!(recognize_hi_cyclic(&build_hi_ring(&FiniteGroup::klein())), None);
    }
}
