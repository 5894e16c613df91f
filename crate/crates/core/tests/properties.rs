use std::cmp::Ordering;

use casimir_kit::casimir::{casimir_apply, casimir_spectrum, is_central};
use casimir_kit::fusion::{fpdim_basis, FusionRing, RingElement};
use casimir_kit::hi::hi_cyclic;
use casimir_kit::linalg::{IntMatrix, QuadExt};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = entries.chunks(cols).take(rows).map(|c| c.to_vec()).collect();
    IntMatrix::from_rows(&rows)
}

fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

/// Applies a sequence of elementary column operations to build a unimodular matrix.
fn unimodular(size: usize, ops: &[(usize, usize, i64, bool)]) -> IntMatrix {
    let mut u: Vec<Vec<i64>> = (0..size).map(|i| (0..size).map(|j| i64::from(i == j)).collect()).collect();
    for &(a, b, k, swap) in ops {
        let (a, b) = (a % size, b % size);
        if swap {
            for row in u.iter_mut() {
                row.swap(a, b);
            }
        } else if a != b {
            for row in u.iter_mut() {
                row[a] += k * row[b];
            }
        }
    }
    IntMatrix::from_rows(&u)
}

fn ring_element<'r>(ring: &'r FusionRing, coeffs: &[i64]) -> RingElement<'r> {
    ring.element_from_i64(&coeffs[..ring.rank()]).unwrap()
}

/// `⌊√D·10^50⌋`, so `x·10^50` is known to within `|b|` units.
fn scaled(a: i64, b: i64, d: u32) -> BigInt {
    let ten50 = BigInt::from(10).pow(50);
    let root = (BigInt::from(d) * &ten50 * &ten50).sqrt();
    BigInt::from(a) * &ten50 + BigInt::from(b) * root
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn bareiss_matches_cofactor_expansion(entries in prop::collection::vec(-5i64..=5, 16)) {
        let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        let m = IntMatrix::from_rows(&rows);
        prop_assert_eq!(m.det_exact().unwrap(), BigInt::from(cofactor_det(&rows)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hnf_is_invariant_under_unimodular_column_operations(
        entries in prop::collection::vec(-6i64..=6, 12),
        ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3, any::<bool>()), 0..12),
    ) {
        let a = matrix(3, 4, &entries);
        let u = unimodular(4, &ops);
        prop_assert_eq!(a.hnf(), a.mul(&u).unwrap().hnf());
    }

    #[test]
    fn quad_order_agrees_with_fifty_digit_decimals(
        a in -50i64..50, b in -50i64..50, c in -50i64..50, e in -50i64..50, d in 2u32..200,
    ) {
        let x = QuadExt::from_ints(a, b, 1, i64::from(d));
        let y = QuadExt::from_ints(c, e, 1, i64::from(d));
        let exact = x.try_cmp(&y).unwrap();
        let diff = scaled(a, b, d) - scaled(c, e, d);
        // truncation error is below |b| + |e| units of 10^-50
        if diff.abs() > BigInt::from(b.abs() + e.abs() + 1) {
            prop_assert_eq!(exact, diff.sign().cmp(&num_bigint::Sign::NoSign));
        } else {
            prop_assert_eq!(exact, Ordering::Equal);
        }
    }

    #[test]
    fn galois_conjugation_is_a_ring_homomorphism(
        p in (-20i64..20, -20i64..20, 1i64..6),
        q in (-20i64..20, -20i64..20, 1i64..6),
        d in 2i64..60,
    ) {
        let x = QuadExt::from_ints(p.0, p.1, p.2, d);
        let y = QuadExt::from_ints(q.0, q.1, q.2, d);
        prop_assert_eq!(
            x.try_mul(&y).unwrap().galois_conjugate(),
            x.galois_conjugate().try_mul(&y.galois_conjugate()).unwrap()
        );
        prop_assert_eq!(
            x.try_add(&y).unwrap().galois_conjugate(),
            x.galois_conjugate().try_add(&y.galois_conjugate()).unwrap()
        );
        prop_assert_eq!(x.galois_conjugate().galois_conjugate(), x.clone());
        prop_assert_eq!(x.norm(), x.try_mul(&x.galois_conjugate()).unwrap().rational_part().clone());
    }

    #[test]
    fn dual_reverses_products(
        n in 1usize..7,
        a in prop::collection::vec(-4i64..=4, 12),
        b in prop::collection::vec(-4i64..=4, 12),
    ) {
        let ring = hi_cyclic(n);
        let (x, y) = (ring_element(&ring, &a), ring_element(&ring, &b));
        let lhs = x.multiply(&y).unwrap().dual();
        let rhs = y.dual().multiply(&x.dual()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn casimir_operator_is_additive_and_central(
        n in 1usize..7,
        a in prop::collection::vec(-4i64..=4, 12),
        b in prop::collection::vec(-4i64..=4, 12),
        k in -5i64..=5,
    ) {
        let ring = hi_cyclic(n);
        let (x, y) = (ring_element(&ring, &a), ring_element(&ring, &b));
        let sum = casimir_apply(&x.add(&y).unwrap());
        prop_assert_eq!(sum, casimir_apply(&x).add(&casimir_apply(&y)).unwrap());
        let k = BigInt::from(k);
        prop_assert_eq!(casimir_apply(&x.scale(&k)), casimir_apply(&x).scale(&k));
        prop_assert!(is_central(&casimir_apply(&x)));
    }
}

#[test]
fn fpdim_is_multiplicative_on_basis() {
    for n in 1..=6 {
        let ring = hi_cyclic(n);
        let dims: Vec<f64> = (0..ring.rank()).map(|j| fpdim_basis(&ring, j).value).collect();
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                let rhs: f64 = ring
                    .product_terms(i, j)
                    .iter()
                    .map(|(k, c)| c.to_string().parse::<f64>().unwrap() * dims[*k])
                    .sum();
                assert!((dims[i] * dims[j] - rhs).abs() < 1e-9 * rhs.max(1.0), "n={n} ({i},{j})");
            }
        }
    }
}

#[test]
fn casimir_element_is_positive_definite() {
    for n in 1..=12 {
        let spectrum = casimir_spectrum(&hi_cyclic(n)).unwrap();
        assert!(spectrum.iter().all(|c| c.value > 0.0), "n={n}");
    }
}

#[test]
fn quad_order_is_total_on_rationals() {
    let half = QuadExt::rational(BigRational::new(1.into(), 2.into()), 5.into());
    let third = QuadExt::rational(BigRational::new(1.into(), 3.into()), 5.into());
    assert_eq!(half.try_cmp(&third).unwrap(), Ordering::Greater);
}
