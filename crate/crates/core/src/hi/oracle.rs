use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::HiError;
use crate::linalg::QuadExt;

/// Closed-form invariants of `HI_{Z_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormOracle {
    pub n: usize,
    pub casimir: BigInt,
    pub determinant: BigInt,
    /// `FPdim(HI_{Z_n}) = n√(n²+4)·(n+√(n²+4))/2`.
    pub fpdim: QuadExt,
    /// Formal codegrees, sorted descending.
    pub codegrees: Vec<QuadExt>,
    /// `Σ 1/f² = (n²+n+4) / (2n(n²+4))`.
    pub codegree_sum: BigRational,
}

pub fn oracle(n: usize) -> ClosedFormOracle {
    assert!(n >= 1, "HI_Z_n needs n >= 1");
    let nb = BigInt::from(n);
    let d: BigInt = &nb * &nb + 4u32;
    let casimir = if n.is_multiple_of(4) {
        &nb * &d / 2
    } else {
        &nb * &d
    };
    let determinant = Pow::pow(&nb, 2 * n) * Pow::pow(BigInt::from(2), 2 * n - 2) * &d;
    let two = BigInt::from(2);
    let fpdim = QuadExt::new(
        BigRational::new(&nb * &d, two.clone()),
        BigRational::new(&nb * &nb, two),
        d.clone(),
    );
    let mut codegrees = vec![fpdim.clone(), fpdim.galois_conjugate()];
    let copies_of_n = if n % 2 == 1 {
        (n - 1) / 2
    } else {
        codegrees.push(QuadExt::integer(2 * n, d.clone()));
        codegrees.push(QuadExt::integer(2 * n, d.clone()));
        (n - 2) / 2
    };
    codegrees.extend((0..copies_of_n).map(|_| QuadExt::integer(n, d.clone())));
    codegrees.sort_by(|a, b| b.try_cmp(a).expect("common radicand"));
    let codegree_sum = BigRational::new(&nb * &nb + &nb + 4, 2 * &nb * &d);
    ClosedFormOracle {
        n,
        casimir,
        determinant,
        fpdim,
        codegrees,
        codegree_sum,
    }
}

/// Distinct prime factors by trial division.
pub fn prime_factors(x: &BigInt) -> BTreeSet<BigInt> {
    let mut out = BTreeSet::new();
    let mut rest = x.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        if rest.is_multiple_of(&p) {
            while rest.is_multiple_of(&p) {
                rest /= &p;
            }
            out.insert(p.clone());
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        out.insert(rest);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeComparison {
    pub casimir_primes: BTreeSet<BigInt>,
    pub determinant_primes: BTreeSet<BigInt>,
    /// Whether the two prime sets coincide.
    pub shared: bool,
}

/// Compares the prime divisors of the Casimir number and the determinant of `HI_{Z_n}`, `n` odd.
///
/// The determinant `n^{2n}·2^{2n-2}·(n²+4)` is factored through its three
/// factors, and the result is checked by dividing the full value out.
pub fn prime_factor_disjointness(n: usize) -> Result<PrimeComparison, HiError> {
    if n.is_multiple_of(2) {
        return Err(HiError::OddOnly("prime_factor_disjointness", n));
    }
    let o = oracle(n);
    let casimir_primes = prime_factors(&o.casimir);
    let nb = BigInt::from(n);
    let mut determinant_primes = prime_factors(&nb);
    if n > 1 {
        determinant_primes.insert(BigInt::from(2));
    }
    determinant_primes.extend(prime_factors(&(&nb * &nb + 4)));
    let mut rest = o.determinant.clone();
    for p in &determinant_primes {
        while rest.is_multiple_of(p) {
            rest /= p;
        }
    }
    debug_assert!(rest.is_one() || rest.is_zero());
    Ok(PrimeComparison {
        shared: casimir_primes == determinant_primes,
        casimir_primes,
        determinant_primes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> BTreeSet<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn haagerup_closed_forms() {
        let o = oracle(3);
        assert_eq!(o.casimir, BigInt::from(39));
        assert_eq!(o.determinant, BigInt::from(151_632));
        assert_eq!(
            o.codegrees,
            vec![
                QuadExt::from_ints(39, 9, 2, 13),
                QuadExt::from_ints(39, -9, 2, 13),
                QuadExt::from_ints(3, 0, 1, 13),
            ]
        );
        assert_eq!(o.codegree_sum, BigRational::new(8.into(), 39.into()));
    }

    #[test]
    fn even_closed_forms() {
        let o = oracle(4);
        assert_eq!(o.casimir, BigInt::from(40));
        assert_eq!(o.determinant, BigInt::from(4i64.pow(8) * 2i64.pow(6) * 20));
        assert_eq!(o.codegrees.len(), 5);
        assert_eq!(o.codegrees.iter().filter(|f| **f == QuadExt::integer(8, 20.into())).count(), 2);
        assert_eq!(oracle(6).casimir, BigInt::from(240));
        let two = oracle(2);
        assert_eq!(two.codegrees[0], QuadExt::from_ints(8, 2, 1, 8));
        assert_eq!(two.codegrees.len(), 4);
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(&BigInt::from(151_632)), set(&[2, 3, 13]));
        assert_eq!(prime_factors(&BigInt::from(1)), set(&[]));
        assert_eq!(prime_factors(&BigInt::from(97)), set(&[97]));
    }

    #[test]
    fn prime_sets() {
        let p = prime_factor_disjointness(3).unwrap();
        assert_eq!(p.casimir_primes, set(&[3, 13]));
        assert_eq!(p.determinant_primes, set(&[2, 3, 13]));
        assert!(!p.shared);

        let p = prime_factor_disjointness(1).unwrap();
        assert_eq!(p.casimir_primes, set(&[5]));
        assert!(p.shared);

        let p = prime_factor_disjointness(5).unwrap();
        assert_eq!(p.casimir_primes, set(&[5, 29]));
        assert_eq!(p.determinant_primes, set(&[2, 5, 29]));
        assert!(!p.shared);

        assert!(prime_factor_disjointness(4).is_err());
    }
}
