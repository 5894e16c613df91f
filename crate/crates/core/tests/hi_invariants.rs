use casimir_kit::casimir::{casimir_determinant, casimir_number};
use casimir_kit::fusion::FusionRing;
use casimir_kit::hi::{build_hi_ring, hi_cyclic, oracle, recognize_hi_cyclic, FiniteGroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

fn basis_word<'r>(ring: &'r FusionRing, word: &[usize]) -> casimir_kit::fusion::RingElement<'r> {
    word.iter()
        .fold(ring.one(), |acc, &i| acc.multiply(&ring.basis(i)).unwrap())
}

#[test]
fn cyclic_presentation_holds() {
    for n in 1..=9 {
        let ring = hi_cyclic(n);
        let g = 1;
        let x = n;
        // Y_1^n = 1
        if n > 1 {
            assert_eq!(basis_word(&ring, &vec![g; n]), ring.one(), "n={n}");
            // Y_1·Y_n = Y_n·Y_1^{n-1}
            let mut rhs = vec![x];
            rhs.extend(vec![g; n - 1]);
            assert_eq!(basis_word(&ring, &[g, x]), basis_word(&ring, &rhs), "n={n}");
        }
        // Y_n^2 = 1 + Σ_i Y_1^i·Y_n
        let mut expected = ring.one();
        for i in 0..n {
            let mut word = vec![g; i];
            word.push(x);
            expected = expected.add(&basis_word(&ring, &word)).unwrap();
        }
        assert_eq!(basis_word(&ring, &[x, x]), expected, "n={n}");
    }
}

#[test]
fn commutative_exactly_for_elementary_abelian_two_groups() {
    let cases = [
        (FiniteGroup::trivial(), true),
        (FiniteGroup::cyclic(2), true),
        (FiniteGroup::klein(), true),
        (FiniteGroup::cyclic(3), false),
        (FiniteGroup::cyclic(4), false),
    ];
    for (g, expected) in cases {
        let ring = build_hi_ring(&g);
        assert_eq!(ring.is_commutative(), expected, "order {}", g.order());
        assert_eq!(g.is_abelian() && g.exponent() <= 2, expected);
    }
}

#[test]
fn oracle_branches_are_consistent() {
    for n in 1..=40usize {
        let o = oracle(n);
        let full = BigInt::from(n * (n * n + 4));
        assert!(full.is_multiple_of(&o.casimir), "n={n}");
        assert!(o.determinant.is_multiple_of(&o.casimir), "n={n}");
        if n % 2 == 1 && n >= 3 {
            assert!(o.casimir.is_odd());
            assert!(o.determinant.is_even());
        }
    }
}

#[test]
fn determinant_is_divisible_by_casimir_number() {
    for n in 1..=12 {
        let ring = hi_cyclic(n);
        let c = casimir_number(&ring).unwrap();
        assert!((casimir_determinant(&ring) % c).is_zero(), "n={n}");
    }
}

#[test]
fn ring_files_round_trip_and_are_recognized() {
    for n in 1..=5 {
        let ring = hi_cyclic(n);
        let back = FusionRing::from_json(&ring.to_json()).unwrap();
        assert_eq!(back.to_json(), ring.to_json());
        assert_eq!(recognize_hi_cyclic(&back), Some(n));
    }
    let klein = build_hi_ring(&FiniteGroup::klein());
    assert_eq!(recognize_hi_cyclic(&klein), None);
}

#[test]
fn group_files_are_read() {
    let g = FiniteGroup::from_json(r#"{"cayley": [[0,1],[1,0]]}"#).unwrap();
    assert_eq!(g.order(), 2);
    assert!(FiniteGroup::from_json(r#"{"cayley": [[0,1],[0,1]]}"#).is_err());
}
