mod common;

use common::{field_mul, field_pow, is_irreducible, tower_modulus};
use proptest::prelude::*;
use qinw::gf2m::{gf_add, gf_mul, gf_pow, inner_prod_f2, FieldParams, GfElement, MAX_FIELD_BITS};
use qinw::{BitString, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f4() -> FieldParams {
    FieldParams::new(0).unwrap()
}

/// Elements of F_4 are written high coefficient first: "10" is x.
fn e4(text: &str) -> GfElement {
    f4().element(u64::from_str_radix(text, 2).unwrap()).unwrap()
}

#[test]
fn moduli() {
    let expect = [(0, 2, 0b111u64), (1, 6, 0b1001001), (2, 18, (1 << 18) | (1 << 9) | 1)];
    for (i, m, modulus) in expect {
        let f = FieldParams::new(i).unwrap();
        assert_eq!(f.m(), m);
        assert_eq!(f.modulus(), modulus);
        assert_eq!(f.modulus().count_ones(), 3);
    }
    assert_eq!(FieldParams::new(3).unwrap().m(), 54);
    assert!(matches!(FieldParams::new(4), Err(Error::FieldCapacity { .. })));
    assert!(FieldParams::with_bits(4).is_err());
    assert!(FieldParams::with_bits(MAX_FIELD_BITS).is_ok());
}

#[test]
fn moduli_are_irreducible() {
    for m in [2, 6, 18] {
        assert!(is_irreducible(&tower_modulus(m)), "m = {m}");
    }
    // x^4 + x^2 + 1 = (x^2 + x + 1)^2 does not fit the tower.
    assert!(!is_irreducible(&tower_modulus(4)));
}

#[test]
fn small_field_examples() {
    assert_eq!(gf_add(&e4("01"), &e4("01")).unwrap(), e4("00"));
    assert_eq!(gf_add(&e4("10"), &e4("11")).unwrap(), e4("01"));
    assert_eq!(gf_mul(&e4("10"), &e4("10")).unwrap(), e4("11"));
    assert_eq!(gf_mul(&e4("10"), &e4("11")).unwrap(), e4("01"));
    assert_eq!(gf_pow(&e4("10"), 3), e4("01"));
    assert_eq!(gf_pow(&e4("11"), 2), e4("10"));
    for a in 0..4 {
        let a = f4().element(a).unwrap();
        assert_eq!(gf_add(&a, &e4("00")).unwrap(), a);
        assert_eq!(gf_mul(&e4("01"), &a).unwrap(), a);
        assert_eq!(gf_pow(&a, 0), e4("01"));
    }
}

#[test]
fn mismatched_fields() {
    let a = FieldParams::new(1).unwrap().one();
    assert!(matches!(gf_mul(&a, &f4().one()), Err(Error::FieldMismatch { .. })));
    assert!(matches!(f4().element(4), Err(Error::ElementOutOfField { .. })));
}

#[test]
fn inner_product_examples() {
    let b = |s: &str| BitString::parse_bits(s).unwrap();
    assert!(!inner_prod_f2(&b("11"), &b("11")).unwrap());
    assert!(!inner_prod_f2(&b("10"), &b("01")).unwrap());
    assert!(inner_prod_f2(&b("11"), &b("01")).unwrap());
    assert!(inner_prod_f2(&b("11"), &b("011")).is_err());
}

#[test]
fn f4_axioms_and_oracle_exhaustive() {
    let f = f4();
    let el = |v| f.element(v).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(el(a).mul(&el(b)).unwrap().bits(), field_mul(2, a, b));
            assert_eq!(el(a).mul(&el(b)).unwrap(), el(b).mul(&el(a)).unwrap());
            for c in 0..4 {
                let (a, b, c) = (el(a), el(b), el(c));
                assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
                assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
                assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            }
        }
    }
    for a in 1..4 {
        assert_eq!(el(a).pow(3), f.one());
        assert_eq!(el(a).mul(&el(a).pow(2)).unwrap(), f.one());
    }
}

fn sampled_axioms(tower: u32, trials: usize, seed: u64) {
    let f = FieldParams::new(tower).unwrap();
    let m = f.m() as usize;
    let mask = (1u64 << m) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let (a, b, c) = (rng.random::<u64>() & mask, rng.random::<u64>() & mask, rng.random::<u64>() & mask);
        let (x, y, z) = (f.element(a).unwrap(), f.element(b).unwrap(), f.element(c).unwrap());
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.bits(), field_mul(m, a, b), "{a:x} * {b:x}");
        assert_eq!(xy, y.mul(&x).unwrap());
        assert_eq!(xy.mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(), xy.add(&x.mul(&z).unwrap()).unwrap());
    }
}

#[test]
fn f64_sampled_axioms_and_oracle() {
    sampled_axioms(1, 10_000, 1);
}

#[test]
fn f2_18_sampled_axioms_and_oracle() {
    sampled_axioms(2, 10_000, 2);
}

#[test]
fn f2_54_matches_oracle() {
    sampled_axioms(3, 500, 3);
}

#[test]
fn fermat_and_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for tower in [1, 2, 3] {
        let f = FieldParams::new(tower).unwrap();
        let order = (1u64 << f.m()) - 1;
        for _ in 0..1000 {
            let a = f.element(rng.random_range(1..=order)).unwrap();
            assert_eq!(a.pow(order), f.one());
            assert_eq!(a.mul(&a.pow(order - 1)).unwrap(), f.one());
        }
    }
    // F_64^* is cyclic of order 63: exactly φ(63) = 36 elements generate it.
    // (x itself has order 9, since x^9 = x^3 (x^3 + 1) = 1.)
    let f = FieldParams::new(1).unwrap();
    let order = |a: u64| (1..=63u64).find(|&k| f.element(a).unwrap().pow(k) == f.one()).unwrap();
    assert_eq!(order(2), 9);
    assert_eq!((1..64).filter(|&a| order(a) == 63).count(), 36);
}

#[test]
fn pow_matches_iterated_mul() {
    let f = FieldParams::new(1).unwrap();
    for a in 0..64 {
        for k in 0..70 {
            assert_eq!(f.element(a).unwrap().pow(k).bits(), field_pow(6, a, k));
        }
    }
}

proptest! {
    #[test]
    fn mul_matches_oracle_f2_18(a in 0u64..1 << 18, b in 0u64..1 << 18) {
        let f = FieldParams::new(2).unwrap();
        prop_assert_eq!(f.mul_raw(a, b), field_mul(18, a, b));
    }

    #[test]
    fn pow_adds_exponents(a in 0u64..1 << 18, j in 0u64..1000, k in 0u64..1000) {
        let f = FieldParams::new(2).unwrap();
        let x = f.element(a).unwrap();
        prop_assert_eq!(x.pow(j).mul(&x.pow(k)).unwrap(), x.pow(j + k));
    }

    #[test]
    fn squaring_is_additive(a in 0u64..1 << 54, b in 0u64..1 << 54) {
        let f = FieldParams::new(3).unwrap();
        prop_assert_eq!(f.square_raw(a ^ b), f.square_raw(a) ^ f.square_raw(b));
    }
}
