//! Exhaustive field axioms and Frobenius identities for every field of order at most 64.

use polydec_core::{Felt, Field};

fn small_fields() -> Vec<Field> {
    let mut out = Vec::new();
    for p in [
        2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    ] {
        let mut e = 1;
        while p.pow(e as u32) <= 64 {
            out.push(Field::gf(p, e).unwrap());
            e += 1;
        }
    }
    out
}

#[test]
fn axioms_hold_exhaustively() {
    for k in small_fields() {
        let all: Vec<Felt> = k.elements().collect();
        let (zero, one) = (k.zero(), k.one());
        for a in &all {
            assert_eq!(a + &zero, *a);
            assert_eq!(a * &one, *a);
            assert!((a + &-a.clone()).is_zero());
            if !a.is_zero() {
                assert!((a * &a.inv().unwrap()).is_one(), "{a} in {k}");
            }
            for b in &all {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in &all {
                    assert_eq!(&(a + b) + c, a + &(b + c));
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
        }
    }
}

#[test]
fn frobenius_identities() {
    for k in small_fields() {
        let e = k.degree();
        for a in k.elements() {
            assert_eq!(a.frobenius(e), a, "{a} in {k}");
            assert_eq!(a.frobenius(1), a.pow(k.p() as u128));
            assert_eq!(a.frobenius(1).pth_root(), a);
            assert_eq!(a.pth_root().frobenius(1), a);
        }
    }
}

#[test]
fn towers_embed_consistently() {
    let f4 = Field::gf(2, 2).unwrap();
    let x = polydec_core::Poly::x(&f4);
    let modulus = (&x.pow(2) + &x) + polydec_core::Poly::constant(&f4.generator().unwrap());
    let k = Field::extension(&f4, &modulus).unwrap();
    assert_eq!(k.order(), Some(16));
    for a in f4.elements() {
        for b in f4.elements() {
            let (ea, eb) = (k.embed(&a).unwrap(), k.embed(&b).unwrap());
            assert_eq!(k.embed(&(&a * &b)).unwrap(), &ea * &eb);
            assert_eq!(k.embed(&(&a + &b)).unwrap(), &ea + &eb);
            assert_eq!(ea.restrict(&f4), Some(a.clone()));
        }
    }
}
