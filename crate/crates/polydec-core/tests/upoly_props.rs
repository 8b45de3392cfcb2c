//! Property tests for univariate polynomial arithmetic, composition and factoring.

use polydec_core::{Field, Poly};
use proptest::prelude::*;

fn field(i: usize) -> Field {
    match i {
        0 => Field::prime(2).unwrap(),
        1 => Field::prime(3).unwrap(),
        2 => Field::prime(5).unwrap(),
        _ => Field::gf(2, 2).unwrap(),
    }
}

fn build(k: &Field, idx: &[u32]) -> Poly {
    let q = k.order().unwrap();
    let c: Vec<_> = idx.iter().map(|&i| k.element(i as u128 % q)).collect();
    Poly::new(k, &c).unwrap()
}

fn monic(k: &Field, idx: &[u32]) -> Poly {
    let mut c: Vec<_> = idx.to_vec();
    c.push(0);
    let p = build(k, &c);
    &p + &Poly::monomial(&k.one(), idx.len())
}

/// Naive composition by expanding powers of the inner polynomial.
fn compose_naive(g: &Poly, h: &Poly) -> Poly {
    let k = g.field();
    let mut acc = Poly::zero(k);
    for (i, c) in g.coeffs().iter().enumerate() {
        acc = &acc + &h.pow(i).scale(c);
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divmod_round_trip(fi in 0usize..3, a in prop::collection::vec(0u32..5, 0..65),
                         b in prop::collection::vec(0u32..5, 1..30)) {
        let k = field(fi);
        let (f, g) = (build(&k, &a), build(&k, &b));
        prop_assume!(!g.is_zero());
        let (q, r) = f.divmod(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }

    #[test]
    fn right_divide_inverts_compose(fi in 0usize..4, a in prop::collection::vec(0u32..5, 1..6),
                                    b in prop::collection::vec(0u32..5, 1..5)) {
        let k = field(fi);
        let (g, h) = (monic(&k, &a), monic(&k, &b));
        let f = g.compose(&h);
        prop_assert_eq!(&f, &compose_naive(&g, &h));
        prop_assert_eq!(f.right_divide(&h).unwrap(), Some(g));
    }

    #[test]
    fn factors_reassemble(fi in 0usize..4, a in prop::collection::vec(0u32..5, 1..41), seed in 0u64..4) {
        let k = field(fi);
        let f = build(&k, &a);
        prop_assume!(!f.is_zero());
        let fac = f.factor(seed).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        for (q, _) in &fac.factors {
            prop_assert!(q.is_monic() && q.is_irreducible(), "{} is not monic irreducible", q);
        }
        prop_assert_eq!(fac, f.factor(seed).unwrap());
    }

    #[test]
    fn gcd_divides_both(fi in 0usize..3, a in prop::collection::vec(0u32..5, 1..20),
                        b in prop::collection::vec(0u32..5, 1..20), c in prop::collection::vec(0u32..5, 1..6)) {
        let k = field(fi);
        let common = monic(&k, &c);
        let (f, g) = (&build(&k, &a) * &common, &build(&k, &b) * &common);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let d = f.gcd(&g).unwrap();
        prop_assert!(d.divides(&f) && d.divides(&g) && common.divides(&d));
    }

    #[test]
    fn print_parse_round_trip(fi in 0usize..4, a in prop::collection::vec(0u32..5, 0..12)) {
        let k = field(fi);
        let f = build(&k, &a);
        prop_assert_eq!(Poly::parse(&k, &f.to_string()).unwrap(), f);
    }
}

#[test]
fn chebyshev_composition_law() {
    for p in [3, 5, 7] {
        let k = Field::prime(p).unwrap();
        for i in 0..=6 {
            for j in 0..=6 {
                let (ti, tj) = (Poly::chebyshev(i, &k), Poly::chebyshev(j, &k));
                assert_eq!(ti.compose(&tj), Poly::chebyshev(i * j, &k));
                assert_eq!(tj.compose(&ti), Poly::chebyshev(i * j, &k));
            }
        }
    }
}
