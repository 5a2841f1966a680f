use kch::laurent::LaurentPoly;
use kch::ncalg::{Derivation, Generator, HomogeneousDegree, LeibnizSign, NCMatrix, NCPoly, Word};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -2i64..=2, -2i64..=2), 0..4)
        .prop_map(|ts| ts.into_iter().fold(LaurentPoly::zero(), |p, (c, i, j)| p + LaurentPoly::monomial(c, i, j)))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

const GENS: [Generator; 5] = [
    Generator { kind: kch::ncalg::GenKind::A, i: 1, j: 2 },
    Generator { kind: kch::ncalg::GenKind::A, i: 2, j: 1 },
    Generator { kind: kch::ncalg::GenKind::B, i: 1, j: 1 },
    Generator { kind: kch::ncalg::GenKind::C, i: 1, j: 2 },
    Generator { kind: kch::ncalg::GenKind::E, i: 1, j: 0 },
];

fn ncpoly(gens: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0..gens, 0..3), -3i64..=3, -1i64..=1), 0..4).prop_map(|ts| {
        NCPoly::from_terms(
            ts.into_iter()
                .map(|(w, c, e)| (Word(w.into_iter().map(|k| GENS[k]).collect()), LaurentPoly::monomial(c, e, 0))),
        )
    })
}

fn homogeneous(deg: u32) -> impl Strategy<Value = NCPoly> {
    ncpoly(5).prop_map(move |p| {
        NCPoly::from_terms(p.terms().filter(|(w, _)| w.degree() == deg).map(|(w, c)| (w.clone(), c.clone())))
    })
}

fn derivation() -> Derivation {
    let mut d = Derivation::new(LeibnizSign::Graded);
    let a12 = NCPoly::generator(GENS[0]);
    let a21 = NCPoly::generator(GENS[1]);
    d.set(GENS[0], NCPoly::zero());
    d.set(GENS[1], NCPoly::zero());
    d.set(GENS[2], &a12 * &a21 - NCPoly::constant(LaurentPoly::mu()));
    d.set(GENS[3], a21.clone());
    d.set(GENS[4], &NCPoly::generator(GENS[2]) * &a12 - &a21 * &NCPoly::generator(GENS[3]));
    d
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let (x, y) = (&a * &c, &b * &c);
        let g = x.gcd(&y);
        prop_assert!(g.divides(&x).unwrap());
        prop_assert!(g.divides(&y).unwrap());
        prop_assert!(c.unit_normalize().unwrap().divides(&g).unwrap());
        prop_assert_eq!(g.unit_normalize().unwrap(), g);
    }

    #[test]
    fn unit_normalization(a in nonzero_laurent(), s in prop::bool::ANY, i in -3i64..=3, j in -3i64..=3) {
        let u = LaurentPoly::monomial(if s { 1 } else { -1 }, i, j);
        let n = a.unit_normalize().unwrap();
        prop_assert_eq!((&a * &u).unit_normalize().unwrap(), n.clone());
        prop_assert_eq!(n.unit_normalize().unwrap(), n);
    }

    #[test]
    fn rendering_round_trips(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), l in 1u64..7, m in 1u64..7) {
        let p = 7;
        prop_assert_eq!((&a * &b).eval_mod(p, l, m), a.eval_mod(p, l, m) * b.eval_mod(p, l, m) % p);
        prop_assert_eq!((&a + &b).eval_mod(p, l, m), (a.eval_mod(p, l, m) + b.eval_mod(p, l, m)) % p);
    }

    #[test]
    fn nc_associative_and_distributive(a in ncpoly(3), b in ncpoly(3), c in ncpoly(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn graded_leibniz(dp in 0u32..3, p in ncpoly(5), q in ncpoly(5)) {
        let p = NCPoly::from_terms(p.terms().filter(|(w, _)| w.degree() == dp).map(|(w, c)| (w.clone(), c.clone())));
        let d = derivation();
        let lhs = d.apply(&(&p * &q)).unwrap();
        let first = &d.apply(&p).unwrap() * &q;
        let second = &p * &d.apply(&q).unwrap();
        let rhs = if dp % 2 == 1 { &first - &second } else { &first + &second };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneous_degree_of_homogeneous(p in homogeneous(2)) {
        let hd = p.homogeneous_degree();
        prop_assert!(hd == HomogeneousDegree::Zero || hd == HomogeneousDegree::Homogeneous(2));
    }

    #[test]
    fn matrix_product_is_associative(es in prop::collection::vec(ncpoly(2), 27)) {
        let m = |k: usize| NCMatrix::from_fn(3, |i, j| es[k * 9 + (i - 1) * 3 + (j - 1)].clone());
        let (a, b, c) = (m(0), m(1), m(2));
        prop_assert_eq!(a.mat_mul(&b).unwrap().mat_mul(&c).unwrap(), a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap());
    }
}
