mod common;

use std::sync::Arc;

use common::*;
use ore_hermite::degree::Degree;
use ore_hermite::detform::{ddet_degree, is_inverse_of, is_unimodular, ore_ddet_degree, ore_rank, rank, skew_inverse, SkewMatrix};
use ore_hermite::euclid::{gcld_ext, gcrd_ext};
use ore_hermite::hermite::{hermite, hermite_naive, is_hermite_shape};
use ore_hermite::text::{format_matrix, parse_matrix, parse_orepoly, parse_ratfun};
use ore_hermite::{OreMatrix, OrePoly, RatFun, Rational, RingSpec, SkewFraction, UPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rings() -> Vec<Arc<RingSpec>> {
    let q = RingSpec::q_shift(Rational::from_integer(2.into())).unwrap();
    let sigma = RatFun::new(UPoly::from_i64(&[0, 1]), UPoly::from_i64(&[1, 1])).unwrap();
    let custom = RingSpec::custom(&sigma, RatFun::from_poly(UPoly::from_i64(&[0, 0, 1]))).unwrap();
    vec![diff(), shift(), Arc::new(q), Arc::new(custom)]
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-4i64..=4, 0..=3).prop_map(|c| UPoly::from_i64(&c))
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (upoly(), upoly()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatFun::from_poly(n)
        } else {
            RatFun::new(n, d).unwrap()
        }
    })
}

fn coeffs(max_deg: usize) -> impl Strategy<Value = Vec<UPoly>> {
    prop::collection::vec(upoly(), 0..=max_deg + 1)
}

fn ore(ring: &Arc<RingSpec>, cs: &[UPoly]) -> OrePoly {
    OrePoly::new(cs.iter().cloned().map(RatFun::from_poly).collect(), ring.clone())
}

fn nonzero(cs: Vec<UPoly>) -> Vec<UPoly> {
    if cs.iter().all(UPoly::is_zero) {
        vec![UPoly::from_i64(&[1])]
    } else {
        cs
    }
}

fn ring_index() -> impl Strategy<Value = usize> {
    0usize..4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn sigma_is_a_ring_map(k in ring_index(), a in ratfun(), b in ratfun()) {
        let r = &rings()[k];
        prop_assert_eq!(r.apply_sigma(&(&a * &b)), &r.apply_sigma(&a) * &r.apply_sigma(&b));
        prop_assert_eq!(r.apply_sigma(&(&a + &b)), &r.apply_sigma(&a) + &r.apply_sigma(&b));
        prop_assert_eq!(r.apply_sigma_inv(&r.apply_sigma(&a)), a);
    }

    #[test]
    fn delta_twisted_leibniz(k in ring_index(), a in ratfun(), b in ratfun()) {
        let r = &rings()[k];
        let lhs = r.apply_delta(&(&a * &b));
        let rhs = &(&r.apply_sigma(&a) * &r.apply_delta(&b)) + &(&r.apply_delta(&a) * &b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ore_ring_laws(k in ring_index(), a in coeffs(2), b in coeffs(2), c in coeffs(1)) {
        let r = &rings()[k];
        let (a, b, c) = (ore(r, &a), ore(r, &b), ore(r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
        if let Some(x) = c.lc().and_then(|x| x.inv().ok()) {
            prop_assert_eq!(a.right_scale(&x), &a * &OrePoly::constant(x, r));
        }
    }

    #[test]
    fn division_reconstructs(k in ring_index(), a in coeffs(3), g in coeffs(2)) {
        let r = &rings()[k];
        let (a, g) = (ore(r, &a), ore(r, &nonzero(g)));
        let (q, rem) = a.right_divmod(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &rem, a.clone());
        prop_assert!(rem.degree() < g.degree());
        let (q, rem) = a.left_divmod(&g).unwrap();
        prop_assert_eq!(&(&g * &q) + &rem, a.clone());
        prop_assert!(rem.degree() < g.degree());
        let (c, q, rem) = a.right_pseudo_divmod(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &rem, a.left_scale(&c));
        prop_assert!(rem.degree() < g.degree());
        let (e, q, rem) = a.left_pseudo_divmod(&g).unwrap();
        prop_assert_eq!(&(&g * &q) + &rem, a.right_scale(&e));
        prop_assert!(rem.degree() < g.degree());
    }

    #[test]
    fn opposite_ring_reverses_products(k in ring_index(), a in coeffs(2), b in coeffs(2)) {
        let r = &rings()[k];
        let op = Arc::new(r.opposite());
        let (a, b) = (ore(r, &a), ore(r, &b));
        prop_assert_eq!(a.to_opposite(&op).to_opposite(r), a.clone());
        prop_assert_eq!((&a * &b).to_opposite(&op), &b.to_opposite(&op) * &a.to_opposite(&op));
    }

    #[test]
    fn gcrd_and_lclm(k in 0usize..2, a in coeffs(2), b in coeffs(2), f in coeffs(1)) {
        let r = &rings()[k];
        let f = ore(r, &nonzero(f));
        let a = &ore(r, &nonzero(a)) * &f;
        let b = &ore(r, &nonzero(b)) * &f;
        let cert = gcrd_ext(&a, &b).unwrap();
        prop_assert_eq!(&(&cert.u * &a) + &(&cert.v * &b), cert.g.clone());
        prop_assert!((&(&cert.s * &a) + &(&cert.t * &b)).is_zero());
        prop_assert!(cert.g.is_monic() && cert.lclm(&a).is_monic());
        prop_assert!(a.right_divmod(&cert.g).unwrap().1.is_zero());
        prop_assert!(cert.g.right_divmod(&f).unwrap().1.is_zero());
        prop_assert_eq!(cert.g.degree() + cert.lclm(&a).degree(), a.degree() + b.degree());
    }

    #[test]
    fn gcld_and_lcrm(k in 0usize..2, a in coeffs(2), b in coeffs(2), f in coeffs(1)) {
        let r = &rings()[k];
        let f = ore(r, &nonzero(f));
        let a = &f * &ore(r, &nonzero(a));
        let b = &f * &ore(r, &nonzero(b));
        let cert = gcld_ext(&a, &b).unwrap();
        prop_assert_eq!(&(&a * &cert.u) + &(&b * &cert.v), cert.g.clone());
        prop_assert_eq!(&a * &cert.s, cert.lcrm.clone());
        prop_assert_eq!(&b * &cert.t, -&cert.lcrm);
        prop_assert_eq!(&cert.g * &cert.a_cof, a.clone());
        prop_assert!(cert.g.left_divmod(&f).unwrap().1.is_zero());
        prop_assert_eq!(cert.g.degree() + cert.lcrm.degree(), a.degree() + b.degree());
    }

    #[test]
    fn fractions_embed_polynomials(k in 0usize..2, a in coeffs(2), b in coeffs(2)) {
        let r = &rings()[k];
        let (a, b) = (ore(r, &a), ore(r, &b));
        let (x, y) = (SkewFraction::from_poly(a.clone()), SkewFraction::from_poly(b.clone()));
        prop_assert_eq!(&x * &y, SkewFraction::from_poly(&a * &b));
        prop_assert_eq!(&x + &y, SkewFraction::from_poly(&a + &b));
        prop_assert_eq!((&x * &y).as_poly(), Some(&a * &b));
    }

    #[test]
    fn skew_field_laws(k in 0usize..2, f in coeffs(1), g in coeffs(1), p in coeffs(1), q in coeffs(1), s in coeffs(1)) {
        let r = &rings()[k];
        let x = SkewFraction::new(ore(r, &f), ore(r, &nonzero(g))).unwrap();
        let y = SkewFraction::new(ore(r, &nonzero(p)), ore(r, &nonzero(q))).unwrap();
        let z = SkewFraction::from_poly(ore(r, &s));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).deg(), x.deg() + y.deg());
        prop_assert!((&x + &y).deg() <= x.deg().max(y.deg()));
        prop_assert!((&y * &y.inv().unwrap()).is_one());
        if !x.is_zero() {
            prop_assert_eq!((&x * &y).inv().unwrap(), &y.inv().unwrap() * &x.inv().unwrap());
        }
        prop_assert_eq!(SkewFraction::new(x.num(), x.den()).unwrap(), x);
    }

    #[test]
    fn text_round_trip(k in 0usize..2, a in prop::collection::vec(coeffs(2), 4), n in ratfun()) {
        let r = &rings()[k];
        let p = ore(r, &a[0]);
        prop_assert_eq!(parse_orepoly(&p.to_string(), r).unwrap(), p);
        prop_assert_eq!(parse_ratfun(&n.to_string()).unwrap(), n);
        let m = OreMatrix::new(r.clone(), 2, 2, a.iter().map(|c| ore(r, c)).collect()).unwrap();
        prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }
}

/// `I + p E_{ij}` and row swaps, multiplied together.
fn random_unimodular(rng: &mut ChaCha8Rng, ring: &Arc<RingSpec>, n: usize) -> OreMatrix {
    use rand::Rng;
    let mut u = OreMatrix::identity(ring, n);
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut e = OreMatrix::identity(ring, n);
        e[(i, j)] = rand_ore(rng, ring, 1, 1);
        u = e.try_mul(&u).unwrap();
    }
    u.swap_rows(0, n - 1);
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hermite_is_a_normal_form(seed in any::<u64>(), k in 0usize..2, n in 2usize..=3) {
        let r = &rings()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rand_full_rank(&mut rng, r, n, 1, 1);
        let pair = hermite(&a);
        prop_assert_eq!(pair.u.try_mul(&a).unwrap(), pair.h.clone());
        prop_assert!(is_hermite_shape(&pair.h));
        prop_assert!(is_unimodular(&pair.u));
        prop_assert_eq!(hermite(&pair.h).h, pair.h.clone());
        let w = random_unimodular(&mut rng, r, n);
        prop_assert_eq!(hermite(&w.try_mul(&a).unwrap()).h, pair.h.clone());
        prop_assert_eq!(hermite_naive(&a).0.h, pair.h.clone());
    }

    #[test]
    fn inverse_of_hermite_form_is_proper(seed in any::<u64>(), k in 0usize..2) {
        let r = &rings()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rand_full_rank(&mut rng, r, 2, 2, 1);
        let h = hermite(&a).h;
        let inv = skew_inverse(&SkewMatrix::from_ore(&h)).unwrap();
        prop_assert!(is_inverse_of(&h, &inv));
        for e in inv.entries() {
            prop_assert!(e.deg() <= Degree::Finite(0));
        }
    }

    #[test]
    fn dieudonne_degree_laws(seed in any::<u64>(), k in 0usize..2) {
        let r = &rings()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rand_full_rank(&mut rng, r, 2, 1, 1);
        let b = rand_full_rank(&mut rng, r, 2, 1, 1);
        let (da, db) = (ore_ddet_degree(&a).unwrap(), ore_ddet_degree(&b).unwrap());
        prop_assert_eq!(ore_ddet_degree(&a.try_mul(&b).unwrap()).unwrap(), da + db);
        prop_assert_eq!(ddet_degree(&SkewMatrix::from_ore(&a)).unwrap(), da);
        let w = random_unimodular(&mut rng, r, 2);
        prop_assert_eq!(ore_ddet_degree(&w).unwrap(), Degree::Finite(0));
        let c = rand_matrix(&mut rng, r, 3, 3, 1, 1);
        prop_assert_eq!(rank(&SkewMatrix::from_ore(&c)), ore_rank(&c));
    }

    #[test]
    fn wide_hermite_matches_elimination(seed in any::<u64>(), k in 0usize..2) {
        let r = &rings()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rand_matrix(&mut rng, r, 2, 4, 1, 1);
        let pair = hermite(&a);
        prop_assert_eq!(pair.u.try_mul(&a).unwrap(), pair.h.clone());
        prop_assert_eq!(pair.h, hermite_naive(&a).0.h);
    }
}
