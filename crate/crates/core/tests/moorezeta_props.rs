use bwtop_core::exactalg::Rat;
use bwtop_core::moorezeta::{ev, ev_face_coherence, zeta, MoorePath, PathValue, PemPath, RatPoint};
use bwtop_core::simplicial::{adjoin_unit, FinMonoid, FinSemigroup};
use bwtop_core::wconstruct::{Mode, WTuple};
use proptest::prelude::*;

fn rat_in(max: i64) -> impl Strategy<Value = Rat> {
    (-max..=max, 1i64..=4).prop_map(|(a, b)| Rat::new(a, b).unwrap())
}

fn unit_rat() -> impl Strategy<Value = Rat> {
    (0i64..=5, 1i64..=5).prop_map(|(a, b)| if a >= b { Rat::one() } else { Rat::new(a, b).unwrap() })
}

/// A PL loop in `ℚ²` at the origin.
fn plane_loop() -> impl Strategy<Value = MoorePath<RatPoint>> {
    proptest::collection::vec((1i64..=4, 1i64..=3, rat_in(3), rat_in(3)), 0..4).prop_map(|pieces| {
        let mut t = Rat::zero();
        let mut bps = vec![(Rat::zero(), RatPoint::origin(2))];
        for (num, den, x, y) in pieces {
            t = &t + &Rat::new(num, den).unwrap();
            bps.push((t.clone(), RatPoint(vec![x, y])));
        }
        if bps.len() > 1 {
            t = &t + &Rat::one();
            bps.push((t, RatPoint::origin(2)));
        }
        MoorePath::from_breakpoints(bps, &()).unwrap()
    })
}

fn barycentric(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec(0i64..=4, n + 1).prop_map(|mut w| {
        if w.iter().all(|&x| x == 0) {
            w[0] = 1;
        }
        let total: i64 = w.iter().sum();
        w.iter().map(|&x| Rat::new(x, total).unwrap()).collect()
    })
}

fn monoids() -> Vec<FinMonoid> {
    vec![
        FinMonoid::trivial(),
        FinMonoid::cyclic(2),
        FinMonoid::cyclic(3),
        FinMonoid::idempotent(),
        adjoin_unit(&FinSemigroup::left_zero(2)),
    ]
}

fn w_bar() -> impl Strategy<Value = (usize, Vec<usize>, Vec<Rat>)> {
    (0..monoids().len(), 1usize..=3).prop_flat_map(|(k, len)| {
        let size = monoids()[k].size();
        (
            Just(k),
            proptest::collection::vec(0..size, len),
            proptest::collection::vec(unit_rat(), len - 1),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moore_addition_is_strict(a in plane_loop(), b in plane_loop(), c in plane_loop()) {
        let l = a.add(&b, &()).unwrap().add(&c, &()).unwrap();
        let r = a.add(&b.add(&c, &()).unwrap(), &()).unwrap();
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(l.length(), &(&a.length() + &b.length()) + &c.length());
        let unit = MoorePath::constant(RatPoint::origin(2));
        prop_assert_eq!(&unit.add(&a, &()).unwrap(), &a);
        prop_assert_eq!(&a.add(&unit, &()).unwrap(), &a);
    }

    #[test]
    fn evaluation_respects_faces(
        loops in proptest::collection::vec(plane_loop(), 1..4),
        face in 0usize..4,
        seed in barycentric(3),
    ) {
        let n = loops.len();
        let i = face % (n + 1);
        let mut t: Vec<Rat> = seed[..n].to_vec();
        t.insert(i, Rat::zero());
        let total: Rat = t.iter().cloned().sum();
        if total.is_zero() {
            t[if i == 0 { 1 } else { 0 }] = Rat::one();
        } else {
            t = t.iter().map(|x| x / &total).collect();
        }
        prop_assert!(ev_face_coherence(&loops, &t, i, &RatPoint::origin(2), &()).unwrap());
    }

    #[test]
    fn evaluation_at_vertices_is_the_basepoint(loops in proptest::collection::vec(plane_loop(), 1..4), j in 0usize..4) {
        let n = loops.len();
        let mut t = vec![Rat::zero(); n + 1];
        let j = if j % 2 == 0 { 0 } else { n };
        t[j] = Rat::one();
        prop_assert_eq!(ev(&loops, &t, &RatPoint::origin(2), &()).unwrap(), RatPoint::origin(2));
    }

    #[test]
    fn zeta_lifts_the_augmentation((k, e, p) in w_bar()) {
        let m = &monoids()[k];
        let a = WTuple::normalize(m, e, p, Mode::Semigroup).unwrap();
        let z = zeta(m, &a).unwrap();
        prop_assert_eq!(z.endpoint(m), a.epsilon(m));
        let expected: Rat = a.params().iter().cloned().sum::<Rat>() + Rat::one();
        prop_assert_eq!(z.path().length(), expected);
    }

    #[test]
    fn zeta_is_a_homomorphism((k, e, p) in w_bar(), (_, f, q) in w_bar()) {
        let m = &monoids()[k];
        let f: Vec<usize> = f.iter().map(|x| x % m.size()).collect();
        let a = WTuple::normalize(m, e, p, Mode::Semigroup).unwrap();
        let b = WTuple::normalize(m, f, q, Mode::Semigroup).unwrap();
        let (za, zb) = (zeta(m, &a).unwrap(), zeta(m, &b).unwrap());
        let lhs = zeta(m, &a.wmul(m, &b).unwrap()).unwrap();
        let rhs = za.oplus(&zb, m).unwrap();
        prop_assert!(lhs.path().same_path(rhs.path(), m));
        prop_assert_eq!(lhs.endpoint(m), m.mul(za.endpoint(m), zb.endpoint(m)));
        let projected = za.project().add(&zb.project(), m).unwrap();
        prop_assert!(lhs.project().same_path(&projected, m));
    }

    #[test]
    fn oplus_is_associative_and_unital((k, e, p) in w_bar(), (_, f, q) in w_bar(), (_, g, r) in w_bar()) {
        let m = &monoids()[k];
        let fix = |e: Vec<usize>, p: Vec<Rat>| {
            let e = e.iter().map(|x| x % m.size()).collect();
            zeta(m, &WTuple::normalize(m, e, p, Mode::Semigroup).unwrap()).unwrap()
        };
        let (a, b, c) = (fix(e, p), fix(f, q), fix(g, r));
        let l = a.oplus(&b, m).unwrap().oplus(&c, m).unwrap();
        let rr = a.oplus(&b.oplus(&c, m).unwrap(), m).unwrap();
        prop_assert_eq!(&l, &rr);
        let u = PemPath::unit(m);
        prop_assert_eq!(&u.oplus(&a, m).unwrap(), &a);
        prop_assert_eq!(&a.oplus(&u, m).unwrap(), &a);
    }

    #[test]
    fn zeta_images_start_at_the_unit_vertex((k, e, p) in w_bar()) {
        let m = &monoids()[k];
        let a = WTuple::normalize(m, e, p, Mode::Semigroup).unwrap();
        let z = zeta(m, &a).unwrap();
        let start = z.path().start().canonical(m);
        prop_assert_eq!(start.lead(), Some(m.unit()));
        prop_assert!(start.arrows().is_empty());
        prop_assert!(z.path().end().is_vertex(m));
    }
}
