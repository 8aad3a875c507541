use bwtop_core::exactalg::Rat;
use bwtop_core::simplicial::{adjoin_unit, FinMonoid, FinSemigroup, Hom};
use bwtop_core::wconstruct::{Mode, WTuple, WhiskerElem, WhiskerMonoid};
use proptest::prelude::*;

fn fixtures() -> Vec<FinMonoid> {
    vec![
        FinMonoid::trivial(),
        FinMonoid::cyclic(2),
        FinMonoid::cyclic(3),
        FinMonoid::idempotent(),
        FinMonoid::klein(),
        adjoin_unit(&FinSemigroup::left_zero(2)),
        adjoin_unit(&FinSemigroup::right_zero(2)),
    ]
}

fn rat() -> impl Strategy<Value = Rat> {
    (0i64..=6, 1i64..=6).prop_map(|(a, b)| if a >= b { Rat::one() } else { Rat::new(a, b).unwrap() })
}

#[derive(Debug, Clone)]
struct Raw {
    monoid: usize,
    entries: Vec<usize>,
    params: Vec<Rat>,
}

fn raw(max_len: usize) -> impl Strategy<Value = Raw> {
    (0..fixtures().len(), 1..=max_len).prop_flat_map(|(monoid, len)| {
        let size = fixtures()[monoid].size();
        (
            Just(monoid),
            proptest::collection::vec(0..size, len),
            proptest::collection::vec(rat(), len - 1),
        )
            .prop_map(|(monoid, entries, params)| Raw { monoid, entries, params })
    })
}

fn raw_in(monoid: usize, max_len: usize) -> impl Strategy<Value = (Vec<usize>, Vec<Rat>)> {
    let size = fixtures()[monoid].size();
    (1..=max_len).prop_flat_map(move |len| {
        (
            proptest::collection::vec(0..size, len),
            proptest::collection::vec(rat(), len - 1),
        )
    })
}

type Raw2 = (Vec<usize>, Vec<Rat>);

fn triple() -> impl Strategy<Value = (usize, [Raw2; 3])> {
    (0..fixtures().len()).prop_flat_map(|k| {
        (Just(k), raw_in(k, 4), raw_in(k, 4), raw_in(k, 4)).prop_map(|(k, a, b, c)| (k, [a, b, c]))
    })
}

fn modes() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Semigroup), Just(Mode::Monoid)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_is_confluent(r in raw(6), mode in modes(), picks in proptest::collection::vec(0usize..16, 12)) {
        let m = &fixtures()[r.monoid];
        let left = WTuple::normalize(m, r.entries.clone(), r.params.clone(), mode).unwrap();
        let mut it = picks.iter().cycle();
        let random = WTuple::normalize_with(m, r.entries, r.params, mode, |_| *it.next().unwrap()).unwrap();
        prop_assert_eq!(left, random);
    }

    #[test]
    fn normal_form_is_idempotent_and_reduced(r in raw(6), mode in modes()) {
        let m = &fixtures()[r.monoid];
        let a = WTuple::normalize(m, r.entries, r.params, mode).unwrap();
        prop_assert!(a.params().iter().all(|t| t.is_positive() && t.in_unit_interval()));
        if mode == Mode::Monoid {
            prop_assert!(a.entries().iter().all(|&x| x != m.unit()));
        }
        let again = WTuple::normalize(m, a.entries().to_vec(), a.params().to_vec(), mode).unwrap();
        prop_assert_eq!(a, again);
    }

    #[test]
    fn multiplication_is_associative_and_unital((k, xs) in triple(), mode in modes()) {
        let m = &fixtures()[k];
        let [x, y, z] = xs.map(|(e, p)| WTuple::normalize(m, e, p, mode).unwrap());
        let l = x.wmul(m, &y).unwrap().wmul(m, &z).unwrap();
        let r = x.wmul(m, &y.wmul(m, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        if mode == Mode::Monoid {
            prop_assert_eq!(&WTuple::unit().wmul(m, &x).unwrap(), &x);
            prop_assert_eq!(&x.wmul(m, &WTuple::unit()).unwrap(), &x);
        }
    }

    #[test]
    fn products_of_unfrozen_tuples_never_collapse(r in raw(4), s in raw(4)) {
        let m = &fixtures()[r.monoid];
        let fix = |e: Vec<usize>, p: Vec<Rat>| {
            let p = p.into_iter().map(|t| if t.is_zero() || t.is_one() { Rat::half() } else { t }).collect();
            WTuple::normalize(m, e, p, Mode::Semigroup).unwrap()
        };
        let a = fix(r.entries, r.params);
        let entries: Vec<usize> = s.entries.iter().map(|x| x % m.size()).collect();
        let b = fix(entries, s.params);
        prop_assert_eq!(a.wmul(m, &b).unwrap().len(), a.len() + b.len());
    }

    #[test]
    fn epsilon_is_a_homomorphism(r in raw(4), s in raw(4), mode in modes()) {
        let m = &fixtures()[r.monoid];
        let a = WTuple::normalize(m, r.entries, r.params, mode).unwrap();
        let entries: Vec<usize> = s.entries.iter().map(|x| x % m.size()).collect();
        let b = WTuple::normalize(m, entries, s.params, mode).unwrap();
        prop_assert_eq!(a.wmul(m, &b).unwrap().epsilon(m), m.mul(a.epsilon(m), b.epsilon(m)));
    }

    #[test]
    fn sections_and_comparison_map(r in raw(5), x in 0usize..4) {
        let m = &fixtures()[r.monoid];
        let x = x % m.size();
        prop_assert_eq!(WTuple::iota(m, x, Mode::Semigroup).unwrap().epsilon(m), x);
        prop_assert_eq!(WTuple::iota(m, x, Mode::Monoid).unwrap().epsilon(m), x);
        let iota_bar = WTuple::iota(m, x, Mode::Semigroup).unwrap();
        prop_assert_eq!(iota_bar.eps_prime(m).unwrap(), WTuple::iota(m, x, Mode::Monoid).unwrap());
        let a = WTuple::normalize(m, r.entries, r.params, Mode::Semigroup).unwrap();
        prop_assert_eq!(a.eps_prime(m).unwrap().epsilon(m), a.epsilon(m));
    }

    #[test]
    fn shrinking_stays_over_the_base(r in raw(5), s in rat(), mode in modes()) {
        let m = &fixtures()[r.monoid];
        let a = WTuple::normalize(m, r.entries, r.params, mode).unwrap();
        prop_assert_eq!(a.shrink(m, &s).unwrap().epsilon(m), a.epsilon(m));
        prop_assert_eq!(&a.shrink(m, &Rat::one()).unwrap(), &a);
        prop_assert_eq!(a.shrink(m, &Rat::zero()).unwrap(), WTuple::iota(m, a.epsilon(m), mode).unwrap());
    }

    #[test]
    fn homomorphisms_act_naturally(
        entries in proptest::collection::vec(0usize..4, 1..5),
        params in proptest::collection::vec(rat(), 4),
        mode in modes(),
    ) {
        let z4 = FinMonoid::cyclic(4);
        let z2 = FinMonoid::cyclic(2);
        let f = Hom::monoid(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        let a = WTuple::normalize(&z4, entries.clone(), params[..entries.len() - 1].to_vec(), mode).unwrap();
        let fa = a.map_w(&z2, |&x| f.apply(x)).unwrap();
        prop_assert_eq!(fa.epsilon(&z2), f.apply(a.epsilon(&z4)));
        let id = a.map_w(&z4, |&x| x).unwrap();
        prop_assert_eq!(id, a);
    }

    #[test]
    fn whiskering_laws(k in 0usize..7, picks in proptest::collection::vec((0usize..8, rat()), 3)) {
        let m = fixtures()[k].clone();
        let v = WhiskerMonoid::new(m.clone());
        let elems: Vec<WhiskerElem> = picks
            .iter()
            .map(|(i, s)| {
                if *i < m.size() {
                    WhiskerElem::Monoid(*i)
                } else {
                    v.whisker(s.clone()).unwrap()
                }
            })
            .collect();
        let (a, b, c) = (&elems[0], &elems[1], &elems[2]);
        prop_assert_eq!(v.mul(&v.mul(a, b), c), v.mul(a, &v.mul(b, c)));
        prop_assert_eq!(&v.mul(&v.unit(), a), a);
        prop_assert_eq!(&v.mul(a, &v.unit()), a);
        prop_assert_eq!(v.collapse(&v.mul(a, b)), m.mul(v.collapse(a), v.collapse(b)));
    }
}
