use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::exactalg::Rat;
use crate::simplicial::FinMonoid;
use crate::wconstruct::{Mode, WTuple};

fn r(p: i64, q: i64) -> Rat {
    Rat::new(p, q).unwrap()
}

fn pt(xs: &[i64]) -> RatPoint {
    RatPoint(xs.iter().map(|&x| Rat::int(x)).collect())
}

fn square_loop() -> MoorePath<RatPoint> {
    MoorePath::from_breakpoints(
        vec![
            (Rat::zero(), pt(&[0, 0])),
            (Rat::one(), pt(&[1, 0])),
            (r(3, 2), pt(&[1, 1])),
            (Rat::int(2), pt(&[0, 0])),
        ],
        &(),
    )
    .unwrap()
}

#[test]
fn path_addition() {
    let w = square_loop();
    let c = MoorePath::constant(pt(&[0, 0]));
    assert_eq!(c.add(&w, &()).unwrap(), w);
    assert_eq!(w.add(&c, &()).unwrap(), w);
    let ww = w.add(&w, &()).unwrap();
    assert_eq!(ww.length(), Rat::int(4));
    assert_eq!(ww.value_at(&r(5, 2), &()), w.value_at(&Rat::half(), &()));
    let off = MoorePath::constant(pt(&[5, 5]));
    assert!(w.add(&off, &()).is_err());
}

#[test]
fn evaluation_endpoints() {
    let w = square_loop();
    let base = pt(&[0, 0]);
    let ws = vec![w.clone()];
    assert_eq!(ev(&ws, &[Rat::one(), Rat::zero()], &base, &()).unwrap(), base);
    assert_eq!(ev(&ws, &[Rat::zero(), Rat::one()], &base, &()).unwrap(), base);
    assert_eq!(ev(&ws, &[Rat::half(), Rat::half()], &base, &()).unwrap(), w.value_at(&Rat::one(), &()));
}

#[test]
fn evaluation_faces() {
    let w = square_loop();
    let base = pt(&[0, 0]);
    let ws = vec![w.clone(), w.add(&w, &()).unwrap()];
    assert!(ev_face_coherence(&ws, &[r(1, 3), Rat::zero(), r(2, 3)], 1, &base, &()).unwrap());
    assert!(ev_face_coherence(&ws, &[Rat::zero(), r(1, 4), r(3, 4)], 0, &base, &()).unwrap());
    assert!(ev_face_coherence(&ws, &[r(1, 5), r(4, 5), Rat::zero()], 2, &base, &()).unwrap());
    assert!(ev_face_coherence(&ws, &[r(1, 5), r(4, 5), Rat::zero()], 1, &base, &()).is_err());
}

#[test]
fn em_points() {
    let m = FinMonoid::cyclic(3);
    let p = EmChart::new(Some(1), vec![2], vec![Rat::zero(), Rat::one()], &m).unwrap();
    assert_eq!(p.canonical(&m), EmChart::vertex(0));
    let q = EmChart::new(Some(1), vec![0, 2], vec![r(1, 4), r(1, 4), Rat::half()], &m).unwrap();
    let c = q.canonical(&m);
    assert_eq!(c.arrows(), &[2]);
    assert_eq!(c.coords(), &[Rat::half(), Rat::half()]);
    assert_eq!(em_act(&m, 0, &q).unwrap(), q);
    assert_eq!(em_act(&m, 2, &EmChart::vertex(2)).unwrap(), EmChart::vertex(1));
    assert_eq!(em_project(&EmChart::vertex(2)).canonical(&m), EmChart::base());
    assert!(em_act(&m, 1, &EmChart::base()).is_err());
}

#[test]
fn zeta_of_a_letter() {
    let m = FinMonoid::cyclic(2);
    let a = WTuple::iota(&m, 1, Mode::Semigroup).unwrap();
    let z = zeta(&m, &a).unwrap();
    assert_eq!(z.path().length(), Rat::one());
    let s = r(1, 3);
    let v = z.path().value_at(&s, &m);
    assert_eq!(v, EmChart::new(Some(0), vec![1], vec![r(2, 3), r(1, 3)], &m).unwrap());
    assert_eq!(z.endpoint(&m), 1);
    let loop_ = z.project();
    assert_eq!(loop_.end().canonical(&m), EmChart::base());
    assert_eq!(loop_.length(), Rat::one());
}

#[test]
fn zeta_lengths_and_endpoints() {
    let m = FinMonoid::cyclic(3);
    let (t1, t2) = (r(2, 7), r(3, 5));
    let a = WTuple::normalize(&m, vec![1, 2, 2], vec![t1.clone(), t2.clone()], Mode::Semigroup).unwrap();
    let z = zeta(&m, &a).unwrap();
    assert_eq!(z.path().length(), &(&t1 + &t2) + &Rat::one());
    assert_eq!(z.endpoint(&m), a.epsilon(&m));
}

#[test]
fn zeta_is_multiplicative() {
    let m = FinMonoid::cyclic(3);
    let a = WTuple::normalize(&m, vec![1, 2], vec![r(1, 3)], Mode::Semigroup).unwrap();
    let b = WTuple::normalize(&m, vec![2, 2], vec![r(3, 4)], Mode::Semigroup).unwrap();
    let ab = a.wmul(&m, &b).unwrap();
    let lhs = zeta(&m, &ab).unwrap();
    let rhs = zeta(&m, &a).unwrap().oplus(&zeta(&m, &b).unwrap(), &m).unwrap();
    assert!(lhs.path().same_path(rhs.path(), &m));
    let times: Vec<Rat> = (0..=40).map(|k| r(k, 8)).collect();
    for t in &times {
        assert_eq!(lhs.path().value_at(t, &m), rhs.path().value_at(t, &m));
    }
    assert!(lhs.project().same_path(&rhs.project(), &m));
}

#[test]
fn pem_unit() {
    let m = FinMonoid::cyclic(2);
    let z = zeta(&m, &WTuple::iota(&m, 1, Mode::Semigroup).unwrap()).unwrap();
    let e = PemPath::unit(&m);
    assert_eq!(e.oplus(&z, &m).unwrap(), z);
    assert_eq!(z.oplus(&e, &m).unwrap(), z);
}
