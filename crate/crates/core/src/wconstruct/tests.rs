use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::exactalg::{homology_all, AbelianGroup, Coefficients, Rat};
use crate::simplicial::{FinMonoid, FinSemigroup, Hom};

fn r(p: i64, q: i64) -> Rat {
    Rat::new(p, q).unwrap()
}

fn w(letters: &[&str]) -> Vec<alloc::string::String> {
    letters.iter().map(|s| s.to_string()).collect()
}

#[test]
fn relation_one_merges() {
    let t = WTuple::normalize(&FreeMonoid, vec![w(&["x"]), w(&["y"])], vec![Rat::zero()], Mode::Semigroup).unwrap();
    assert_eq!(t.display(&FreeMonoid), "(x·y)");
}

#[test]
fn unit_relations() {
    let e = Vec::new();
    let t = WTuple::normalize(&FreeMonoid, vec![e.clone(), w(&["x"])], vec![r(1, 3)], Mode::Monoid).unwrap();
    assert_eq!(t.display(&FreeMonoid), "(x)");
    let t = WTuple::normalize(
        &FreeMonoid,
        vec![w(&["x"]), e.clone(), w(&["y"])],
        vec![r(1, 3), r(1, 2)],
        Mode::Monoid,
    )
    .unwrap();
    assert_eq!(t.display(&FreeMonoid), "(x 1/2 y)");
    let u = WTuple::normalize(&FreeMonoid, vec![e.clone(), e], vec![r(1, 2)], Mode::Monoid).unwrap();
    assert!(u.is_unit());
    assert_eq!(u.display(&FreeMonoid), "(e)");
}

#[test]
fn multiplication() {
    let g = FreeMonoid;
    let x = WTuple::iota(&g, w(&["x"]), Mode::Monoid).unwrap();
    let y = WTuple::iota(&g, w(&["y"]), Mode::Monoid).unwrap();
    let z = WTuple::iota(&g, w(&["z"]), Mode::Monoid).unwrap();
    assert_eq!(x.wmul(&g, &y).unwrap().display(&g), "(x 1/1 y)");
    assert_eq!(WTuple::unit().wmul(&g, &x).unwrap(), x);
    let left = x.wmul(&g, &y).unwrap().wmul(&g, &z).unwrap();
    let right = x.wmul(&g, &y.wmul(&g, &z).unwrap()).unwrap();
    assert_eq!(left, right);
    assert_eq!(left.display(&g), "(x 1/1 y 1/1 z)");
    let xs = WTuple::iota(&g, w(&["x"]), Mode::Semigroup).unwrap();
    assert!(xs.wmul(&g, &y).is_err());
}

#[test]
fn augmentation() {
    let z2 = FinMonoid::cyclic(2);
    let a = WTuple::normalize(&z2, vec![1, 1], vec![Rat::half()], Mode::Semigroup).unwrap();
    assert_eq!(a.epsilon(&z2), 0);
    let x = WTuple::iota(&z2, 1, Mode::Semigroup).unwrap();
    assert_eq!(x.epsilon(&z2), 1);
}

#[test]
fn shrinking() {
    let g = FreeMonoid;
    let t = WTuple::normalize(&g, vec![w(&["x"]), w(&["y"])], vec![Rat::half()], Mode::Semigroup).unwrap();
    assert_eq!(t.shrink(&g, &Rat::one()).unwrap(), t);
    assert_eq!(t.shrink(&g, &Rat::zero()).unwrap().display(&g), "(x·y)");
    let one = WTuple::normalize(&g, vec![w(&["x"]), w(&["y"])], vec![Rat::one()], Mode::Semigroup).unwrap();
    assert_eq!(one.shrink(&g, &Rat::half()).unwrap(), t);
}

#[test]
fn eps_prime_identities() {
    let m = FinMonoid::cyclic(3);
    let a = WTuple::normalize(&m, vec![0, 2], vec![r(1, 4)], Mode::Semigroup).unwrap();
    let b = a.eps_prime(&m).unwrap();
    assert_eq!(b.mode(), Mode::Monoid);
    assert_eq!(b.entries(), &[2]);
    for x in 0..3 {
        let bar = WTuple::iota(&m, x, Mode::Semigroup).unwrap();
        assert_eq!(bar.eps_prime(&m).unwrap(), WTuple::iota(&m, x, Mode::Monoid).unwrap());
    }
}

#[test]
fn reduction_mod_two() {
    let z4 = FinMonoid::cyclic(4);
    let z2 = FinMonoid::cyclic(2);
    let f = Hom::monoid(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
    let a = WTuple::normalize(&z4, vec![1, 1], vec![Rat::half()], Mode::Semigroup).unwrap();
    let b = a.map_w(&z2, |&x| f.apply(x)).unwrap();
    assert_eq!(b.display(&z2), "(a 1/2 a)");
    assert_eq!(b.epsilon(&z2), f.apply(a.epsilon(&z4)));
}

#[test]
fn whisker_table() {
    let v = WhiskerMonoid::new(FinMonoid::cyclic(2));
    let s = v.whisker(r(1, 3)).unwrap();
    let t = v.whisker(r(2, 3)).unwrap();
    assert_eq!(v.mul(&s, &t), t);
    assert_eq!(v.mul(&WhiskerElem::Monoid(1), &s), WhiskerElem::Monoid(1));
    assert_eq!(v.mul(&v.unit(), &s), s);
    assert_eq!(v.whisker(Rat::one()).unwrap(), WhiskerElem::Monoid(0));
    assert_eq!(v.collapse(&s), 0);
}

fn groups(g: &FinSemigroup, l: usize) -> Vec<AbelianGroup> {
    homology_all(&wbar_complex(g, l).unwrap(), Coefficients::Integers)
        .iter()
        .map(|h| h.group())
        .collect()
}

#[test]
fn cells_of_an_idempotent() {
    let g = FinSemigroup::singleton();
    let cells = block_cells(&g, 2).unwrap();
    assert_eq!(cells[0].len(), 2);
    assert_eq!(cells[1].len(), 1);
    let h = groups(&g, 2);
    assert_eq!(h[0], AbelianGroup::free(1));
    assert!(h[1].is_trivial());
}

#[test]
fn z2_is_shrinkable() {
    let z2 = FinMonoid::cyclic(2).as_semigroup().clone();
    let h = groups(&z2, 3);
    assert_eq!(h[0], AbelianGroup::free(2));
    assert!(h[1].is_trivial() && h[2].is_trivial());
    assert_eq!(block_cells(&z2, 3).unwrap()[0].len(), 2 + 4 + 8);
}

#[test]
fn components() {
    let z2 = FinMonoid::cyclic(2).as_semigroup().clone();
    let c = wbar_components(&z2, 3).unwrap();
    assert_eq!(c.len(), 2);
    assert!(components_match_products(&z2, &c));
    assert_eq!(wbar_components(&FinSemigroup::singleton(), 3).unwrap().len(), 1);
    let z3 = FinMonoid::cyclic(3).as_semigroup().clone();
    let c = wbar_components(&z3, 2).unwrap();
    assert_eq!(c.len(), 3);
    assert!(components_match_products(&z3, &c));
    assert!(wbar_complex(&z3, 0).is_err());
}
