use alloc::string::ToString;
use alloc::vec::Vec;

use super::*;
use crate::exactalg::{homology_all, AbelianGroup, Coefficients};
use crate::simplicial::{realize, FinMonoid, Simplex, SimplicialSet};

#[test]
fn first_james_stage_is_x() {
    let s1 = SimplicialSet::circle(3);
    let j = james(&s1, 1, 3).unwrap();
    assert_eq!(j.counts(), s1.counts());
    let x = crate::simplicial::nerve(&FinMonoid::cyclic(2), 3);
    assert_eq!(james(&x, 1, 3).unwrap().counts(), x.counts());
    assert_eq!(james(&s1, 0, 3).unwrap().counts(), &[1, 0, 0, 0]);
}

#[test]
fn second_james_stage_of_circle() {
    let s1 = SimplicialSet::circle(3);
    let model = JamesModel::new(&s1, 2, 3).unwrap();
    let r = realize(&model);
    let a = Simplex::generator(1, 0);
    let mut deg1 = r.keys[1].clone();
    deg1.sort();
    assert_eq!(deg1, [Vec::from([a.clone()]), Vec::from([a.clone(), a.clone()])]);
    let s0a = s1.degeneracy(0, &a);
    let s1a = s1.degeneracy(1, &a);
    let mut deg2 = r.keys[2].clone();
    deg2.sort();
    let mut expect = [Vec::from([s0a.clone(), s1a.clone()]), Vec::from([s1a, s0a])];
    expect.sort();
    assert_eq!(deg2, expect);
}

#[test]
fn james_of_circle() {
    for l in 1..=3 {
        let j = james(&SimplicialSet::circle(l + 1), l, l + 1).unwrap();
        let h = homology_all(&j.chains(), Coefficients::Integers);
        for n in 0..=l {
            assert_eq!(h[n].group(), AbelianGroup::free(1), "H_{n}(J_{l} S¹)");
        }
    }
}

#[test]
fn smash_oracle() {
    let s1 = SimplicialSet::circle(4);
    assert_eq!(smash_power_oracle(&s1, 2, 3).unwrap()[2], AbelianGroup::free(1));
    assert_eq!(smash_power_oracle(&s1, 3, 4).unwrap()[3], AbelianGroup::free(1));
    let (l, r) = james_rational_comparison(&s1, 3, 4).unwrap();
    assert_eq!(l, r);
}

#[test]
fn grothendieck_examples() {
    assert_eq!(grothendieck_group(&FinMonoid::cyclic(2)).unwrap(), AbelianGroup::cyclic(2));
    assert!(grothendieck_group(&FinMonoid::idempotent()).unwrap().is_trivial());
    // 1, x, …, x⁴ with every product of total degree ≤ 4
    let gens = (0..5).map(|i| i.to_string()).collect();
    let rels: Vec<(usize, usize, usize)> = (0..5)
        .flat_map(|i| (0..5).map(move |j| (i, j)))
        .filter(|(i, j)| i + j <= 4)
        .map(|(i, j)| (i, j, i + j))
        .collect();
    let p = CommMonoidPresentation::new(gens, &rels).unwrap();
    assert_eq!(p.group(), AbelianGroup::free(1));
    let lz = crate::simplicial::adjoin_unit(&crate::simplicial::FinSemigroup::left_zero(2));
    assert!(grothendieck_group(&lz).is_err());
}

#[test]
fn h1_examples() {
    assert_eq!(h1_of_bm(&FinMonoid::cyclic(2)), AbelianGroup::cyclic(2));
    assert!(h1_of_bm(&FinMonoid::idempotent()).is_trivial());
    assert_eq!(h1_of_bm(&FinMonoid::cyclic(3)), AbelianGroup::cyclic(3));
}

#[test]
fn preservation_for_small_groups() {
    let z2 = FinMonoid::cyclic(2);
    let z3 = FinMonoid::cyclic(3);
    let rep = hocolim_preservation_check(&z2, &z2, 3).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.degrees[1].1, AbelianGroup::new(0, &[2.into(), 2.into()]));
    let rep = hocolim_preservation_check(&z2, &z3, 3).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.degrees[1].1, AbelianGroup::cyclic(6));
    let rep = hocolim_preservation_check(&z2, &FinMonoid::trivial(), 2).unwrap();
    assert!(rep.passed());
    assert!(hocolim_preservation_check(&FinMonoid::idempotent(), &z2, 2).is_err());
}
