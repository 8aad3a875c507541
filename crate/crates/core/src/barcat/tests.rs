use alloc::vec::Vec;

use super::*;
use crate::exactalg::{homology_all, reduced_homology_all, AbelianGroup, Coefficients};
use crate::simplicial::{nerve, realize, FinCategory, FinMonoid, Simplex, SimplicialSet};

fn reduced(x: &SimplicialSet) -> Vec<AbelianGroup> {
    reduced_homology_all(&x.chains())
}

fn fixtures() -> Vec<FinCategory> {
    Vec::from([
        FinCategory::terminal(),
        FinCategory::arrow(),
        FinCategory::span(),
        FinCategory::cospan(),
        FinCategory::composable_pair(),
        FinCategory::parallel_pair(),
        FinCategory::isomorphism(),
        FinCategory::from_monoid(&FinMonoid::cyclic(2)),
        FinCategory::from_monoid(&FinMonoid::idempotent()),
    ])
}

#[test]
fn bar_of_points_is_the_nerve() {
    let m = FinMonoid::cyclic(2);
    let c = FinCategory::from_monoid(&m);
    let pt = Diagram::point(&c, 4);
    let b = two_sided_bar(&Diagram::point(&c.opposite(), 4), &c, &pt, 4).unwrap();
    let n = nerve(&m, 4);
    assert_eq!(b.counts(), n.counts());
    assert_eq!(reduced(&b), reduced(&n));
}

#[test]
fn em_is_contractible() {
    let c = FinCategory::from_monoid(&FinMonoid::cyclic(2));
    let em = em_bar(&c, 3).unwrap();
    let h = reduced(&em);
    assert!(h[..3].iter().all(|g| g.is_trivial()), "{h:?}");
}

#[test]
fn comma_bars_of_the_arrow_are_contractible() {
    let c = FinCategory::arrow();
    let x = bar_star_cc(&c, 3).unwrap();
    for o in 0..2 {
        let h = homology_all(&x.value(o).chains(), Coefficients::Integers);
        assert_eq!(h[0].group(), AbelianGroup::free(1));
        assert!(h[1..3].iter().all(|r| r.group().is_trivial()));
    }
}

#[test]
fn bar_ccc_values() {
    let t = bar_ccc(&FinCategory::terminal(), 3).unwrap();
    assert_eq!(reduced(t.value(0)).iter().filter(|g| !g.is_trivial()).count(), 0);
    assert_eq!(homology_all(&t.value(0).chains(), Coefficients::Integers)[0].betti, 1);
    for c in [FinCategory::arrow(), FinCategory::span()] {
        let k = c.object_count();
        let d = bar_ccc(&c, 3).unwrap();
        for b in 0..k {
            for a in 0..k {
                let h = homology_all(&d.value(b * k + a).chains(), Coefficients::Integers);
                assert_eq!(h[0].betti, c.hom(a, b).len());
                assert!(h[1..3].iter().all(|r| r.group().is_trivial()));
            }
        }
    }
}

#[test]
fn delta_composes() {
    let c = FinCategory::composable_pair();
    let comps = delta(&c, 2).unwrap();
    let (f, g, gf) = (3, 4, 5);
    // (b, a) = (2, 0): vertex (g, f) collapses to g∘f
    let d = comps.iter().find(|d| d.b == 2 && d.a == 0).unwrap();
    let rep = Diagram::representable(&c, 2, 2);
    let corep = Diagram::corepresentable(&c, 0, 2);
    let model = BarModel::new(&rep, &c, &corep, 2).unwrap();
    let r = realize(&model);
    let vertex = BarKey {
        start: 1,
        x: Simplex::generator(0, c.hom(1, 2).iter().position(|&m| m == g).unwrap()),
        arrows: Vec::new(),
        y: Simplex::generator(0, c.hom(0, 1).iter().position(|&m| m == f).unwrap()),
    };
    let v = r.generator_of(0, &vertex).unwrap();
    let img = d.map.apply(&Simplex::generator(0, v));
    assert_eq!(c.hom(0, 2)[img.gen], gf);
    // (id, f, id) ↦ f
    let d10 = comps.iter().find(|d| d.b == 1 && d.a == 0).unwrap();
    let rep = Diagram::representable(&c, 1, 2);
    let model = BarModel::new(&rep, &c, &corep, 2).unwrap();
    let r = realize(&model);
    let id_at = |o: usize, b: usize| c.hom(o, b).iter().position(|&m| m == c.identity(o)).unwrap();
    let edge = BarKey {
        start: 1,
        x: Simplex::with_word(0, id_at(1, 1), [0].into()),
        arrows: [f].into(),
        y: Simplex::with_word(0, id_at(0, 0), [0].into()),
    };
    let s = r.simplex_of(1, &edge).unwrap();
    assert_eq!(c.hom(0, 1)[d10.map.apply(&s).gen], f);
    assert!(comps.iter().all(|d| d.is_equivalence()));
}

#[test]
fn delta_is_an_equivalence_on_fixtures() {
    for c in fixtures() {
        for d in delta(&c, 3).unwrap() {
            assert!(d.is_equivalence(), "{:?} at ({}, {})", c.objects(), d.b, d.a);
        }
    }
}

fn circle_span(maxdim: usize) -> Diagram {
    let pt = SimplicialSet::point(maxdim);
    let s1 = SimplicialSet::circle(maxdim);
    let l = SimplicialMap::constant(&pt, &s1, 0).unwrap();
    Diagram::span(l.clone(), l).unwrap()
}

#[test]
fn hocolim_of_circle_span_is_a_wedge() {
    let d = circle_span(3);
    let h = reduced(&hocolim(&d, 3).unwrap());
    assert!(h[0].is_trivial());
    assert_eq!(h[1], AbelianGroup::free(2));
    assert!(h[2].is_trivial());
    assert_eq!(reduced(&bar_star_c_d(&d, 3).unwrap())[..3], h[..3]);
}

#[test]
fn hocolim_of_points() {
    let d = Diagram::point(&FinCategory::span(), 3);
    let h = reduced(&hocolim(&d, 3).unwrap());
    assert!(h[..3].iter().all(|g| g.is_trivial()));
    let c = FinCategory::parallel_pair();
    let h = reduced(&hocolim(&Diagram::point(&c, 3), 3).unwrap());
    let n = reduced(&crate::simplicial::category_nerve(&c, 3));
    assert_eq!(h[..3], n[..3]);
}

#[test]
fn hocolim_over_terminal_is_the_value() {
    let x = nerve(&FinMonoid::cyclic(3), 4);
    let d = Diagram::constant(&FinCategory::terminal(), &x);
    assert_eq!(reduced(&hocolim(&d, 4).unwrap())[..4], reduced(&x)[..4]);
}

#[test]
fn co_yoneda_on_spans() {
    let d = circle_span(3);
    for b in 0..3 {
        assert!(co_yoneda_check(&d, b, 3).unwrap());
    }
}

#[test]
fn functoriality_is_checked() {
    let c = FinCategory::composable_pair();
    // g∘f must go to 0 but we send it to 1
    let maps = Vec::from([
        Vec::from([0]),
        Vec::from([0, 1]),
        Vec::from([0, 1]),
        Vec::from([0]),
        Vec::from([0, 0]),
        Vec::from([1]),
    ]);
    assert!(Diagram::from_sets(&c, &[1, 2, 2], &maps, 1).is_err());
}
