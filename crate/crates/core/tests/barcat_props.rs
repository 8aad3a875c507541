use bwtop_core::barcat::{co_yoneda_check, delta, hocolim, Diagram};
use bwtop_core::exactalg::{homology_all, Coefficients};
use bwtop_core::simplicial::FinCategory;
use bwtop_core::unionfind::UnionFind;
use proptest::prelude::*;

fn categories() -> Vec<FinCategory> {
    vec![
        FinCategory::terminal(),
        FinCategory::discrete(2),
        FinCategory::arrow(),
        FinCategory::span(),
        FinCategory::composable_pair(),
        FinCategory::parallel_pair(),
        FinCategory::isomorphism(),
    ]
}

#[derive(Debug, Clone)]
struct SetSpan {
    m: usize,
    a: usize,
    b: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

fn set_span() -> impl Strategy<Value = SetSpan> {
    (0usize..4, 1usize..4, 1usize..4).prop_flat_map(|(m, a, b)| {
        (
            Just(m),
            Just(a),
            Just(b),
            proptest::collection::vec(0..a, m),
            proptest::collection::vec(0..b, m),
        )
            .prop_map(|(m, a, b, left, right)| SetSpan { m, a, b, left, right })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The homotopy pushout of sets is a graph: vertices `A ⊔ B`, one edge
    /// per element of `M`.
    #[test]
    fn hocolim_of_a_span_of_sets_is_its_graph(s in set_span()) {
        let shape = FinCategory::span();
        let sizes = [s.m, s.a, s.b];
        let maps: Vec<Vec<usize>> = (0..shape.morphism_count())
            .map(|f| match shape.morphism(f).name.as_str() {
                "i" => s.left.clone(),
                "j" => s.right.clone(),
                _ => (0..sizes[shape.source(f)]).collect(),
            })
            .collect();
        let d = Diagram::from_sets(&shape, &sizes, &maps, 3).unwrap();
        let h = homology_all(&hocolim(&d, 3).unwrap().chains(), Coefficients::Integers);
        let mut uf = UnionFind::new(s.a + s.b);
        for k in 0..s.m {
            uf.union(s.left[k], s.a + s.right[k]);
        }
        let comps = uf.class_count();
        prop_assert_eq!(h[0].betti, comps);
        prop_assert_eq!(h[1].betti + s.a + s.b, s.m + comps);
        prop_assert!(h.iter().all(|r| r.torsion.is_empty()));
        prop_assert_eq!(h[2].betti, 0);
    }

    #[test]
    fn hocolim_over_an_arrow_is_the_target(x in 1usize..4, y in 1usize..4, seed in proptest::collection::vec(0usize..4, 3)) {
        let shape = FinCategory::arrow();
        let f: Vec<usize> = seed[..x].iter().map(|v| v % y).collect();
        let sizes = [x, y];
        let maps: Vec<Vec<usize>> = (0..shape.morphism_count())
            .map(|g| if shape.is_identity(g) { (0..sizes[shape.source(g)]).collect() } else { f.clone() })
            .collect();
        let d = Diagram::from_sets(&shape, &sizes, &maps, 3).unwrap();
        let h = homology_all(&hocolim(&d, 3).unwrap().chains(), Coefficients::Integers);
        prop_assert_eq!(h[0].betti, y);
        prop_assert!(h[1..3].iter().all(|r| r.betti == 0 && r.torsion.is_empty()));
    }
}

#[test]
fn co_yoneda_holds_for_representables() {
    for c in categories() {
        for b in 0..c.object_count() {
            let d = Diagram::corepresentable(&c, b, 3);
            for o in 0..c.object_count() {
                assert!(co_yoneda_check(&d, o, 3).unwrap(), "{:?} at {o}", c.objects());
            }
        }
    }
}

#[test]
fn delta_components_are_equivalences() {
    for c in categories() {
        for comp in delta(&c, 4).unwrap() {
            assert!(comp.is_equivalence(), "{:?} ({}, {})", c.objects(), comp.b, comp.a);
        }
    }
}
