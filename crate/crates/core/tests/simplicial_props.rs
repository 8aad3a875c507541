use bwtop_core::exactalg::{homology, homology_all, AbelianGroup, Coefficients};
use bwtop_core::simplicial::{adjoin_unit, nerve, semigroup_nerve, FinMonoid, FinSemigroup};
use proptest::prelude::*;

fn all_monoids(max: usize) -> Vec<FinMonoid> {
    (1..=max).flat_map(FinMonoid::enumerate).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn table_validation_rejects_random_non_associative_tables(
        t in proptest::collection::vec(proptest::collection::vec(0usize..3, 3), 3)
    ) {
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let assoc = (0..3).all(|a| (0..3).all(|b| (0..3).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        prop_assert_eq!(FinSemigroup::new(names, t).is_ok(), assoc);
    }
}

#[test]
fn nerve_boundaries_square_to_zero_for_all_monoids_up_to_order_five() {
    for m in all_monoids(5) {
        let c = nerve(&m, 5).chains();
        for n in 2..=5 {
            let dd = c.boundary(n - 1).unwrap().mul(c.boundary(n).unwrap()).unwrap();
            assert!(dd.is_zero(), "{:?} degree {n}", m.names());
        }
    }
}

#[test]
fn first_homology_of_small_groups_is_the_abelianization() {
    for g in all_monoids(4).into_iter().filter(FinMonoid::is_group) {
        let h1 = homology(&nerve(&g, 3).chains(), 1, Coefficients::Integers).unwrap().group();
        let (ab, _) = g.abelianization();
        let orders: Vec<u64> = (0..ab.size())
            .map(|x| (1..=ab.size() as u64).find(|&k| ab.product_of(&vec![x; k as usize]) == ab.unit()).unwrap())
            .collect();
        // a finite abelian group of order ≤ 4 is cyclic iff it has an element of full order
        let expect = if ab.size() == 1 {
            AbelianGroup::trivial()
        } else if orders.contains(&(ab.size() as u64)) {
            AbelianGroup::cyclic(ab.size() as u64)
        } else {
            AbelianGroup::new(0, &[2.into(), 2.into()])
        };
        assert_eq!(h1, expect, "{:?}", g.names());
    }
}

#[test]
fn fat_nerves_agree_with_nerves_of_adjoined_units() {
    let mut semigroups: Vec<FinSemigroup> = all_monoids(3).iter().map(|m| m.as_semigroup().clone()).collect();
    semigroups.extend([
        FinSemigroup::left_zero(2),
        FinSemigroup::right_zero(2),
        FinSemigroup::null(3),
        FinSemigroup::left_zero(3),
    ]);
    for g in &semigroups {
        let fat = homology_all(&semigroup_nerve(g, 4).chains(), Coefficients::Integers);
        let plus = homology_all(&nerve(&adjoin_unit(g), 4).chains(), Coefficients::Integers);
        for n in 0..4 {
            assert_eq!(fat[n].group(), plus[n].group(), "{:?} degree {n}", g.table());
        }
    }
}
