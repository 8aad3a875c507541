use bwtop_core::barcat::Diagram;
use bwtop_core::simplicial::{FinCategory, FinMonoid, FinSemigroup};

use crate::format::{parse_category, parse_diagram, parse_monoid, parse_semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Monoid,
    Semigroup,
    Category,
    Diagram,
}

/// A shipped input file.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub kind: Kind,
    pub name: &'static str,
    pub path: &'static str,
    pub text: &'static str,
}

macro_rules! fixture {
    ($kind:ident, $name:literal, $path:literal) => {
        Fixture {
            kind: Kind::$kind,
            name: $name,
            path: concat!("fixtures/", $path),
            text: include_str!(concat!("../fixtures/", $path)),
        }
    };
}

pub const ALL: &[Fixture] = &[
    fixture!(Monoid, "idem", "monoids/idem.txt"),
    fixture!(Monoid, "klein", "monoids/klein.txt"),
    fixture!(Monoid, "lz2-plus", "monoids/lz2-plus.txt"),
    fixture!(Monoid, "nil2", "monoids/nil2.txt"),
    fixture!(Monoid, "rz2-plus", "monoids/rz2-plus.txt"),
    fixture!(Monoid, "s3", "monoids/s3.txt"),
    fixture!(Monoid, "trivial", "monoids/trivial.txt"),
    fixture!(Monoid, "trunc3", "monoids/trunc3.txt"),
    fixture!(Monoid, "z2", "monoids/z2.txt"),
    fixture!(Monoid, "z2xidem", "monoids/z2xidem.txt"),
    fixture!(Monoid, "z3", "monoids/z3.txt"),
    fixture!(Monoid, "z4", "monoids/z4.txt"),
    fixture!(Semigroup, "chain3", "semigroups/chain3.txt"),
    fixture!(Semigroup, "left-zero2", "semigroups/left-zero2.txt"),
    fixture!(Semigroup, "left-zero3", "semigroups/left-zero3.txt"),
    fixture!(Semigroup, "nil3", "semigroups/nil3.txt"),
    fixture!(Semigroup, "null2", "semigroups/null2.txt"),
    fixture!(Semigroup, "null3", "semigroups/null3.txt"),
    fixture!(Semigroup, "rect2x2", "semigroups/rect2x2.txt"),
    fixture!(Semigroup, "right-zero2", "semigroups/right-zero2.txt"),
    fixture!(Semigroup, "singleton", "semigroups/singleton.txt"),
    fixture!(Semigroup, "z2", "semigroups/z2.txt"),
    fixture!(Category, "arrow", "categories/arrow.txt"),
    fixture!(Category, "composable", "categories/composable.txt"),
    fixture!(Category, "cospan", "categories/cospan.txt"),
    fixture!(Category, "discrete2", "categories/discrete2.txt"),
    fixture!(Category, "idem-arrow", "categories/idem-arrow.txt"),
    fixture!(Category, "iso", "categories/iso.txt"),
    fixture!(Category, "parallel", "categories/parallel.txt"),
    fixture!(Category, "retract", "categories/retract.txt"),
    fixture!(Category, "span", "categories/span.txt"),
    fixture!(Category, "terminal", "categories/terminal.txt"),
    fixture!(Category, "z2", "categories/z2.txt"),
    fixture!(Diagram, "arrow-sets", "diagrams/arrow-sets.txt"),
    fixture!(Diagram, "coeq-points", "diagrams/coeq-points.txt"),
    fixture!(Diagram, "iso-circle", "diagrams/iso-circle.txt"),
    fixture!(Diagram, "span-sets", "diagrams/span-sets.txt"),
    fixture!(Diagram, "susp-s0", "diagrams/susp-s0.txt"),
    fixture!(Diagram, "susp-s1", "diagrams/susp-s1.txt"),
];

pub fn find(kind: Kind, name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.kind == kind && f.name == name)
}

pub fn of_kind(kind: Kind) -> impl Iterator<Item = &'static Fixture> {
    ALL.iter().filter(move |f| f.kind == kind)
}

pub fn monoid(name: &str) -> Option<FinMonoid> {
    find(Kind::Monoid, name).map(|f| parse_monoid(f.text, f.path).expect("shipped fixtures parse"))
}

/// Semigroup fixtures, falling back to monoid fixtures with the unit
/// forgotten.
pub fn semigroup(name: &str) -> Option<FinSemigroup> {
    find(Kind::Semigroup, name)
        .or_else(|| find(Kind::Monoid, name))
        .map(|f| parse_semigroup(f.text, f.path).expect("shipped fixtures parse"))
}

pub fn category(name: &str) -> Option<FinCategory> {
    find(Kind::Category, name).map(|f| parse_category(f.text, f.path).expect("shipped fixtures parse"))
}

pub fn diagram(name: &str, maxdim: usize) -> Option<Diagram> {
    find(Kind::Diagram, name).map(|f| parse_diagram(f.text, f.path, maxdim, &category).expect("shipped fixtures parse"))
}

pub fn monoids() -> Vec<(&'static str, FinMonoid)> {
    of_kind(Kind::Monoid).map(|f| (f.name, monoid(f.name).unwrap())).collect()
}

/// Every semigroup fixture followed by every monoid fixture viewed as a
/// semigroup.
pub fn semigroups() -> Vec<(&'static str, FinSemigroup)> {
    of_kind(Kind::Semigroup)
        .chain(of_kind(Kind::Monoid))
        .map(|f| (f.name, parse_semigroup(f.text, f.path).unwrap()))
        .collect()
}

pub fn categories() -> Vec<(&'static str, FinCategory)> {
    of_kind(Kind::Category).map(|f| (f.name, category(f.name).unwrap())).collect()
}

pub fn diagrams(maxdim: usize) -> Vec<(&'static str, Diagram)> {
    of_kind(Kind::Diagram).map(|f| (f.name, diagram(f.name, maxdim).unwrap())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        assert_eq!(monoids().len(), of_kind(Kind::Monoid).count());
        assert!(semigroups().len() > monoids().len());
        assert!(categories().iter().all(|(_, c)| c.object_count() <= 3 && c.morphism_count() <= 6));
        assert_eq!(diagrams(3).len(), of_kind(Kind::Diagram).count());
    }

    #[test]
    fn named_fixtures_match_builtins() {
        assert_eq!(monoid("z3").unwrap(), FinMonoid::cyclic(3));
        assert_eq!(monoid("klein").unwrap().size(), 4);
        assert!(monoid("s3").unwrap().is_group());
        assert!(!monoid("s3").unwrap().is_commutative());
        assert_eq!(semigroup("z2").unwrap().size(), 2);
        assert!(semigroup("trunc3").is_some());
        assert_eq!(category("span").unwrap().morphism_count(), 5);
    }
}
