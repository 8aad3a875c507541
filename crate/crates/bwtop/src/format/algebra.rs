use std::collections::BTreeMap;
use std::fmt::Write;

use bwtop_core::simplicial::{FinCategory, FinMonoid, FinSemigroup, Morphism};

use super::lex::{lines, Ctx, Line, Tok};
use crate::error::ParseError;

/// A parsed `monoid` or `semigroup` block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Table {
    Monoid(FinMonoid),
    Semigroup(FinSemigroup),
}

impl Table {
    pub fn semigroup(&self) -> &FinSemigroup {
        match self {
            Table::Monoid(m) => m.as_semigroup(),
            Table::Semigroup(g) => g,
        }
    }
}

fn name_list<'a>(cx: &Ctx<'_>, l: &Line<'a>, from: usize, seen: &mut Vec<&'a str>) -> Result<(), ParseError> {
    for t in &l.toks[from..] {
        if t.text == ":" || t.text == "=" {
            return Err(cx.tok(l, *t, format!("unexpected `{}`", t.text)));
        }
        if seen.contains(&t.text) {
            return Err(cx.tok(l, *t, format!("`{}` declared twice", t.text)));
        }
        seen.push(t.text);
    }
    Ok(())
}

/// Parses `monoid <name>` / `semigroup <name>` with `elements …`, an
/// optional `unit x` (monoids only) and one `row x: …` per left factor.
pub fn parse_table(src: &str, origin: &str) -> Result<Table, ParseError> {
    let cx = Ctx { origin };
    let ls = lines(src);
    let Some(header) = ls.first() else {
        return Err(ParseError::new(origin, 1, 1, "empty table file"));
    };
    let is_monoid = match header.head() {
        "monoid" => true,
        "semigroup" => false,
        other => return Err(cx.tok(header, header.toks[0], format!("expected `monoid` or `semigroup`, found `{other}`"))),
    };
    cx.need(header, 1, "a name")?;
    cx.no_more(header, 2)?;
    let mut elems: Vec<&str> = Vec::new();
    let mut elements_line: Option<&Line<'_>> = None;
    let mut unit: Option<(usize, &Line<'_>, Tok<'_>)> = None;
    let mut rows: Vec<Option<(Vec<usize>, &Line<'_>)>> = Vec::new();
    let lookup = |elems: &[&str], l: &Line<'_>, t: Tok<'_>| -> Result<usize, ParseError> {
        elems
            .iter()
            .position(|&e| e == t.text)
            .ok_or_else(|| cx.tok(l, t, format!("unknown element `{}`", t.text)))
    };
    for l in &ls[1..] {
        match l.head() {
            "elements" => {
                if elements_line.is_some() {
                    return Err(cx.tok(l, l.toks[0], "elements declared twice"));
                }
                name_list(&cx, l, 1, &mut elems)?;
                if elems.is_empty() {
                    return Err(cx.at(l, l.end_col(), "expected at least one element"));
                }
                rows = vec![None; elems.len()];
                elements_line = Some(l);
            }
            "unit" => {
                if !is_monoid {
                    return Err(cx.tok(l, l.toks[0], "a semigroup block has no unit"));
                }
                if elements_line.is_none() {
                    return Err(cx.tok(l, l.toks[0], "`elements` must come first"));
                }
                if unit.is_some() {
                    return Err(cx.tok(l, l.toks[0], "unit declared twice"));
                }
                let t = cx.need(l, 1, "the unit")?;
                unit = Some((lookup(&elems, l, t)?, l, t));
                cx.no_more(l, 2)?;
            }
            "row" => {
                if elements_line.is_none() {
                    return Err(cx.tok(l, l.toks[0], "`elements` must come first"));
                }
                let t = cx.need(l, 1, "a left factor")?;
                let a = lookup(&elems, l, t)?;
                cx.expect(l, 2, ":")?;
                if rows[a].is_some() {
                    return Err(cx.tok(l, t, format!("row `{}` given twice", t.text)));
                }
                let entries: Vec<usize> = l.toks[3..]
                    .iter()
                    .map(|&e| lookup(&elems, l, e))
                    .collect::<Result<_, _>>()?;
                if entries.len() != elems.len() {
                    let col = l.toks.get(3 + elems.len()).map_or(l.end_col(), |t| t.col);
                    return Err(cx.at(l, col, format!("row `{}` needs {} entries, found {}", t.text, elems.len(), entries.len())));
                }
                rows[a] = Some((entries, l));
            }
            other => return Err(cx.tok(l, l.toks[0], format!("unknown directive `{other}`"))),
        }
    }
    let Some(el) = elements_line else {
        return Err(cx.at(header, header.end_col(), "missing `elements` line"));
    };
    if let Some(a) = rows.iter().position(|r| r.is_none()) {
        return Err(cx.at(el, el.toks[1 + a].col, format!("no row for `{}`", elems[a])));
    }
    let rows: Vec<(Vec<usize>, &Line<'_>)> = rows.into_iter().map(Option::unwrap).collect();
    let n = elems.len();
    let mul = |a: usize, b: usize| rows[a].0[b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    let (_, l) = &rows[a];
                    return Err(cx.tok(
                        l,
                        l.toks[3 + b],
                        format!("not associative: ({0}{1}){2} ≠ {0}({1}{2})", elems[a], elems[b], elems[c]),
                    ));
                }
            }
        }
    }
    let names: Vec<String> = elems.iter().map(|s| s.to_string()).collect();
    let table: Vec<Vec<usize>> = rows.iter().map(|(r, _)| r.clone()).collect();
    let sg = FinSemigroup::new(names, table).map_err(|e| cx.at(header, 1, e.to_string()))?;
    if !is_monoid {
        return Ok(Table::Semigroup(sg));
    }
    let Some((u, l, t)) = unit else {
        return Err(cx.at(header, header.end_col(), "missing `unit` line"));
    };
    if let Some(x) = (0..n).find(|&x| mul(u, x) != x || mul(x, u) != x) {
        return Err(cx.tok(l, t, format!("`{}` is not a unit: fails against `{}`", elems[u], elems[x])));
    }
    FinMonoid::from_semigroup(sg, u)
        .map(Table::Monoid)
        .map_err(|e| cx.tok(l, t, e.to_string()))
}

pub fn parse_monoid(src: &str, origin: &str) -> Result<FinMonoid, ParseError> {
    match parse_table(src, origin)? {
        Table::Monoid(m) => Ok(m),
        Table::Semigroup(_) => Err(ParseError::new(origin, 1, 1, "expected a monoid, found a semigroup")),
    }
}

/// Monoid files are accepted too, forgetting the unit.
pub fn parse_semigroup(src: &str, origin: &str) -> Result<FinSemigroup, ParseError> {
    Ok(parse_table(src, origin)?.semigroup().clone())
}

fn write_elements(s: &mut String, g: &FinSemigroup) {
    writeln!(s, "elements {}", g.names().join(" ")).unwrap();
}

fn write_table_rows(s: &mut String, g: &FinSemigroup) {
    for a in 0..g.size() {
        let row: Vec<&str> = (0..g.size()).map(|b| g.name(g.mul(a, b))).collect();
        writeln!(s, "row {}: {}", g.name(a), row.join(" ")).unwrap();
    }
}

pub fn write_monoid(name: &str, m: &FinMonoid) -> String {
    let mut s = format!("monoid {name}\n");
    write_elements(&mut s, m.as_semigroup());
    writeln!(s, "unit {}", m.name(m.unit())).unwrap();
    write_table_rows(&mut s, m.as_semigroup());
    s
}

pub fn write_semigroup(name: &str, g: &FinSemigroup) -> String {
    let mut s = format!("semigroup {name}\n");
    write_elements(&mut s, g);
    write_table_rows(&mut s, g);
    s
}

/// Parses `category <name>`, `objects …`, `hom a b: f g …` and
/// `comp f g = h` (first `f`, then `g`; so `h = g ∘ f`). Identities are
/// implicit and named `id_<object>`; composites with them are automatic.
pub fn parse_category(src: &str, origin: &str) -> Result<FinCategory, ParseError> {
    let ls = lines(src);
    parse_category_lines(&ls, origin)
}

pub(crate) fn parse_category_lines(ls: &[Line<'_>], origin: &str) -> Result<FinCategory, ParseError> {
    let cx = Ctx { origin };
    let Some(header) = ls.first() else {
        return Err(ParseError::new(origin, 1, 1, "empty category file"));
    };
    cx.expect(header, 0, "category")?;
    cx.need(header, 1, "a name")?;
    cx.no_more(header, 2)?;
    let mut objects: Vec<&str> = Vec::new();
    let mut have_objects = false;
    let mut morphisms: Vec<Morphism> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut declared: Vec<&Line<'_>> = Vec::new();
    let mut comps: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut comp_lines: Vec<(&Line<'_>, Tok<'_>, Tok<'_>, Tok<'_>)> = Vec::new();
    for l in &ls[1..] {
        match l.head() {
            "objects" => {
                if have_objects {
                    return Err(cx.tok(l, l.toks[0], "objects declared twice"));
                }
                name_list(&cx, l, 1, &mut objects)?;
                if objects.is_empty() {
                    return Err(cx.at(l, l.end_col(), "expected at least one object"));
                }
                have_objects = true;
                for (o, name) in objects.iter().enumerate() {
                    morphisms.push(Morphism {
                        name: format!("id_{name}"),
                        source: o,
                        target: o,
                    });
                    names.push(format!("id_{name}"));
                    declared.push(l);
                }
            }
            "hom" => {
                if !have_objects {
                    return Err(cx.tok(l, l.toks[0], "`objects` must come first"));
                }
                let obj = |i: usize| -> Result<usize, ParseError> {
                    let t = cx.need(l, i, "an object")?;
                    objects
                        .iter()
                        .position(|&o| o == t.text)
                        .ok_or_else(|| cx.tok(l, t, format!("unknown object `{}`", t.text)))
                };
                let (s, t) = (obj(1)?, obj(2)?);
                cx.expect(l, 3, ":")?;
                for tok in &l.toks[4..] {
                    if names.iter().any(|n| n == tok.text) {
                        return Err(cx.tok(l, *tok, format!("morphism `{}` declared twice", tok.text)));
                    }
                    if tok.text == ":" || tok.text == "=" {
                        return Err(cx.tok(l, *tok, format!("unexpected `{}`", tok.text)));
                    }
                    names.push(tok.text.to_string());
                    morphisms.push(Morphism {
                        name: tok.text.to_string(),
                        source: s,
                        target: t,
                    });
                    declared.push(l);
                }
            }
            "comp" => {
                let f = cx.need(l, 1, "a morphism")?;
                let g = cx.need(l, 2, "a morphism")?;
                cx.expect(l, 3, "=")?;
                let h = cx.need(l, 4, "a morphism")?;
                cx.no_more(l, 5)?;
                comp_lines.push((l, f, g, h));
            }
            other => return Err(cx.tok(l, l.toks[0], format!("unknown directive `{other}`"))),
        }
    }
    if !have_objects {
        return Err(cx.at(header, header.end_col(), "missing `objects` line"));
    }
    let k = objects.len();
    let find = |l: &Line<'_>, t: Tok<'_>| -> Result<usize, ParseError> {
        names
            .iter()
            .position(|n| n == t.text)
            .ok_or_else(|| cx.tok(l, t, format!("unknown morphism `{}`", t.text)))
    };
    for (l, f, g, h) in comp_lines {
        let (fi, gi, hi) = (find(l, f)?, find(l, g)?, find(l, h)?);
        if fi < k || gi < k {
            let t = if fi < k { f } else { g };
            return Err(cx.tok(l, t, "composites with identities are implicit"));
        }
        if morphisms[fi].target != morphisms[gi].source {
            return Err(cx.tok(l, g, format!("`{}` does not start where `{}` ends", g.text, f.text)));
        }
        if morphisms[hi].source != morphisms[fi].source || morphisms[hi].target != morphisms[gi].target {
            return Err(cx.tok(l, h, format!("`{}` has the wrong endpoints for {} ∘ {}", h.text, g.text, f.text)));
        }
        if comps.insert((gi, fi), hi).is_some() {
            return Err(cx.tok(l, f, format!("composite of `{}` then `{}` given twice", f.text, g.text)));
        }
    }
    let m = morphisms.len();
    for g in k..m {
        for f in k..m {
            if morphisms[g].source == morphisms[f].target && !comps.contains_key(&(g, f)) {
                let l = declared[g];
                let col = l.toks.iter().find(|t| t.text == names[g]).map_or(1, |t| t.col);
                return Err(cx.at(l, col, format!("missing `comp {} {} = …`", names[f], names[g])));
            }
        }
    }
    let ids: Vec<usize> = (0..k).collect();
    let obj_names = objects.iter().map(|s| s.to_string()).collect();
    FinCategory::from_table(obj_names, morphisms, ids, |g, f| {
        if g < k {
            Some(f)
        } else if f < k {
            Some(g)
        } else {
            comps.get(&(g, f)).copied()
        }
    })
    .map_err(|e| cx.at(header, 1, e.to_string()))
}

pub fn write_category(name: &str, c: &FinCategory) -> String {
    let mut s = format!("category {name}\nobjects {}\n", c.objects().join(" "));
    let arrows: Vec<usize> = (0..c.morphism_count()).filter(|&f| !c.is_identity(f)).collect();
    let mut pairs: Vec<((usize, usize), Vec<&str>)> = Vec::new();
    for &f in &arrows {
        let key = (c.source(f), c.target(f));
        match pairs.iter_mut().find(|(k, _)| *k == key) {
            Some((_, fs)) => fs.push(&c.morphism(f).name),
            None => pairs.push((key, vec![&c.morphism(f).name])),
        }
    }
    for ((a, b), fs) in pairs {
        writeln!(s, "hom {} {}: {}", c.object_name(a), c.object_name(b), fs.join(" ")).unwrap();
    }
    for &f in &arrows {
        for &g in &arrows {
            if let Some(h) = c.compose(g, f) {
                writeln!(s, "comp {} {} = {}", c.morphism(f).name, c.morphism(g).name, c.morphism(h).name).unwrap();
            }
        }
    }
    s
}
