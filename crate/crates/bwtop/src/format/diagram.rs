use bwtop_core::barcat::{Diagram, SimplicialMap};
use bwtop_core::simplicial::{FinCategory, Simplex, SimplicialSet};

use super::algebra::parse_category_lines;
use super::lex::{lines, Ctx, Line};
use crate::error::ParseError;

fn parse_sset(cx: &Ctx<'_>, l: &Line<'_>, from: usize, maxdim: usize) -> Result<SimplicialSet, ParseError> {
    let kind = cx.need(l, from, "a simplicial set")?;
    let arg = |what: &str| -> Result<usize, ParseError> { cx.usize(l, cx.need(l, from + 1, what)?) };
    let (x, used) = match kind.text {
        "point" => (SimplicialSet::point(maxdim), 1),
        "s0" => (SimplicialSet::s0(maxdim), 1),
        "circle" => (SimplicialSet::circle(maxdim), 1),
        "discrete" => {
            let k = arg("a number of points")?;
            if k == 0 {
                return Err(cx.tok(l, l.toks[from + 1], "a discrete set needs at least one point"));
            }
            (SimplicialSet::discrete(k, maxdim), 2)
        }
        "sphere" => {
            let n = arg("a dimension")?;
            (SimplicialSet::sphere(n, maxdim), 2)
        }
        other => {
            return Err(cx.tok(
                l,
                kind,
                format!("unknown simplicial set `{other}` (point, s0, circle, discrete k, sphere n)"),
            ))
        }
    };
    cx.no_more(l, from + used)?;
    Ok(x)
}

/// Parses `diagram over <category>` with `at <object> = <set>` and one
/// `arrow <f>: …` line per non-identity morphism. Sets are `point`, `s0`,
/// `circle`, `discrete k` or `sphere n`; maps are `id`, `const v` or a list
/// of vertex images (for discrete sources). The category is either a
/// `category` block earlier in the same input or found through `resolve`.
pub fn parse_diagram(
    src: &str,
    origin: &str,
    maxdim: usize,
    resolve: &dyn Fn(&str) -> Option<FinCategory>,
) -> Result<Diagram, ParseError> {
    let cx = Ctx { origin };
    let ls = lines(src);
    let Some(start) = ls.iter().position(|l| l.head() == "diagram") else {
        let (line, col) = ls.first().map_or((1, 1), |l| (l.no, 1));
        return Err(ParseError::new(origin, line, col, "missing `diagram over …` line"));
    };
    let header = &ls[start];
    cx.expect(header, 1, "over")?;
    let cat_tok = cx.need(header, 2, "a category")?;
    cx.no_more(header, 3)?;
    let c = if start > 0 {
        let inline = &ls[..start];
        let name = cx.need(&inline[0], 1, "a name")?;
        if name.text != cat_tok.text {
            return Err(cx.tok(header, cat_tok, format!("this file defines category `{}`", name.text)));
        }
        parse_category_lines(inline, origin)?
    } else {
        resolve(cat_tok.text).ok_or_else(|| cx.tok(header, cat_tok, format!("unknown category `{}`", cat_tok.text)))?
    };
    let mut values: Vec<Option<SimplicialSet>> = vec![None; c.object_count()];
    let mut maps: Vec<Option<(&Line<'_>, usize)>> = vec![None; c.morphism_count()];
    for l in &ls[start + 1..] {
        match l.head() {
            "at" => {
                let t = cx.need(l, 1, "an object")?;
                let o = c
                    .object_index(t.text)
                    .ok_or_else(|| cx.tok(l, t, format!("unknown object `{}`", t.text)))?;
                cx.expect(l, 2, "=")?;
                if values[o].is_some() {
                    return Err(cx.tok(l, t, format!("value at `{}` given twice", t.text)));
                }
                values[o] = Some(parse_sset(&cx, l, 3, maxdim)?);
            }
            "arrow" => {
                let t = cx.need(l, 1, "a morphism")?;
                let f = c
                    .morphism_index(t.text)
                    .ok_or_else(|| cx.tok(l, t, format!("unknown morphism `{}`", t.text)))?;
                if c.is_identity(f) {
                    return Err(cx.tok(l, t, "identities are mapped to identities automatically"));
                }
                cx.expect(l, 2, ":")?;
                if maps[f].is_some() {
                    return Err(cx.tok(l, t, format!("arrow `{}` given twice", t.text)));
                }
                maps[f] = Some((l, 3));
            }
            "category" | "diagram" => return Err(cx.tok(l, l.toks[0], "only one diagram per file")),
            other => return Err(cx.tok(l, l.toks[0], format!("unknown directive `{other}`"))),
        }
    }
    let values: Vec<SimplicialSet> = values
        .into_iter()
        .enumerate()
        .map(|(o, v)| v.ok_or_else(|| cx.at(header, header.end_col(), format!("no value at `{}`", c.object_name(o)))))
        .collect::<Result<_, _>>()?;
    let mut arrows = Vec::with_capacity(c.morphism_count());
    for f in 0..c.morphism_count() {
        let (s, t) = (&values[c.source(f)], &values[c.target(f)]);
        if c.is_identity(f) {
            arrows.push(SimplicialMap::identity(s));
            continue;
        }
        let Some((l, from)) = maps[f] else {
            return Err(cx.at(header, header.end_col(), format!("no map for `{}`", c.morphism(f).name)));
        };
        arrows.push(parse_map(&cx, l, from, s, t)?);
    }
    Diagram::new(c, values, arrows).map_err(|e| cx.at(header, 1, e.to_string()))
}

fn parse_map(
    cx: &Ctx<'_>,
    l: &Line<'_>,
    from: usize,
    s: &SimplicialSet,
    t: &SimplicialSet,
) -> Result<SimplicialMap, ParseError> {
    let first = cx.need(l, from, "`id`, `const v` or vertex images")?;
    let positioned = |e: bwtop_core::Error| cx.tok(l, first, e.to_string());
    match first.text {
        "id" => {
            cx.no_more(l, from + 1)?;
            if s != t {
                return Err(cx.tok(l, first, "`id` needs equal source and target"));
            }
            Ok(SimplicialMap::identity(s))
        }
        "const" => {
            let vt = cx.need(l, from + 1, "a vertex")?;
            let v = cx.usize(l, vt)?;
            cx.no_more(l, from + 2)?;
            if v >= t.count(0) {
                return Err(cx.tok(l, vt, format!("target has {} vertices", t.count(0))));
            }
            SimplicialMap::constant(s, t, v).map_err(positioned)
        }
        _ => {
            if (1..=s.maxdim()).any(|n| s.count(n) > 0) {
                return Err(cx.tok(l, first, "vertex lists need a discrete source"));
            }
            let toks = &l.toks[from..];
            if toks.len() != s.count(0) {
                return Err(cx.tok(l, first, format!("expected {} vertex images, found {}", s.count(0), toks.len())));
            }
            let mut images = vec![Vec::new(); s.maxdim() + 1];
            for tok in toks {
                let v = cx.usize(l, *tok)?;
                if v >= t.count(0) {
                    return Err(cx.tok(l, *tok, format!("target has {} vertices", t.count(0))));
                }
                images[0].push(Simplex::generator(0, v));
            }
            SimplicialMap::new(s.clone(), t.clone(), images).map_err(positioned)
        }
    }
}
