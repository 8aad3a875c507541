use bwtop_core::exactalg::Rat;
use bwtop_core::wconstruct::{Mode, Semigroup, WTuple};

use crate::error::ParseError;

/// Splits `text` into whitespace-separated tokens with 1-based columns.
fn words(text: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (b, c)) in text.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some((sb, sc)) = start.take() {
                out.push((&text[sb..b], sc));
            }
        } else if start.is_none() {
            start = Some((b, col + 1));
        }
    }
    if let Some((sb, sc)) = start {
        out.push((&text[sb..], sc));
    }
    out
}

/// Parses `(x0 t1 x1 … tn xn)` or `w: x0 t1 x1 …`; `(e)` is also accepted
/// as the unit in monoid mode. `col0` is added to reported columns.
pub fn parse_wtuple<G: Semigroup>(
    text: &str,
    origin: &str,
    col0: usize,
    g: &G,
    resolve: &dyn Fn(&str) -> Option<G::Elem>,
    mode: Mode,
) -> Result<WTuple<G::Elem>, ParseError>
where
    G::Elem: Clone + Eq + Ord + std::fmt::Debug,
{
    let err = |col: usize, msg: String| ParseError::new(origin, 1, col0 + col, msg);
    let trimmed = text.trim_end();
    let lead = trimmed.len() - trimmed.trim_start().len();
    let body = trimmed.trim_start();
    let (inner, inner_col) = if let Some(rest) = body.strip_prefix("w:") {
        (rest, lead + 3)
    } else if body.starts_with('(') {
        if !body.ends_with(')') {
            return Err(err(lead + body.chars().count(), "expected `)`".into()));
        }
        (&body[1..body.len() - 1], lead + 2)
    } else {
        return Err(err(lead + 1, "expected `(` or `w:`".into()));
    };
    let toks = words(inner);
    let toks: Vec<(&str, usize)> = toks.into_iter().map(|(t, c)| (t, c + inner_col - 1)).collect();
    if toks.is_empty() {
        return Err(err(inner_col, "a tuple needs at least one entry".into()));
    }
    if toks.len().is_multiple_of(2) {
        let (t, c) = toks[toks.len() - 1];
        return Err(err(c + t.chars().count(), "a tuple ends with an entry".into()));
    }
    if mode == Mode::Monoid && toks.len() == 1 && toks[0].0 == "e" && resolve("e").is_none() {
        return Ok(WTuple::unit());
    }
    let mut entries = Vec::new();
    let mut params = Vec::new();
    for (k, (t, c)) in toks.iter().enumerate() {
        if k % 2 == 0 {
            entries.push(resolve(t).ok_or_else(|| err(*c, format!("unknown element `{t}`")))?);
        } else {
            let r: Rat = t.parse().map_err(|_| err(*c, format!("expected a rational, found `{t}`")))?;
            if !r.in_unit_interval() {
                return Err(err(*c, format!("parameter {r} outside [0, 1]")));
            }
            params.push(r);
        }
    }
    WTuple::normalize(g, entries, params, mode).map_err(|e| err(1, e.to_string()))
}

/// `w: x0 t1 x1 …`, or `w: e` for the unit.
pub fn write_wtuple<G: Semigroup>(a: &WTuple<G::Elem>, g: &G) -> String
where
    G::Elem: Clone + Eq + Ord + std::fmt::Debug,
{
    let shown = a.display(g);
    format!("w: {}", &shown[1..shown.len() - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use bwtop_core::simplicial::FinMonoid;
    use bwtop_core::wconstruct::FreeMonoid;

    fn free(s: &str) -> Option<Vec<String>> {
        Some(if s == "e" { Vec::new() } else { s.split(['·', '*']).map(str::to_string).collect() })
    }

    #[test]
    fn both_syntaxes_agree() {
        let a = parse_wtuple("(x 1/2 y)", "t", 0, &FreeMonoid, &free, Mode::Semigroup).unwrap();
        let b = parse_wtuple("w: x 1/2 y", "t", 0, &FreeMonoid, &free, Mode::Semigroup).unwrap();
        assert_eq!(a, b);
        assert_eq!(write_wtuple(&a, &FreeMonoid), "w: x 1/2 y");
        assert_eq!(a.display(&FreeMonoid), "(x 1/2 y)");
    }

    #[test]
    fn parsing_normalizes() {
        let a = parse_wtuple("(x 0 y)", "t", 0, &FreeMonoid, &free, Mode::Semigroup).unwrap();
        assert_eq!(a.display(&FreeMonoid), "(x·y)");
        let z2 = FinMonoid::cyclic(2);
        let names = |s: &str| z2.index_of(s);
        let u = parse_wtuple("(e 1/2 e)", "t", 0, &z2, &names, Mode::Monoid).unwrap();
        assert!(u.is_unit());
        assert_eq!(write_wtuple(&u, &z2), "w: e");
        let back = parse_wtuple("w: e", "t", 0, &z2, &names, Mode::Monoid).unwrap();
        assert!(back.is_unit());
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_wtuple("(x 3/2 y)", "t", 10, &FreeMonoid, &free, Mode::Semigroup).unwrap_err();
        assert_eq!(e.col, 14);
        let z2 = FinMonoid::cyclic(2);
        let names = |s: &str| z2.index_of(s);
        let e = parse_wtuple("(a 1/2 b)", "t", 0, &z2, &names, Mode::Semigroup).unwrap_err();
        assert_eq!(e.col, 8);
        let e = parse_wtuple("(a 1/2)", "t", 0, &z2, &names, Mode::Semigroup).unwrap_err();
        assert_eq!(e.col, 7);
        let e = parse_wtuple("(a 1/2 a", "t", 0, &z2, &names, Mode::Semigroup).unwrap_err();
        assert!(e.msg.contains(')'));
    }
}
