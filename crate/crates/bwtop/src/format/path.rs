use std::fmt::Write;

use bwtop_core::exactalg::Rat;
use bwtop_core::moorezeta::{EmChart, MoorePath, PathValue, RatPoint};
use bwtop_core::simplicial::FinMonoid;

use super::lex::{lines, Ctx};
use crate::error::ParseError;

/// `path r=<length>` followed by `bp <time> <value>` lines. A chart switch
/// inside a path shows up as two breakpoints with the same time.
pub fn write_path<V: PathValue>(p: &MoorePath<V>, show: impl Fn(&V) -> String) -> String {
    let mut s = String::new();
    writeln!(s, "path r={}", p.length()).unwrap();
    writeln!(s, "bp {} {}", Rat::zero(), show(p.start())).unwrap();
    let mut t = Rat::zero();
    let mut prev = p.start();
    for seg in p.segments() {
        if &seg.from != prev {
            writeln!(s, "bp {t} {}", show(&seg.from)).unwrap();
        }
        t = &t + &seg.duration;
        writeln!(s, "bp {t} {}", show(&seg.to)).unwrap();
        prev = &seg.to;
    }
    s
}

pub fn parse_path<V: PathValue>(
    src: &str,
    origin: &str,
    ctx: &V::Ctx,
    value: &dyn Fn(&str) -> Result<V, String>,
) -> Result<MoorePath<V>, ParseError> {
    let cx = Ctx { origin };
    let ls = lines(src);
    let Some(header) = ls.first() else {
        return Err(ParseError::new(origin, 1, 1, "empty path"));
    };
    cx.expect(header, 0, "path")?;
    cx.expect(header, 1, "r")?;
    cx.expect(header, 2, "=")?;
    let rt = cx.need(header, 3, "a length")?;
    let r: Rat = rt.text.parse().map_err(|_| cx.tok(header, rt, "expected a rational length"))?;
    cx.no_more(header, 4)?;
    let mut points = Vec::new();
    for l in &ls[1..] {
        cx.expect(l, 0, "bp")?;
        let tt = cx.need(l, 1, "a time")?;
        let t: Rat = tt.text.parse().map_err(|_| cx.tok(l, tt, format!("expected a rational, found `{}`", tt.text)))?;
        let vt = cx.need(l, 2, "a value")?;
        let text: Vec<&str> = l.toks[2..].iter().map(|t| t.text).collect();
        let v = value(&text.join(" ")).map_err(|m| cx.tok(l, vt, m))?;
        if let Some((last, _)) = points.last() {
            if &t < last {
                return Err(cx.tok(l, tt, "breakpoint times must not decrease"));
            }
        }
        points.push((t, v));
    }
    if points.is_empty() {
        return Err(cx.at(header, header.end_col(), "a path needs at least one breakpoint"));
    }
    let p = MoorePath::from_breakpoints(points, ctx).map_err(|e| cx.at(&ls[1], 1, e.to_string()))?;
    if p.length() != r {
        return Err(cx.tok(header, rt, format!("breakpoints end at {}, not {r}", p.length())));
    }
    Ok(p)
}

fn rat_list(s: &str) -> Result<Vec<Rat>, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("expected a rational, found `{}`", x.trim())))
        .collect()
}

fn bracketed(s: &str, open: char, close: char) -> Result<(&str, &str), String> {
    let s = s.trim_start();
    let rest = s.strip_prefix(open).ok_or_else(|| format!("expected `{open}`"))?;
    let end = rest.find(close).ok_or_else(|| format!("expected `{close}`"))?;
    Ok((&rest[..end], &rest[end + close.len_utf8()..]))
}

/// `pt (a,b,…)`.
pub fn show_point(p: &RatPoint) -> String {
    let xs: Vec<String> = p.0.iter().map(|x| x.to_string()).collect();
    format!("pt ({})", xs.join(","))
}

pub fn parse_point(s: &str) -> Result<RatPoint, String> {
    let rest = s.trim().strip_prefix("pt").ok_or("expected `pt (…)`")?;
    let (inner, tail) = bracketed(rest, '(', ')')?;
    if !tail.trim().is_empty() {
        return Err(format!("unexpected `{}`", tail.trim()));
    }
    Ok(RatPoint(rat_list(inner)?))
}

/// `em (x0;x1,…)@(u0,…)` or `bm (x1,…)@(u0,…)`.
pub fn parse_em(s: &str, m: &FinMonoid) -> Result<EmChart, String> {
    let s = s.trim();
    let (has_lead, rest) = if let Some(r) = s.strip_prefix("em") {
        (true, r)
    } else if let Some(r) = s.strip_prefix("bm") {
        (false, r)
    } else {
        return Err("expected `em` or `bm`".into());
    };
    let (simplex, rest) = bracketed(rest, '(', ')')?;
    let rest = rest.strip_prefix('@').ok_or("expected `@`")?;
    let (coords, tail) = bracketed(rest, '(', ')')?;
    if !tail.trim().is_empty() {
        return Err(format!("unexpected `{}`", tail.trim()));
    }
    let elem = |x: &str| m.index_of(x.trim()).ok_or_else(|| format!("unknown element `{}`", x.trim()));
    let (lead, arrows) = if has_lead {
        let (l, a) = simplex.split_once(';').ok_or("expected `;` after the leading entry")?;
        (Some(elem(l)?), a)
    } else {
        (None, simplex)
    };
    let arrows: Vec<usize> = if arrows.trim().is_empty() {
        Vec::new()
    } else {
        arrows.split(',').map(elem).collect::<Result<_, _>>()?
    };
    EmChart::new(lead, arrows, rat_list(coords)?, m).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use bwtop_core::moorezeta::zeta;
    use bwtop_core::wconstruct::{Mode, WTuple};

    #[test]
    fn zeta_paths_round_trip() {
        let m = FinMonoid::cyclic(3);
        let a = WTuple::normalize(&m, vec![1, 2, 1], vec![Rat::half(), Rat::new(1, 3).unwrap()], Mode::Semigroup).unwrap();
        let p = zeta(&m, &a).unwrap();
        let text = write_path(p.path(), |v| v.display(&m));
        assert!(text.starts_with("path r=11/6\nbp 0/1 em (e;a,a2,a)@("), "{text}");
        let back = parse_path(&text, "p", &m, &|s| parse_em(s, &m)).unwrap();
        assert_eq!(&back, p.path());
        let loop_text = write_path(&p.project(), |v| v.display(&m));
        let back = parse_path(&loop_text, "p", &m, &|s| parse_em(s, &m)).unwrap();
        assert_eq!(back, p.project());
    }

    #[test]
    fn point_paths_round_trip() {
        let p = MoorePath::from_breakpoints(
            vec![
                (Rat::zero(), RatPoint(vec![Rat::zero(), Rat::one()])),
                (Rat::half(), RatPoint(vec![Rat::new(-3, 2).unwrap(), Rat::one()])),
            ],
            &(),
        )
        .unwrap();
        let text = write_path(&p, show_point);
        assert_eq!(text, "path r=1/2\nbp 0/1 pt (0/1,1/1)\nbp 1/2 pt (-3/2,1/1)\n");
        assert_eq!(parse_path(&text, "p", &(), &parse_point).unwrap(), p);
    }

    #[test]
    fn em_points() {
        let m = FinMonoid::cyclic(2);
        let p = parse_em("em (e;a)@(1/2,1/2)", &m).unwrap();
        assert_eq!(p.display(&m), "em (e;a)@(1/2,1/2)");
        assert_eq!(parse_em("bm ()@(1)", &m).unwrap(), EmChart::base());
        assert!(parse_em("em (e;b)@(1/2,1/2)", &m).is_err());
        assert!(parse_em("em (e;a)@(1/2,1/3)", &m).is_err());
    }

    #[test]
    fn path_errors() {
        let e = parse_path::<RatPoint>("path r=2\nbp 0 pt (0)\nbp 1 pt (1)\n", "p", &(), &parse_point).unwrap_err();
        assert_eq!((e.line, e.col), (1, 8));
        let e = parse_path::<RatPoint>("path r=1\nbp 0 pt (0)\nbp 1 pt (x)\n", "p", &(), &parse_point).unwrap_err();
        assert_eq!((e.line, e.col), (3, 6));
    }
}
