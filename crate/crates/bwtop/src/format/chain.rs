use std::fmt::Write;

use bwtop_core::exactalg::{BigInt, ChainComplex, IntMatrix};

use super::lex::{lines, Ctx};
use crate::error::ParseError;

/// `chain D`, then `dim n r` for `n = 0..=D`, then `bd n row col value` for
/// every nonzero entry of `∂_n`, sorted.
pub fn write_chain(c: &ChainComplex) -> String {
    let mut s = String::new();
    writeln!(s, "chain {}", c.top_degree()).unwrap();
    for (n, r) in c.dims().iter().enumerate() {
        writeln!(s, "dim {n} {r}").unwrap();
    }
    for n in 1..=c.top_degree() {
        for (i, j, v) in c.boundary(n).unwrap().entries() {
            writeln!(s, "bd {n} {i} {j} {v}").unwrap();
        }
    }
    s
}

pub fn parse_chain(src: &str, origin: &str) -> Result<ChainComplex, ParseError> {
    let cx = Ctx { origin };
    let ls = lines(src);
    let Some(first) = ls.first() else {
        return Err(ParseError::new(origin, 1, 1, "empty chain complex file"));
    };
    cx.expect(first, 0, "chain")?;
    let top = cx.usize(first, cx.need(first, 1, "top degree")?)?;
    cx.no_more(first, 2)?;
    let mut dims: Vec<Option<usize>> = vec![None; top + 1];
    let mut entries: Vec<Vec<(usize, usize, BigInt)>> = vec![Vec::new(); top + 1];
    let mut seen = std::collections::BTreeSet::new();
    for l in &ls[1..] {
        match l.head() {
            "dim" => {
                let nt = cx.need(l, 1, "degree")?;
                let n = cx.usize(l, nt)?;
                if n > top {
                    return Err(cx.tok(l, nt, format!("degree {n} exceeds top degree {top}")));
                }
                if dims[n].is_some() {
                    return Err(cx.tok(l, nt, format!("degree {n} declared twice")));
                }
                dims[n] = Some(cx.usize(l, cx.need(l, 2, "rank")?)?);
                cx.no_more(l, 3)?;
            }
            "bd" => {
                let nt = cx.need(l, 1, "degree")?;
                let n = cx.usize(l, nt)?;
                if n == 0 || n > top {
                    return Err(cx.tok(l, nt, format!("no boundary map in degree {n}")));
                }
                let (Some(rows), Some(cols)) = (dims[n - 1], dims[n]) else {
                    return Err(cx.tok(l, nt, format!("ranks of degrees {} and {n} must be declared first", n - 1)));
                };
                let it = cx.need(l, 2, "row")?;
                let i = cx.usize(l, it)?;
                let jt = cx.need(l, 3, "column")?;
                let j = cx.usize(l, jt)?;
                if i >= rows {
                    return Err(cx.tok(l, it, format!("row {i} out of range for {rows} rows")));
                }
                if j >= cols {
                    return Err(cx.tok(l, jt, format!("column {j} out of range for {cols} columns")));
                }
                let vt = cx.need(l, 4, "value")?;
                let v: BigInt = vt
                    .text
                    .parse()
                    .map_err(|_| cx.tok(l, vt, format!("expected an integer, found `{}`", vt.text)))?;
                cx.no_more(l, 5)?;
                if !seen.insert((n, i, j)) {
                    return Err(cx.tok(l, l.toks[0], format!("entry ({i}, {j}) of boundary {n} given twice")));
                }
                entries[n].push((i, j, v));
            }
            _ => return Err(cx.tok(l, l.toks[0], format!("unknown directive `{}`", l.head()))),
        }
    }
    let last = ls.last().unwrap();
    let dims: Vec<usize> = dims
        .iter()
        .enumerate()
        .map(|(n, d)| d.ok_or_else(|| cx.at(last, last.end_col(), format!("rank of degree {n} never declared"))))
        .collect::<Result<_, _>>()?;
    let boundaries = (1..=top)
        .map(|n| {
            let mut m = IntMatrix::zeros(dims[n - 1], dims[n]);
            for (i, j, v) in &entries[n] {
                m.set(*i, *j, v.clone());
            }
            m
        })
        .collect();
    ChainComplex::new(dims, boundaries).map_err(|e| cx.at(first, 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bwtop_core::simplicial::{nerve, FinMonoid};

    #[test]
    fn round_trip_of_a_nerve() {
        let c = nerve(&FinMonoid::cyclic(3), 3).chains();
        let text = write_chain(&c);
        let back = parse_chain(&text, "t").unwrap();
        assert_eq!(back, c);
        assert_eq!(write_chain(&back), text);
    }

    #[test]
    fn small_complex_text() {
        let text = "chain 1\ndim 0 1\ndim 1 1\nbd 1 0 0 0\n";
        let c = parse_chain(text, "t").unwrap();
        assert_eq!(c.dims(), &[1, 1]);
        assert_eq!(write_chain(&c), "chain 1\ndim 0 1\ndim 1 1\n");
    }

    #[test]
    fn errors_are_positioned() {
        let e = parse_chain("chain 1\ndim 0 1\ndim 1 1\nbd 1 0 4 1\n", "f").unwrap_err();
        assert_eq!((e.line, e.col), (4, 8));
        let e = parse_chain("chain 1\ndim 0 1\n", "f").unwrap_err();
        assert!(e.msg.contains("degree 1"));
        let e = parse_chain("chain 2\ndim 0 1\ndim 1 1\ndim 2 1\nbd 1 0 0 1\nbd 2 0 0 1\n", "f").unwrap_err();
        assert!(e.msg.contains("nonzero"), "{e}");
        let e = parse_chain("chains 1", "f").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
    }
}
