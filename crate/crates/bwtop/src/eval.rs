//! One-line expressions over W-tuples and ζ-paths:
//!
//! ```text
//! wmul A B …      epsilon A      eps-prime A      shrink A s
//! zeta A          ev A1 … Ak t0 … tk
//! ```
//!
//! A tuple is written `(x0 t1 x1 …)` or `w: x0 t1 x1 … ;`.

use bwtop_core::exactalg::Rat;
use bwtop_core::moorezeta::{ev, zeta, EmChart};
use bwtop_core::simplicial::{FinMonoid, FinSemigroup};
use bwtop_core::wconstruct::{FreeMonoid, Mode, Semigroup, WTuple};

use crate::error::{CliError, ParseError};
use crate::format::{parse_wtuple, write_path};

const ORIGIN: &str = "expr";

/// What tuple entries are drawn from.
#[derive(Debug, Clone)]
pub enum Ground {
    /// Words in arbitrary letters; `x·y` or `x*y`, `e` for the empty word.
    Free,
    Monoid(FinMonoid),
    Semigroup(FinSemigroup),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ItemKind {
    Tuple,
    Word,
}

#[derive(Debug, Clone, Copy)]
struct Item<'a> {
    kind: ItemKind,
    text: &'a str,
    col: usize,
}

fn err(col: usize, msg: impl Into<String>) -> CliError {
    ParseError::new(ORIGIN, 1, col, msg).into()
}

fn items(expr: &str) -> Result<Vec<Item<'_>>, CliError> {
    let chars: Vec<(usize, char)> = expr.char_indices().collect();
    let byte = |k: usize| chars.get(k).map_or(expr.len(), |c| c.0);
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k].1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let start = k;
        if c == '(' {
            while k < chars.len() && chars[k].1 != ')' {
                if k > start && chars[k].1 == '(' {
                    return Err(err(k + 1, "tuples do not nest"));
                }
                k += 1;
            }
            if k == chars.len() {
                return Err(err(start + 1, "unclosed `(`"));
            }
            k += 1;
            out.push(Item { kind: ItemKind::Tuple, text: &expr[byte(start)..byte(k)], col: start + 1 });
        } else if c == 'w' && chars.get(k + 1).map(|c| c.1) == Some(':') {
            while k < chars.len() && chars[k].1 != ';' {
                k += 1;
            }
            out.push(Item { kind: ItemKind::Tuple, text: &expr[byte(start)..byte(k)], col: start + 1 });
            k += 1;
        } else {
            while k < chars.len() && !chars[k].1.is_whitespace() && chars[k].1 != '(' {
                k += 1;
            }
            out.push(Item { kind: ItemKind::Word, text: &expr[byte(start)..byte(k)], col: start + 1 });
        }
    }
    Ok(out)
}

fn free_word(s: &str) -> Option<Vec<String>> {
    if s == "e" {
        return Some(Vec::new());
    }
    s.split(['·', '*'])
        .map(|l| {
            let ok = l.chars().next().is_some_and(char::is_alphabetic) && l.chars().all(|c| c.is_alphanumeric() || c == '_');
            ok.then(|| l.to_string())
        })
        .collect()
}

fn rat(item: &Item) -> Result<Rat, CliError> {
    if item.kind != ItemKind::Word {
        return Err(err(item.col, "expected a rational, found a tuple"));
    }
    item.text.parse().map_err(|_| err(item.col, format!("expected a rational, found `{}`", item.text)))
}

struct Args<'a> {
    cmd: Item<'a>,
    rest: Vec<Item<'a>>,
}

impl<'a> Args<'a> {
    fn tuples<G: Semigroup>(&self, g: &G, resolve: &dyn Fn(&str) -> Option<G::Elem>, mode: Mode) -> Result<Vec<WTuple<G::Elem>>, CliError> {
        self.rest
            .iter()
            .take_while(|i| i.kind == ItemKind::Tuple)
            .map(|i| parse_wtuple(i.text, ORIGIN, i.col - 1, g, resolve, mode).map_err(CliError::from))
            .collect()
    }

    fn arity(&self, n: usize) -> Result<(), CliError> {
        if self.rest.len() < n {
            let end = self.rest.last().map_or(self.cmd.col + self.cmd.text.chars().count(), |i| i.col + i.text.chars().count());
            return Err(err(end, format!("`{}` needs {n} argument(s)", self.cmd.text)));
        }
        if let Some(extra) = self.rest.get(n) {
            return Err(err(extra.col, format!("unexpected argument to `{}`", self.cmd.text)));
        }
        Ok(())
    }

    fn need_tuple(&self, k: usize) -> Result<(), CliError> {
        let i = &self.rest[k];
        if i.kind != ItemKind::Tuple {
            return Err(err(i.col, format!("expected a tuple, found `{}`", i.text)));
        }
        Ok(())
    }
}

fn algebraic<G: Semigroup>(args: &Args, g: &G, resolve: &dyn Fn(&str) -> Option<G::Elem>, mode: Mode) -> Result<Option<String>, CliError> {
    Ok(Some(match args.cmd.text {
        "wmul" => {
            if args.rest.len() < 2 {
                args.arity(2)?;
            }
            for k in 0..args.rest.len() {
                args.need_tuple(k)?;
            }
            let ts = args.tuples(g, resolve, mode)?;
            let mut acc = ts[0].clone();
            for t in &ts[1..] {
                acc = acc.wmul(g, t)?;
            }
            acc.display(g)
        }
        "epsilon" => {
            args.arity(1)?;
            args.need_tuple(0)?;
            g.show(&args.tuples(g, resolve, mode)?[0].epsilon(g))
        }
        "shrink" => {
            args.arity(2)?;
            args.need_tuple(0)?;
            let s = rat(&args.rest[1])?;
            if !s.in_unit_interval() {
                return Err(err(args.rest[1].col, format!("shrink parameter {s} outside [0, 1]")));
            }
            args.tuples(g, resolve, mode)?[0].shrink(g, &s)?.display(g)
        }
        "eps-prime" => {
            args.arity(1)?;
            args.need_tuple(0)?;
            if mode != Mode::Semigroup {
                return Err(err(args.cmd.col, "`eps-prime` takes a W̄ tuple; drop --unital"));
            }
            args.tuples(g, resolve, mode)?[0].eps_prime(g)?.display(g)
        }
        _ => return Ok(None),
    }))
}

fn paths(args: &Args, m: &FinMonoid, mode: Mode) -> Result<String, CliError> {
    if mode != Mode::Semigroup {
        return Err(err(args.cmd.col, format!("`{}` takes W̄ tuples; drop --unital", args.cmd.text)));
    }
    let resolve = |s: &str| m.index_of(s);
    let ts = args.tuples(m, &resolve, mode)?;
    if args.cmd.text == "zeta" {
        args.arity(1)?;
        args.need_tuple(0)?;
        let z = zeta(m, &ts[0])?;
        return Ok(write_path(z.path(), |c| c.display(m)).trim_end().to_string());
    }
    let k = ts.len();
    if k == 0 {
        return Err(err(args.cmd.col + args.cmd.text.len(), "`ev` needs at least one tuple"));
    }
    args.arity(2 * k + 1)?;
    let coords = args.rest[k..].iter().map(rat).collect::<Result<Vec<_>, _>>()?;
    let loops = ts.iter().map(|a| zeta(m, a).map(|z| z.project())).collect::<Result<Vec<_>, _>>()?;
    Ok(ev(&loops, &coords, &EmChart::base(), m)?.display(m))
}

/// Evaluates one expression; `mode` selects W̄ (`Mode::Semigroup`) or W.
pub fn evaluate(expr: &str, ground: &Ground, mode: Mode) -> Result<String, CliError> {
    let all = items(expr)?;
    let Some((&cmd, rest)) = all.split_first() else {
        return Err(err(1, "empty expression"));
    };
    if cmd.kind != ItemKind::Word {
        return Err(err(cmd.col, "expected a command"));
    }
    let args = Args { cmd, rest: rest.to_vec() };
    let done = match ground {
        Ground::Free => algebraic(&args, &FreeMonoid, &free_word, mode)?,
        Ground::Monoid(m) => algebraic(&args, m, &|s| m.index_of(s), mode)?,
        Ground::Semigroup(g) => {
            if mode == Mode::Monoid {
                return Err(err(cmd.col, "W tuples need a monoid; drop --unital or pass --monoid"));
            }
            algebraic(&args, g, &|s| g.index_of(s), mode)?
        }
    };
    if let Some(out) = done {
        return Ok(out);
    }
    match (cmd.text, ground) {
        ("zeta" | "ev", Ground::Monoid(m)) => paths(&args, m, mode),
        ("zeta" | "ev", _) => Err(err(cmd.col, format!("`{}` needs a finite monoid; pass --monoid", cmd.text))),
        (other, _) => Err(err(
            cmd.col,
            format!("unknown command `{other}` (expected wmul, epsilon, eps-prime, shrink, zeta, ev)"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn free(e: &str) -> String {
        evaluate(e, &Ground::Free, Mode::Semigroup).unwrap()
    }

    #[test]
    fn free_examples() {
        assert_eq!(free("wmul (x) (y)"), "(x 1/1 y)");
        assert_eq!(free("shrink (x 1/2 y) 0"), "(x·y)");
        assert_eq!(free("wmul w: x 1/2 y; (z)"), "(x 1/2 y 1/1 z)");
        assert_eq!(free("epsilon (x 1/3 y·z)"), "x·y·z");
    }

    #[test]
    fn finite_ground() {
        let z2 = Ground::Monoid(fixtures::monoid("z2").unwrap());
        assert_eq!(evaluate("epsilon (a 1/2 a)", &z2, Mode::Semigroup).unwrap(), "e");
        assert_eq!(evaluate("wmul (e) (a)", &z2, Mode::Monoid).unwrap(), "(a)");
        let z = evaluate("zeta (a 1/2 a)", &z2, Mode::Semigroup).unwrap();
        assert!(z.starts_with("path r=3/2\nbp 0/1 "), "{z}");
        let at_end = evaluate("ev (a) 0 1", &z2, Mode::Semigroup).unwrap();
        let at_start = evaluate("ev (a) 1 0", &z2, Mode::Semigroup).unwrap();
        assert_eq!(at_end, at_start);
    }

    #[test]
    fn errors_point_at_columns() {
        let e = evaluate("wmul (x) (1/2)", &Ground::Free, Mode::Semigroup).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("expr:1:11"), "{e}");
        let e = evaluate("shrink (x 1/2 y) 3/2", &Ground::Free, Mode::Semigroup).unwrap_err();
        assert!(e.to_string().contains("expr:1:18"), "{e}");
        let e = evaluate("frob (x)", &Ground::Free, Mode::Semigroup).unwrap_err();
        assert!(e.to_string().contains("expr:1:1"), "{e}");
        assert!(evaluate("zeta (x)", &Ground::Free, Mode::Semigroup).is_err());
        assert!(evaluate("wmul (x", &Ground::Free, Mode::Semigroup).is_err());
    }
}
