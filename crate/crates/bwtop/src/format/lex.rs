use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Tok<'a> {
    pub text: &'a str,
    pub col: usize,
}

/// One significant line: comments (`#` to end of line) and blank lines are
/// dropped; `:` and `=` are tokens of their own.
#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub no: usize,
    pub toks: Vec<Tok<'a>>,
}

impl<'a> Line<'a> {
    pub fn head(&self) -> &'a str {
        self.toks[0].text
    }

    pub fn end_col(&self) -> usize {
        self.toks.last().map_or(1, |t| t.col + t.text.chars().count())
    }
}

pub(crate) fn lines(src: &str) -> Vec<Line<'_>> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("");
            let toks = tokens(text);
            (!toks.is_empty()).then_some(Line { no: i + 1, toks })
        })
        .collect()
}

fn tokens(text: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut col = 0;
    for (b, c) in text.char_indices() {
        col += 1;
        let single = c == ':' || c == '=';
        if c.is_whitespace() || single {
            if let Some((sb, sc)) = start.take() {
                out.push(Tok { text: &text[sb..b], col: sc });
            }
            if single {
                out.push(Tok { text: &text[b..b + 1], col });
            }
        } else if start.is_none() {
            start = Some((b, col));
        }
    }
    if let Some((sb, sc)) = start {
        out.push(Tok { text: &text[sb..], col: sc });
    }
    out
}

/// Error constructor bound to one input.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Ctx<'a> {
    pub origin: &'a str,
}

impl<'a> Ctx<'a> {
    pub fn at(&self, line: &Line<'_>, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.origin, line.no, col, msg)
    }

    pub fn tok(&self, line: &Line<'_>, t: Tok<'_>, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.origin, line.no, t.col, msg)
    }

    /// Token `i` of `line`, or an error pointing just past the end.
    pub fn need<'b>(&self, line: &Line<'b>, i: usize, what: &str) -> Result<Tok<'b>, ParseError> {
        line.toks
            .get(i)
            .copied()
            .ok_or_else(|| self.at(line, line.end_col(), format!("expected {what}")))
    }

    pub fn usize(&self, line: &Line<'_>, t: Tok<'_>) -> Result<usize, ParseError> {
        t.text
            .parse()
            .map_err(|_| self.tok(line, t, format!("expected a nonnegative integer, found `{}`", t.text)))
    }

    pub fn expect(&self, line: &Line<'_>, i: usize, want: &str) -> Result<(), ParseError> {
        let t = self.need(line, i, &format!("`{want}`"))?;
        if t.text != want {
            return Err(self.tok(line, t, format!("expected `{want}`, found `{}`", t.text)));
        }
        Ok(())
    }

    pub fn no_more(&self, line: &Line<'_>, i: usize) -> Result<(), ParseError> {
        match line.toks.get(i) {
            Some(t) => Err(self.tok(line, *t, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_and_separators() {
        let ls = lines("# header\n\nrow a: b  c # trailing\n");
        assert_eq!(ls.len(), 1);
        let l = &ls[0];
        assert_eq!(l.no, 3);
        let got: Vec<(&str, usize)> = l.toks.iter().map(|t| (t.text, t.col)).collect();
        assert_eq!(got, [("row", 1), ("a", 5), (":", 6), ("b", 8), ("c", 11)]);
        assert_eq!(l.end_col(), 12);
    }

    #[test]
    fn equals_splits_without_spaces() {
        let ls = lines("path r=3/2");
        let got: Vec<&str> = ls[0].toks.iter().map(|t| t.text).collect();
        assert_eq!(got, ["path", "r", "=", "3/2"]);
    }
}
