//! The line-oriented algebra file format.
//!
//! ```text
//! algebra chain3-id
//! elements 0 a 1
//! zero 0
//! one 1
//! add
//! 0 a 1
//! a a 1
//! 1 1 1
//! mul
//! 0 0 0
//! 0 a a
//! 0 a 1
//! dom 0 a 1
//! end
//! ```
//!
//! `dom`, `adom`, `tests` and `compl p:q …` are optional. Blank lines are
//! ignored, and so is everything from a token starting with `#`.

use std::fmt::Write;

use domsr_core::{FiniteAlgebra, RawAlgebra, ValidationReport};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEof,
    #[error("expected `{0}`")]
    Expected(&'static str),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("undeclared name `{0}`")]
    UnknownName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("duplicate section `{0}`")]
    DuplicateSection(&'static str),
    #[error("missing section `{0}`")]
    MissingSection(&'static str),
    #[error("`{0}` must follow `elements`")]
    BeforeElements(&'static str),
    #[error("ragged row: expected {expected} entries, found {found}")]
    RaggedRow { expected: usize, found: usize },
    #[error("malformed complement pair `{0}` (expected p:q)")]
    BadPair(String),
    #[error("`{0}` takes exactly one argument")]
    Arity(&'static str),
    #[error(transparent)]
    Invalid(ValidationReport),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// Non-empty lines as `(line number, tokens)`, comments stripped.
pub(crate) fn tokenize(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let toks: Vec<&str> = l.split_whitespace().take_while(|t| !t.starts_with('#')).collect();
            (!toks.is_empty()).then_some((i + 1, toks))
        })
        .collect()
}

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let last_line = text.lines().count().max(1);
        Lines { lines: tokenize(text), pos: 0, last_line }
    }

    fn next(&mut self) -> Result<(usize, Vec<&'a str>), ParseError> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l.ok_or(ParseError { line: self.last_line, kind: ParseErrorKind::UnexpectedEof })
    }

    fn done(&self) -> bool {
        self.pos >= self.lines.len()
    }
}

/// Parses every `algebra … end` block in `text`.
pub fn parse_algebras(text: &str) -> Result<Vec<FiniteAlgebra>, ParseError> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while !lines.done() {
        out.push(parse_block(&mut lines)?);
    }
    Ok(out)
}

/// Parses a text holding exactly one algebra.
pub fn parse_algebra_file(text: &str) -> Result<FiniteAlgebra, ParseError> {
    let mut lines = Lines::new(text);
    let a = parse_block(&mut lines)?;
    if let Some((line, _)) = lines.lines.get(lines.pos) {
        return err(*line, ParseErrorKind::Expected("end of input"));
    }
    Ok(a)
}

fn parse_block(lines: &mut Lines<'_>) -> Result<FiniteAlgebra, ParseError> {
    let (start, head) = lines.next()?;
    if head[0] != "algebra" {
        return err(start, ParseErrorKind::Expected("algebra"));
    }
    if head.len() != 2 {
        return err(start, ParseErrorKind::Arity("algebra"));
    }
    let mut raw = RawAlgebra { name: head[1].to_string(), ..RawAlgebra::default() };
    let mut names: Option<Vec<String>> = None;
    let mut seen: Vec<&'static str> = Vec::new();
    loop {
        let (line, toks) = lines.next()?;
        let directive: &'static str = match toks[0] {
            "end" => break,
            "elements" => "elements",
            "zero" => "zero",
            "one" => "one",
            "add" => "add",
            "mul" => "mul",
            "dom" => "dom",
            "adom" => "adom",
            "tests" => "tests",
            "compl" => "compl",
            other => return err(line, ParseErrorKind::UnknownDirective(other.to_string())),
        };
        if seen.contains(&directive) {
            return err(line, ParseErrorKind::DuplicateSection(directive));
        }
        seen.push(directive);
        if directive == "elements" {
            let mut v: Vec<String> = Vec::new();
            for t in &toks[1..] {
                if v.iter().any(|x| x == t) {
                    return err(line, ParseErrorKind::DuplicateName(t.to_string()));
                }
                v.push(t.to_string());
            }
            names = Some(v);
            continue;
        }
        let Some(names) = names.as_ref() else {
            return err(line, ParseErrorKind::BeforeElements(directive));
        };
        let k = names.len();
        let lookup = |t: &str| {
            names
                .iter()
                .position(|n| n == t)
                .ok_or(ParseError { line, kind: ParseErrorKind::UnknownName(t.to_string()) })
        };
        let args = &toks[1..];
        match directive {
            "zero" | "one" => {
                if args.len() != 1 {
                    return err(line, ParseErrorKind::Arity(directive));
                }
                let v = lookup(args[0])?;
                if directive == "zero" {
                    raw.zero = v;
                } else {
                    raw.one = v;
                }
            }
            "add" | "mul" => {
                if !args.is_empty() {
                    return err(line, ParseErrorKind::Arity(directive));
                }
                let mut rows = Vec::with_capacity(k);
                for _ in 0..k {
                    let (rl, row) = lines.next()?;
                    if row.len() != k {
                        return err(rl, ParseErrorKind::RaggedRow { expected: k, found: row.len() });
                    }
                    let r = row
                        .iter()
                        .map(|t| names.iter().position(|n| n == t).ok_or(t))
                        .collect::<Result<Vec<_>, _>>()
                        .or_else(|t| err(rl, ParseErrorKind::UnknownName(t.to_string())))?;
                    rows.push(r);
                }
                if directive == "add" {
                    raw.add = rows;
                } else {
                    raw.mul = rows;
                }
            }
            "dom" | "adom" => {
                if args.len() != k {
                    return err(line, ParseErrorKind::RaggedRow { expected: k, found: args.len() });
                }
                let v = args.iter().map(|t| lookup(t)).collect::<Result<Vec<_>, _>>()?;
                if directive == "dom" {
                    raw.dom = Some(v);
                } else {
                    raw.adom = Some(v);
                }
            }
            "tests" => raw.testset = Some(args.iter().map(|t| lookup(t)).collect::<Result<_, _>>()?),
            "compl" => {
                let mut pairs = Vec::new();
                for t in args {
                    let (p, q) = t.split_once(':').ok_or(ParseError {
                        line,
                        kind: ParseErrorKind::BadPair(t.to_string()),
                    })?;
                    pairs.push((lookup(p)?, lookup(q)?));
                }
                raw.compl = Some(pairs);
            }
            _ => unreachable!(),
        }
    }
    for required in ["elements", "zero", "one", "add", "mul"] {
        if !seen.contains(&required) {
            return err(start, ParseErrorKind::MissingSection(required));
        }
    }
    raw.names = names.unwrap_or_default();
    FiniteAlgebra::try_from(raw).or_else(|r| err(start, ParseErrorKind::Invalid(r)))
}

/// Renders `s` in the algebra file format, elements in index order.
pub fn render_algebra(s: &FiniteAlgebra) -> String {
    let name = |x: u16| s.elem_name(x);
    let join = |xs: &mut dyn Iterator<Item = u16>| xs.map(name).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "algebra {}", s.name()).unwrap();
    writeln!(out, "elements {}", join(&mut s.elements())).unwrap();
    writeln!(out, "zero {}", name(s.zero())).unwrap();
    writeln!(out, "one {}", name(s.one())).unwrap();
    for (label, table) in [("add", s.add_table()), ("mul", s.mul_table())] {
        out.push_str(label);
        out.push('\n');
        for row in table.chunks(s.size()) {
            writeln!(out, "{}", join(&mut row.iter().copied())).unwrap();
        }
    }
    if let Some(d) = s.dom() {
        writeln!(out, "dom {}", join(&mut d.iter().copied())).unwrap();
    }
    if let Some(d) = s.adom() {
        writeln!(out, "adom {}", join(&mut d.iter().copied())).unwrap();
    }
    if let Some(t) = s.testset() {
        writeln!(out, "tests {}", join(&mut t.iter())).unwrap();
    }
    if let Some(c) = s.compl() {
        let pairs: Vec<String> = c
            .iter()
            .enumerate()
            .filter_map(|(p, q)| q.map(|q| format!("{}:{}", name(p as u16), name(q))))
            .collect();
        writeln!(out, "compl {}", pairs.join(" ")).unwrap();
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use domsr_core::models::builtin;

    #[test]
    fn round_trips_builtins() {
        for name in ["chain3-id", "chain3-d01", "nonlocal4", "weakdom4", "rel2"] {
            let s = builtin(name).unwrap();
            let text = render_algebra(&s);
            assert_eq!(parse_algebra_file(&text).unwrap(), s, "{name}");
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# leading comment\nalgebra b2\n\nelements 0 1 # trailing\nzero 0\none 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\nend\n";
        let s = parse_algebra_file(text).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.name(), "b2");
    }

    #[test]
    fn undeclared_one_names_line() {
        let text = "algebra b2\nelements 0 1\nzero 0\none x\nadd\n0 1\n1 1\nmul\n0 0\n0 1\nend\n";
        let e = parse_algebra_file(text).unwrap_err();
        assert_eq!(e, ParseError { line: 4, kind: ParseErrorKind::UnknownName("x".into()) });
        assert_eq!(e.to_string(), "line 4: undeclared name `x`");
    }

    #[test]
    fn structural_errors() {
        let base = "algebra b\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\nend\n";
        let ragged = base.replace("add\n0 1\n", "add\n0 1 1\n");
        assert_eq!(parse_algebra_file(&ragged).unwrap_err().kind, ParseErrorKind::RaggedRow { expected: 2, found: 3 });
        let dup = base.replace("elements 0 1", "elements 0 0");
        assert_eq!(parse_algebra_file(&dup).unwrap_err().kind, ParseErrorKind::DuplicateName("0".into()));
        let missing = base.replace("one 1\n", "");
        assert_eq!(parse_algebra_file(&missing).unwrap_err().kind, ParseErrorKind::MissingSection("one"));
        let twice = base.replace("zero 0\n", "zero 0\nzero 0\n");
        assert_eq!(parse_algebra_file(&twice).unwrap_err(), ParseError { line: 4, kind: ParseErrorKind::DuplicateSection("zero") });
        let truncated = base.replace("end\n", "");
        assert_eq!(parse_algebra_file(&truncated).unwrap_err().kind, ParseErrorKind::UnexpectedEof);
        let compl = base.replace("end\n", "tests 0 1\ncompl 0:1 1\nend\n");
        assert_eq!(parse_algebra_file(&compl).unwrap_err().kind, ParseErrorKind::BadPair("1".into()));
    }

    #[test]
    fn several_blocks() {
        let text = format!("{}{}", render_algebra(&builtin("chain3-id").unwrap()), render_algebra(&builtin("nonlocal4").unwrap()));
        let all = parse_algebras(&text).unwrap();
        assert_eq!(all.len(), 2);
        assert!(parse_algebra_file(&text).is_err());
    }
}
