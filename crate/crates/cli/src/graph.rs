//! Graph files for path models.
//!
//! ```text
//! graph uvw
//! vertices u v w
//! edge e1 u v
//! edge e2 v w
//! end
//! ```

use std::fmt::Write;

use domsr_core::models::{Dag, Edge};

use crate::format::{tokenize, ParseError, ParseErrorKind};

pub fn parse_graph_file(text: &str) -> Result<Dag, ParseError> {
    let lines = tokenize(text);
    let eof = ParseError { line: text.lines().count().max(1), kind: ParseErrorKind::UnexpectedEof };
    let mut it = lines.into_iter();
    let (start, head) = it.next().ok_or(eof)?;
    if head[0] != "graph" || head.len() != 2 {
        return Err(ParseError { line: start, kind: ParseErrorKind::Expected("graph <name>") });
    }
    let mut dag = Dag { name: head[1].to_string(), ..Dag::default() };
    let mut have_vertices = false;
    let mut ended = false;
    for (line, toks) in it.by_ref() {
        let fail = |kind| Err(ParseError { line, kind });
        match toks[0] {
            "end" => {
                ended = true;
                break;
            }
            "vertices" => {
                if have_vertices {
                    return fail(ParseErrorKind::DuplicateSection("vertices"));
                }
                have_vertices = true;
                for v in &toks[1..] {
                    if dag.vertices.iter().any(|x| x == v) {
                        return fail(ParseErrorKind::DuplicateName(v.to_string()));
                    }
                    dag.vertices.push(v.to_string());
                }
            }
            "edge" => {
                if !have_vertices {
                    return fail(ParseErrorKind::BeforeElements("edge"));
                }
                if toks.len() != 4 {
                    return fail(ParseErrorKind::Expected("edge <name> <src> <dst>"));
                }
                if dag.edges.iter().any(|e| e.name == toks[1]) {
                    return fail(ParseErrorKind::DuplicateName(toks[1].to_string()));
                }
                let find = |v: &str| dag.vertices.iter().position(|x| x == v);
                let (Some(source), Some(target)) = (find(toks[2]), find(toks[3])) else {
                    let bad = if find(toks[2]).is_none() { toks[2] } else { toks[3] };
                    return fail(ParseErrorKind::UnknownName(bad.to_string()));
                };
                dag.edges.push(Edge { name: toks[1].to_string(), source, target });
            }
            other => return fail(ParseErrorKind::UnknownDirective(other.to_string())),
        }
    }
    if !ended {
        return Err(ParseError { line: text.lines().count().max(1), kind: ParseErrorKind::UnexpectedEof });
    }
    if let Some((line, _)) = it.next() {
        return Err(ParseError { line, kind: ParseErrorKind::Expected("end of input") });
    }
    if !have_vertices {
        return Err(ParseError { line: start, kind: ParseErrorKind::MissingSection("vertices") });
    }
    Ok(dag)
}

pub fn render_graph(g: &Dag) -> String {
    let mut out = format!("graph {}\nvertices {}\n", g.name, g.vertices.join(" "));
    for e in &g.edges {
        writeln!(out, "edge {} {} {}", e.name, g.vertices[e.source], g.vertices[e.target]).unwrap();
    }
    out.push_str("end\n");
    out
}
