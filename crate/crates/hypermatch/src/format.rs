//! Text formats for graphs (`khg`), families (`khf`) and auxiliary graphs
//! (`kha`).
//!
//! Line 1 is the header. After it, lines starting with `#` and blank lines
//! are ignored. Edges are written in canonical order, so emitting a parsed
//! file reproduces it up to comments and blank lines.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hypermatch_core::matcher::{AuxEdge, Label};
use hypermatch_core::{AuxGraph, Edge, Family, KGraph, Vertex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: hypermatch_core::Error,
    },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

type Result<T> = std::result::Result<T, FormatError>;

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(FormatError::Syntax { line, msg: msg.into() })
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    fn header(&mut self) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((i, l)) => Ok((i + 1, l.split_whitespace().collect())),
            None => Err(FormatError::Truncated("missing header".into())),
        }
    }

    /// Next line that is neither blank nor a comment, as tokens.
    fn next_content(&mut self) -> Option<(usize, Vec<&'a str>)> {
        self.inner.by_ref().find_map(|(i, l)| {
            let t = l.trim();
            (!t.is_empty() && !t.starts_with('#')).then(|| (i + 1, t.split_whitespace().collect()))
        })
    }

    fn expect_content(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        self.next_content().ok_or_else(|| FormatError::Truncated(format!("expected {what}")))
    }

    fn finish(mut self) -> Result<()> {
        match self.next_content() {
            Some((line, _)) => syntax(line, "trailing content"),
            None => Ok(()),
        }
    }
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().or_else(|_| syntax(line, format!("bad {what} `{tok}`")))
}

fn header<const N: usize>(line: usize, toks: &[&str], magic: &str, names: [&str; N]) -> Result<[u32; N]> {
    if toks.first() != Some(&magic) {
        return syntax(line, format!("expected `{magic}` header"));
    }
    if toks.get(1) != Some(&"1") {
        return syntax(line, "unsupported format version");
    }
    if toks.len() != N + 2 {
        return syntax(line, format!("header needs {}", names.join(", ")));
    }
    let mut out = [0; N];
    for (slot, (tok, name)) in out.iter_mut().zip(toks[2..].iter().zip(names)) {
        *slot = number(line, tok, name)?;
    }
    Ok(out)
}

fn base_edge(line: usize, toks: &[&str], n: u32, k: u32) -> Result<Edge> {
    if toks.len() != k as usize {
        return syntax(line, format!("expected {k} vertices, found {}", toks.len()));
    }
    let vs = toks
        .iter()
        .map(|t| number::<Vertex>(line, t, "vertex"))
        .collect::<Result<Vec<_>>>()?;
    if vs.windows(2).any(|w| w[0] >= w[1]) {
        return syntax(line, "vertices must be strictly increasing");
    }
    Edge::new(n, k, &vs).map_err(|source| FormatError::Invalid { line, source })
}

fn edges_block(lines: &mut Lines<'_>, count: usize, n: u32, k: u32) -> Result<Vec<Edge>> {
    let mut seen = BTreeSet::new();
    (0..count)
        .map(|_| {
            let (line, toks) = lines.expect_content("an edge line")?;
            let e = base_edge(line, &toks, n, k)?;
            if !seen.insert(e.clone()) {
                return syntax(line, "repeated edge");
            }
            Ok(e)
        })
        .collect()
}

fn invalid(line: usize) -> impl FnOnce(hypermatch_core::Error) -> FormatError {
    move |source| FormatError::Invalid { line, source }
}

pub fn parse_graph(text: &str) -> Result<KGraph> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.header()?;
    let [k, n] = header(hl, &toks, "khg", ["k", "n"])?;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    while let Some((line, toks)) = lines.next_content() {
        let e = base_edge(line, &toks, n, k)?;
        if !seen.insert(e.clone()) {
            return syntax(line, "repeated edge");
        }
        edges.push(e);
    }
    KGraph::build(n, k, edges).map_err(invalid(hl))
}

pub fn parse_family(text: &str) -> Result<Family> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.header()?;
    let [k, n, m] = header(hl, &toks, "khf", ["k", "n", "m"])?;
    let mut members = Vec::with_capacity(m as usize);
    for i in 1..=m {
        let (line, toks) = lines.expect_content(&format!("member {i}"))?;
        if toks.len() != 3 || toks[0] != "F" || toks[1] != i.to_string() {
            return syntax(line, format!("expected `F {i} <edge_count>`"));
        }
        let count: usize = number(line, toks[2], "edge count")?;
        let edges = edges_block(&mut lines, count, n, k)?;
        members.push(KGraph::build(n, k, edges).map_err(invalid(line))?);
    }
    lines.finish()?;
    Family::new(members).map_err(invalid(hl))
}

fn label(tok: &str) -> Option<Label> {
    let (kind, idx) = tok.split_at_checked(1)?;
    let idx: u32 = idx.parse().ok()?;
    match kind {
        "v" => Some(Label::V(idx)),
        "u" => Some(Label::U(idx)),
        _ => None,
    }
}

/// Parses one token list holding exactly one label and `k` base vertices.
pub fn parse_aux_edge(line: usize, toks: &[&str], n: u32, k: u32) -> Result<AuxEdge> {
    let labels: Vec<(usize, Label)> =
        toks.iter().enumerate().filter_map(|(i, t)| label(t).map(|l| (i, l))).collect();
    let [(at, lab)] = labels[..] else {
        return syntax(line, "an edge needs exactly one label token");
    };
    let base: Vec<&str> = toks.iter().enumerate().filter(|(i, _)| *i != at).map(|(_, t)| *t).collect();
    Ok(AuxEdge { label: lab, base: base_edge(line, &base, n, k)? })
}

pub fn parse_aux(text: &str) -> Result<AuxGraph> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.header()?;
    let [k, n, m, r] = header(hl, &toks, "kha", ["k", "n", "m", "r"])?;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    while let Some((line, toks)) = lines.next_content() {
        let e = parse_aux_edge(line, &toks, n, k)?;
        if !seen.insert(e.clone()) {
            return syntax(line, "repeated edge");
        }
        edges.push(e);
    }
    AuxGraph::build(n, k, m, r, edges).map_err(invalid(hl))
}

fn push_edge(out: &mut String, vs: &[Vertex]) {
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
}

pub fn emit_graph(g: &KGraph) -> String {
    let mut out = format!("khg 1 {} {}\n", g.k(), g.n());
    for e in g.edges() {
        push_edge(&mut out, e);
    }
    out
}

pub fn emit_family(f: &Family) -> String {
    let mut out = format!("khf 1 {} {} {}\n", f.k(), f.n(), f.m());
    for (i, g) in f.members().iter().enumerate() {
        writeln!(out, "F {} {}", i + 1, g.len()).unwrap();
        for e in g.edges() {
            push_edge(&mut out, e);
        }
    }
    out
}

pub fn emit_aux(h: &AuxGraph) -> String {
    let mut out = format!("kha 1 {} {} {} {}\n", h.k(), h.n(), h.m(), h.r());
    for e in h.edges() {
        write!(out, "{} ", e.label).unwrap();
        push_edge(&mut out, &e.base);
    }
    out
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_with_comments() {
        let g = parse_graph("khg 1 2 4\n# a path\n1 2\n\n2 3\n3 4\n").unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(emit_graph(&g), "khg 1 2 4\n1 2\n2 3\n3 4\n");
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("khg 2 2 4\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("# x\nkhg 1 2 4\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("khg 1 2 4\n2 1\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("khg 1 2 4\n1 5\n"), Err(FormatError::Invalid { line: 2, .. })));
        assert!(matches!(parse_graph("khg 1 2 4\n1 2 3\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("khg 1 2 4\n1 2\n1 2\n"), Err(FormatError::Syntax { line: 3, .. })));
        assert!(matches!(parse_graph("khg 1 5 4\n"), Err(FormatError::Invalid { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(FormatError::Truncated(_))));
    }

    #[test]
    fn family_layout() {
        let text = "khf 1 2 4 2\nF 1 1\n1 2\nF 2 2\n# second\n1 3\n2 4\n";
        let f = parse_family(text).unwrap();
        assert_eq!(f.sizes(), [1, 2]);
        assert_eq!(emit_family(&f), text.replace("# second\n", ""));
        assert!(parse_family("khf 1 2 4 2\nF 1 1\n1 2\n").is_err());
        assert!(parse_family("khf 1 2 4 1\nF 2 1\n1 2\n").is_err());
        assert!(parse_family("khf 1 2 4 1\nF 1 1\n1 2\n3 4\n").is_err());
    }

    #[test]
    fn aux_labels() {
        let text = "kha 1 2 4 1 1\nv1 1 2\nu1 3 4\n";
        let h = parse_aux(text).unwrap();
        assert_eq!(emit_aux(&h), text);
        assert_eq!(parse_aux("kha 1 2 4 1 1\n1 v1 2\n").unwrap().len(), 1);
        assert!(parse_aux("kha 1 2 4 1 1\nv2 1 2\n").is_err());
        assert!(parse_aux("kha 1 2 4 1 1\nv1 u1 2\n").is_err());
        assert!(parse_aux("kha 1 2 4 1 1\n1 2\n").is_err());
        assert!(parse_aux("kha 1 2 4 1 1\nw1 1 2\n").is_err());
    }
}
