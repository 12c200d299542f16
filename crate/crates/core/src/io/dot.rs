//! Graphviz output in the dashed-arrow convention for sums and the line
//! diagram convention for parthood, plus a reader for that same output.
//!
//! Sum structures: one point node `e<i>` per element, one plaintext node
//! `s<bits>` per summed collection, and a dashed edge `e<i> -> s<bits>` for
//! every `x + X`. Part structures: solid undirected-looking edges for the
//! covering pairs, and every other pair (loops, implied pairs) as an
//! invisible edge so the full relation is recoverable.

use std::fmt::Write as _;

use super::{IoError, Structure};
use crate::model::{Domain, MereoStructure, PartRelation, Subset, SumRelation, SumStructure};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn subset_label(d: &Domain, set: Subset) -> String {
    if set.is_empty() {
        "∅".to_string()
    } else {
        d.show(set)
    }
}

/// Deterministic DOT text for a structure.
pub fn export_dot(structure: &Structure, name: Option<&str>) -> String {
    let d = structure.domain();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name.unwrap_or("model")));
    let _ = writeln!(out, "  comment=\"kind={}\";", structure.theory());
    out.push_str("  rankdir=BT;\n");
    for (i, label) in d.labels().iter().enumerate() {
        let _ = writeln!(out, "  e{i} [shape=point, width=0.08, xlabel={}];", quote(label));
    }
    match structure {
        Structure::Sum(s) => {
            let mut sets: Vec<Subset> = s.sum().pairs().map(|(_, set)| set).collect();
            sets.sort_unstable();
            sets.dedup();
            for set in sets {
                let _ = writeln!(
                    out,
                    "  s{} [shape=plaintext, label={}];",
                    set.bits(),
                    quote(&subset_label(d, set))
                );
            }
            for (x, set) in s.sum().pairs() {
                let _ = writeln!(out, "  e{x} -> s{} [style=dashed];", set.bits());
            }
        }
        Structure::Part(m) => {
            let rel = m.part();
            for (x, y) in rel.pairs() {
                if covers(rel, x, y) {
                    let _ = writeln!(out, "  e{x} -> e{y} [dir=none];");
                } else {
                    let _ = writeln!(out, "  e{x} -> e{y} [style=invis];");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `x ⊑ y`, `x ≠ y`, and nothing else lies between them.
fn covers(rel: &PartRelation, x: usize, y: usize) -> bool {
    x != y
        && !(0..rel.len()).any(|z| z != x && z != y && rel.holds(x, z) && rel.holds(z, y))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Id(String),
    Punct(char),
    Arrow,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 0,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 0;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> IoError {
        IoError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, IoError> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() || c == '\u{feff}' {
                self.bump();
                continue;
            }
            let (line, column) = (self.line, self.column + 1);
            if c == '/' {
                self.bump();
                if self.chars.peek() != Some(&'/') {
                    return Err(self.error("expected `//` comment"));
                }
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c == '"' {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => return Err(self.error("unterminated string")),
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some('n') => s.push('\n'),
                            Some(other) => s.push(other),
                            None => return Err(self.error("unterminated string")),
                        },
                        Some(other) => s.push(other),
                    }
                }
                out.push((Tok::Id(s), line, column));
            } else if c == '-' {
                self.bump();
                if self.bump() != Some('>') {
                    return Err(self.error("expected `->`"));
                }
                out.push((Tok::Arrow, line, column));
            } else if "{}[]=;,".contains(c) {
                self.bump();
                out.push((Tok::Punct(c), line, column));
            } else if c.is_alphanumeric() || c == '_' || c == '.' {
                let mut s = String::new();
                while self.chars.peek().is_some_and(|&c| c.is_alphanumeric() || c == '_' || c == '.') {
                    s.push(self.bump().expect("peeked"));
                }
                out.push((Tok::Id(s), line, column));
            } else {
                return Err(self.error(format!("unexpected character `{c}`")));
            }
        }
        Ok(out)
    }
}

enum NodeRef {
    Element(usize),
    Set(Subset),
}

fn node_ref(id: &str) -> Option<NodeRef> {
    if let Some(rest) = id.strip_prefix('e') {
        rest.parse().ok().map(NodeRef::Element)
    } else if let Some(rest) = id.strip_prefix('s') {
        rest.parse().ok().map(|b| NodeRef::Set(Subset::from_bits(b)))
    } else {
        None
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> IoError {
        let (line, column) = self
            .toks
            .get(self.pos)
            .or(self.toks.last())
            .map(|t| (t.1, t.2))
            .unwrap_or((1, 1));
        IoError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn id(&mut self) -> Result<String, IoError> {
        match self.peek() {
            Some(Tok::Id(_)) => match self.next() {
                Some(Tok::Id(s)) => Ok(s),
                _ => unreachable!(),
            },
            _ => Err(self.error("expected identifier")),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), IoError> {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn attrs(&mut self) -> Result<Vec<(String, String)>, IoError> {
        let mut out = Vec::new();
        if self.peek() != Some(&Tok::Punct('[')) {
            return Ok(out);
        }
        self.pos += 1;
        loop {
            if self.peek() == Some(&Tok::Punct(']')) {
                self.pos += 1;
                return Ok(out);
            }
            let key = self.id()?;
            self.expect('=')?;
            let value = self.id()?;
            out.push((key, value));
            if matches!(self.peek(), Some(Tok::Punct(',' | ';'))) {
                self.pos += 1;
            }
        }
    }
}

struct Graph {
    kind: Option<String>,
    elements: Vec<(usize, String)>,
    edges: Vec<(NodeRef, NodeRef)>,
}

fn read_graph(text: &str) -> Result<Graph, IoError> {
    let mut p = Parser {
        toks: Lexer::new(text).tokens()?,
        pos: 0,
    };
    if p.id()? != "digraph" {
        return Err(p.error("expected `digraph`"));
    }
    if matches!(p.peek(), Some(Tok::Id(_))) {
        p.id()?;
    }
    p.expect('{')?;
    let mut g = Graph {
        kind: None,
        elements: Vec::new(),
        edges: Vec::new(),
    };
    loop {
        match p.peek() {
            Some(Tok::Punct('}')) => {
                p.pos += 1;
                break;
            }
            Some(Tok::Punct(';')) => {
                p.pos += 1;
                continue;
            }
            None => return Err(p.error("unexpected end of input")),
            _ => {}
        }
        let id = p.id()?;
        match p.peek() {
            Some(Tok::Punct('=')) => {
                p.pos += 1;
                let value = p.id()?;
                if id == "comment" {
                    g.kind = value.strip_prefix("kind=").map(str::to_string);
                }
            }
            Some(Tok::Arrow) => {
                p.pos += 1;
                let to = p.id()?;
                p.attrs()?;
                let from_ref = node_ref(&id).ok_or_else(|| p.error(format!("unknown node `{id}`")))?;
                let to_ref = node_ref(&to).ok_or_else(|| p.error(format!("unknown node `{to}`")))?;
                g.edges.push((from_ref, to_ref));
            }
            _ => {
                let attrs = p.attrs()?;
                if matches!(id.as_str(), "graph" | "node" | "edge") {
                    continue;
                }
                if let Some(NodeRef::Element(i)) = node_ref(&id) {
                    let label = attrs
                        .into_iter()
                        .find(|(k, _)| k == "xlabel")
                        .map(|(_, v)| v)
                        .ok_or_else(|| p.error(format!("element node `{id}` has no xlabel")))?;
                    g.elements.push((i, label));
                }
            }
        }
    }
    Ok(g)
}

pub(super) fn parse_dot(text: &str) -> Result<Structure, IoError> {
    let mut g = read_graph(text)?;
    let syntax = |message: &str| IoError::Syntax {
        line: 1,
        column: 1,
        message: message.to_string(),
    };
    g.elements.sort_by_key(|(i, _)| *i);
    if g.elements.iter().enumerate().any(|(pos, (i, _))| pos != *i) {
        return Err(syntax("element nodes must be numbered e0, e1, ... without gaps"));
    }
    let labels: Vec<String> = g.elements.into_iter().map(|(_, l)| l).collect();
    let domain = Domain::new(&labels)?;
    let n = domain.len();
    let in_range = |i: usize| {
        domain.check_index(i)?;
        Ok::<usize, IoError>(i)
    };
    match g.kind.as_deref() {
        Some("part") => {
            let mut pairs = Vec::new();
            for (from, to) in g.edges {
                match (from, to) {
                    (NodeRef::Element(x), NodeRef::Element(y)) => pairs.push((in_range(x)?, in_range(y)?)),
                    _ => return Err(syntax("part diagrams connect element nodes only")),
                }
            }
            let rel = PartRelation::from_pairs(n, pairs);
            Ok(Structure::Part(MereoStructure::new(domain, rel)?))
        }
        Some("sum") => {
            let mut pairs = Vec::new();
            for (from, to) in g.edges {
                match (from, to) {
                    (NodeRef::Element(x), NodeRef::Set(set)) => pairs.push((in_range(x)?, set)),
                    _ => return Err(syntax("sum diagrams connect element nodes to set nodes")),
                }
            }
            let rel = SumRelation::from_pairs(n, pairs);
            Ok(Structure::Sum(SumStructure::new(domain, rel)?))
        }
        _ => Err(syntax("missing `comment=\"kind=part|sum\"` graph attribute")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_model;

    fn s5_fail() -> Structure {
        SumStructure::from_labels(&["a", "b"], &[("a", &["a"][..]), ("a", &["a", "b"]), ("b", &["b"])])
            .unwrap()
            .into()
    }

    #[test]
    fn two_element_diagram_shape() {
        let dot = export_dot(&s5_fail(), Some("s5_fail"));
        let count = |needle: &str| dot.lines().filter(|l| l.contains(needle)).count();
        assert_eq!(count("shape=point"), 2);
        assert_eq!(count("shape=plaintext"), 3);
        assert_eq!(count("style=dashed"), 3);
        assert!(dot.contains("s3 [shape=plaintext, label=\"{a,b}\"];"));
        assert_eq!(export_dot(&s5_fail(), Some("s5_fail")), dot);
    }

    #[test]
    fn singleton_diagram() {
        let s: Structure = SumStructure::from_labels(&["a"], &[("a", &["a"][..])]).unwrap().into();
        let dot = export_dot(&s, None);
        assert_eq!(
            dot,
            "digraph \"model\" {\n  comment=\"kind=sum\";\n  rankdir=BT;\n  e0 [shape=point, width=0.08, xlabel=\"a\"];\n  s1 [shape=plaintext, label=\"{a}\"];\n  e0 -> s1 [style=dashed];\n}\n"
        );
    }

    #[test]
    fn part_diagram_draws_covering_lines() {
        let m: Structure = MereoStructure::from_labels(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c"), ("a", "c")],
        )
        .unwrap()
        .into();
        let dot = export_dot(&m, None);
        assert!(dot.contains("e0 -> e1 [dir=none];"));
        assert!(dot.contains("e1 -> e2 [dir=none];"));
        assert!(dot.contains("e0 -> e2 [style=invis];"));
        assert!(dot.contains("e0 -> e0 [style=invis];"));
    }

    #[test]
    fn diagrams_parse_back() {
        let s = s5_fail();
        assert_eq!(parse_model(&export_dot(&s, Some("s5_fail"))).unwrap(), s);
        let empty_sum: Structure = SumStructure::from_labels(&["a"], &[("a", &[][..])]).unwrap().into();
        assert_eq!(parse_model(&export_dot(&empty_sum, None)).unwrap(), empty_sum);
        let odd: Structure = MereoStructure::from_labels(&["x \"q\"", "y"], &[("y", "x \"q\"")])
            .unwrap()
            .into();
        assert_eq!(parse_model(&export_dot(&odd, None)).unwrap(), odd);
    }

    #[test]
    fn reader_errors() {
        assert!(matches!(parse_model("digraph { e0 -> }"), Err(IoError::Syntax { .. })));
        assert!(matches!(
            parse_model("digraph g {\n  e0 [xlabel=a];\n}"),
            Err(IoError::Syntax { .. })
        ));
        let bad_edge = "digraph g { comment=\"kind=sum\"; e0 [xlabel=a]; e0 -> e0; }";
        assert!(parse_model(bad_edge).is_err());
    }
}
