//! Model documents and diagram export.
//!
//! A model document is a UTF-8 JSON object:
//!
//! ```text
//! document := { "kind": "part" | "sum",
//!               "elements": [ label, ... ],
//!               "pairs": [ pair, ... ],
//!               ("name": string,)? ("source": string)? }
//! pair     := [ label, label ]          (kind "part": x ⊑ y)
//!           | [ label, [ label, ... ] ] (kind "sum":  x + X, [] is ∅)
//! ```
//!
//! [`parse_model`] also accepts the DOT produced by [`export_dot`], so a
//! structure survives a trip through its diagram.

mod dot;

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dot::export_dot;

use crate::model::{Domain, MereoStructure, ModelError, PartRelation, SumRelation, SumStructure, Theory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("duplicate pair {0}")]
    DuplicatePair(String),
    #[error("duplicate member `{member}` in the collection summed by `{owner}`")]
    DuplicateMember { owner: String, member: String },
    #[error("pair #{index} does not match document kind `{kind}`")]
    KindMismatch { index: usize, kind: Theory },
}

/// A structure of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Part(MereoStructure),
    Sum(SumStructure),
}

impl Structure {
    pub fn domain(&self) -> &Domain {
        match self {
            Structure::Part(m) => m.domain(),
            Structure::Sum(s) => s.domain(),
        }
    }

    pub fn theory(&self) -> Theory {
        match self {
            Structure::Part(_) => Theory::Part,
            Structure::Sum(_) => Theory::Sum,
        }
    }
}

impl From<MereoStructure> for Structure {
    fn from(m: MereoStructure) -> Self {
        Structure::Part(m)
    }
}

impl From<SumStructure> for Structure {
    fn from(s: SumStructure) -> Self {
        Structure::Sum(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Pair {
    Part(String, String),
    Sum(String, Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub kind: Theory,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub elements: Vec<String>,
    pub pairs: Vec<Pair>,
}

impl ModelDocument {
    pub fn from_json(text: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(|e| IoError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Validates labels and pairs and builds the structure.
    pub fn to_structure(&self) -> Result<Structure, IoError> {
        let domain = Domain::new(&self.elements)?;
        let n = domain.len();
        match self.kind {
            Theory::Part => {
                let mut seen = HashSet::new();
                let mut pairs = Vec::with_capacity(self.pairs.len());
                for (index, pair) in self.pairs.iter().enumerate() {
                    let Pair::Part(x, y) = pair else {
                        return Err(IoError::KindMismatch { index, kind: self.kind });
                    };
                    let p = (domain.index_of(x)?, domain.index_of(y)?);
                    if !seen.insert(p) {
                        return Err(IoError::DuplicatePair(format!("[{x}, {y}]")));
                    }
                    pairs.push(p);
                }
                let rel = PartRelation::from_pairs(n, pairs);
                Ok(Structure::Part(MereoStructure::new(domain, rel)?))
            }
            Theory::Sum => {
                let mut seen = HashSet::new();
                let mut pairs = Vec::with_capacity(self.pairs.len());
                for (index, pair) in self.pairs.iter().enumerate() {
                    let Pair::Sum(x, members) = pair else {
                        return Err(IoError::KindMismatch { index, kind: self.kind });
                    };
                    let owner = domain.index_of(x)?;
                    let mut set = crate::model::Subset::EMPTY;
                    for member in members {
                        let i = domain.index_of(member)?;
                        if set.contains(i) {
                            return Err(IoError::DuplicateMember {
                                owner: x.clone(),
                                member: member.clone(),
                            });
                        }
                        set = set.with(i);
                    }
                    if !seen.insert((owner, set)) {
                        return Err(IoError::DuplicatePair(format!("[{x}, {}]", domain.show(set))));
                    }
                    pairs.push((owner, set));
                }
                let rel = SumRelation::from_pairs(n, pairs);
                Ok(Structure::Sum(SumStructure::new(domain, rel)?))
            }
        }
    }

    /// Canonical document: elements in domain order, pairs sorted by
    /// element index and then by subset (or second element) index.
    pub fn from_structure(structure: &Structure, name: Option<&str>) -> Self {
        let d = structure.domain();
        let label = |i: usize| d.label(i).to_string();
        let pairs = match structure {
            Structure::Part(m) => m.part().pairs().map(|(x, y)| Pair::Part(label(x), label(y))).collect(),
            Structure::Sum(s) => s
                .sum()
                .pairs()
                .map(|(x, set)| Pair::Sum(label(x), set.iter().map(label).collect()))
                .collect(),
        };
        ModelDocument {
            kind: structure.theory(),
            name: name.map(str::to_string),
            source: None,
            elements: d.labels().to_vec(),
            pairs,
        }
    }

    /// One pair per line.
    pub fn to_text(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let list = |items: &[String]| items.iter().map(|s| q(s)).collect::<Vec<_>>().join(", ");
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"kind\": {},", q(&self.kind.to_string()));
        if let Some(name) = &self.name {
            let _ = writeln!(out, "  \"name\": {},", q(name));
        }
        if let Some(source) = &self.source {
            let _ = writeln!(out, "  \"source\": {},", q(source));
        }
        let _ = writeln!(out, "  \"elements\": [{}],", list(&self.elements));
        if self.pairs.is_empty() {
            out.push_str("  \"pairs\": []\n}\n");
            return out;
        }
        out.push_str("  \"pairs\": [\n");
        for (i, pair) in self.pairs.iter().enumerate() {
            let body = match pair {
                Pair::Part(x, y) => format!("[{}, {}]", q(x), q(y)),
                Pair::Sum(x, members) => format!("[{}, [{}]]", q(x), list(members)),
            };
            let sep = if i + 1 == self.pairs.len() { "" } else { "," };
            let _ = writeln!(out, "    {body}{sep}");
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// Parses a model document (JSON) or a DOT diagram written by [`export_dot`].
pub fn parse_model(text: &str) -> Result<Structure, IoError> {
    let body = text.trim_start_matches('\u{feff}').trim_start();
    if body.starts_with("digraph") {
        dot::parse_dot(text)
    } else {
        ModelDocument::from_json(text)?.to_structure()
    }
}

/// Canonical document text for a structure.
pub fn write_model(structure: &Structure, name: Option<&str>) -> String {
    ModelDocument::from_structure(structure, name).to_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Subset;

    #[test]
    fn parse_empty_sum_document() {
        let text = r#"{"kind": "sum", "elements": ["a"], "pairs": [["a", ["a"]], ["a", []]]}"#;
        let Structure::Sum(s) = parse_model(text).unwrap() else { panic!("kind") };
        assert_eq!(s.sum().family(0), &[Subset::EMPTY, Subset::singleton(0)]);
    }

    #[test]
    fn parse_identity_part_document() {
        let text = r#"{"kind": "part", "elements": ["a"], "pairs": [["a", "a"]]}"#;
        let Structure::Part(m) = parse_model(text).unwrap() else { panic!("kind") };
        assert_eq!(m.part(), &PartRelation::identity(1));
    }

    #[test]
    fn unknown_label() {
        let text = r#"{"kind": "sum", "elements": ["a"], "pairs": [["a", ["b"]]]}"#;
        assert_eq!(
            parse_model(text),
            Err(IoError::Model(ModelError::UnknownLabel("b".into())))
        );
    }

    #[test]
    fn syntax_error_has_position() {
        let text = "{\n  \"kind\": \"sum\",\n  \"elements\": [\"a\"\n}";
        match parse_model(text) {
            Err(IoError::Syntax { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn validation_errors() {
        let dup = r#"{"kind": "part", "elements": ["a"], "pairs": [["a", "a"], ["a", "a"]]}"#;
        assert!(matches!(parse_model(dup), Err(IoError::DuplicatePair(_))));
        let member = r#"{"kind": "sum", "elements": ["a"], "pairs": [["a", ["a", "a"]]]}"#;
        assert!(matches!(parse_model(member), Err(IoError::DuplicateMember { .. })));
        let mixed = r#"{"kind": "part", "elements": ["a"], "pairs": [["a", ["a"]]]}"#;
        assert!(matches!(parse_model(mixed), Err(IoError::KindMismatch { index: 0, .. })));
        let labels: Vec<String> = (0..65).map(|i| format!("\"x{i}\"")).collect();
        let wide = format!(r#"{{"kind": "part", "elements": [{}], "pairs": []}}"#, labels.join(","));
        assert_eq!(parse_model(&wide), Err(IoError::Model(ModelError::TooWide(65))));
        let unknown_field = r#"{"kind": "part", "elements": ["a"], "pairs": [], "extra": 1}"#;
        assert!(matches!(parse_model(unknown_field), Err(IoError::Syntax { .. })));
    }

    #[test]
    fn canonical_text_round_trip() {
        let text = r#"{"kind": "sum", "name": "s5_fail", "elements": ["a", "b"],
            "pairs": [["b", ["b"]], ["a", ["b", "a"]], ["a", ["a"]]]}"#;
        let s = parse_model(text).unwrap();
        let written = write_model(&s, Some("s5_fail"));
        assert_eq!(
            written,
            "{\n  \"kind\": \"sum\",\n  \"name\": \"s5_fail\",\n  \"elements\": [\"a\", \"b\"],\n  \"pairs\": [\n    [\"a\", [\"a\"]],\n    [\"a\", [\"a\", \"b\"]],\n    [\"b\", [\"b\"]]\n  ]\n}\n"
        );
        assert_eq!(parse_model(&written).unwrap(), s);
        assert_eq!(write_model(&parse_model(&written).unwrap(), Some("s5_fail")), written);
    }
}
