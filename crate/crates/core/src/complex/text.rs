//! Line-oriented text format for 2-complexes.
//!
//! ```text
//! # comment
//! vertex <id>
//! edge <id> <tail> <head>
//! face <id> = +e1 -e2 +e3 ...
//! ```
//!
//! `+e` traverses edge `e` from tail to head, `-e` from head to tail.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{is_valid_id, CellKind, ComplexBuilder, ComplexError, TwoComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    Invalid(ComplexError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::Invalid(err) => write!(f, "{err}"),
        }
    }
}

/// A parse failure with a 1-based source location.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn syntax(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Self {
            line,
            column,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }

    fn invalid(line: usize, column: usize, err: ComplexError) -> Self {
        Self {
            line,
            column,
            kind: ParseErrorKind::Invalid(err),
        }
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns,
/// stopping at a `#` comment.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let code = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &code[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &code[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (code[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_complex(text: &str) -> Result<TwoComplex, ParseError> {
    let mut builder = ComplexBuilder::default();
    let mut vertex_at: HashMap<String, usize> = HashMap::new();
    let mut edge_at: HashMap<String, usize> = HashMap::new();
    let mut face_at: HashMap<String, usize> = HashMap::new();
    // edge references are checked after all lines are read so definitions
    // may appear in any order
    let mut pending_vertices = Vec::new();
    let mut pending_edges = Vec::new();

    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let toks = tokens(line);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let check_id = |kind: CellKind, (c, id): (usize, &str)| {
            if is_valid_id(id) {
                Ok(())
            } else {
                Err(ParseError::invalid(
                    ln,
                    c,
                    ComplexError::InvalidId {
                        kind,
                        id: id.to_string(),
                    },
                ))
            }
        };
        let define = |map: &mut HashMap<String, usize>, kind, (c, id): (usize, &str)| {
            if map.insert(id.to_string(), ln).is_some() {
                return Err(ParseError::invalid(
                    ln,
                    c,
                    ComplexError::DuplicateId {
                        kind,
                        id: id.to_string(),
                    },
                ));
            }
            Ok(())
        };
        match keyword {
            "vertex" => {
                if toks.len() != 2 {
                    return Err(ParseError::syntax(ln, col, "expected `vertex <id>`"));
                }
                check_id(CellKind::Vertex, toks[1])?;
                define(&mut vertex_at, CellKind::Vertex, toks[1])?;
                builder.vertex(toks[1].1);
            }
            "edge" => {
                if toks.len() != 4 {
                    return Err(ParseError::syntax(
                        ln,
                        col,
                        "expected `edge <id> <tail> <head>`",
                    ));
                }
                check_id(CellKind::Edge, toks[1])?;
                define(&mut edge_at, CellKind::Edge, toks[1])?;
                for &(c, v) in &toks[2..] {
                    pending_vertices.push((ln, c, toks[1].1.to_string(), v.to_string()));
                }
                builder.edge(toks[1].1, toks[2].1, toks[3].1);
            }
            "face" => {
                if toks.len() < 3 || toks[2].1 != "=" {
                    return Err(ParseError::syntax(
                        ln,
                        col,
                        "expected `face <id> = <±edge> <±edge> ...`",
                    ));
                }
                check_id(CellKind::Face, toks[1])?;
                define(&mut face_at, CellKind::Face, toks[1])?;
                let mut walk = Vec::new();
                for &(c, tok) in &toks[3..] {
                    let (forward, edge) = match tok.split_at(1) {
                        ("+", rest) if !rest.is_empty() => (true, rest),
                        ("-", rest) if !rest.is_empty() => (false, rest),
                        _ => {
                            return Err(ParseError::syntax(
                                ln,
                                c,
                                format!("expected `+edge` or `-edge`, found `{tok}`"),
                            ))
                        }
                    };
                    pending_edges.push((ln, c + 1, toks[1].1.to_string(), edge.to_string()));
                    walk.push((edge.to_string(), forward));
                }
                builder.face(toks[1].1, walk);
            }
            other => {
                return Err(ParseError::syntax(
                    ln,
                    col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    for (ln, c, edge, vertex) in pending_vertices {
        if !vertex_at.contains_key(&vertex) {
            return Err(ParseError::invalid(
                ln,
                c,
                ComplexError::UnknownVertex { edge, vertex },
            ));
        }
    }
    for (ln, c, face, edge) in pending_edges {
        if !edge_at.contains_key(&edge) {
            return Err(ParseError::invalid(
                ln,
                c,
                ComplexError::UnknownEdge { face, edge },
            ));
        }
    }

    builder.build().map_err(|err| {
        let ln = match &err {
            ComplexError::LoopEdge { edge, .. } => edge_at.get(edge).copied(),
            ComplexError::FaceTooShort { face, .. }
            | ComplexError::FaceNotClosed { face, .. }
            | ComplexError::RepeatedEdge { face, .. }
            | ComplexError::RepeatedVertex { face, .. } => face_at.get(face).copied(),
            _ => None,
        };
        ParseError::invalid(ln.unwrap_or(0), 1, err)
    })
}

/// Canonical text form: cells in id order, one per line.
pub fn serialize_complex(k: &TwoComplex) -> String {
    let mut out = String::new();
    for v in k.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for e in k.edges() {
        writeln!(
            out,
            "edge {} {} {}",
            e.id,
            k.vertices()[e.tail],
            k.vertices()[e.head]
        )
        .unwrap();
    }
    for f in k.faces() {
        write!(out, "face {} =", f.id).unwrap();
        for s in &f.walk {
            let sign = if s.forward { '+' } else { '-' };
            write!(out, " {sign}{}", k.edges()[s.edge].id).unwrap();
        }
        out.push('\n');
    }
    out
}
