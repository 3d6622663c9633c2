use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use thiserror::Error;

use super::{require_even, CoverError};
use crate::complex::{FaceSubset, TwoComplex};

/// Two face indices glued along an edge, smaller index first.
pub type Pair = (usize, usize);
pub type Matching = Vec<Pair>;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AssignmentError {
    #[error("assignment has {got} edge matchings, complex has {expected} edges")]
    EdgeCount { expected: usize, got: usize },
    #[error("edge `{edge}`: face `{face}` does not contain the edge")]
    NotIncident { edge: String, face: String },
    #[error("edge `{edge}`: face `{face}` is not matched")]
    Uncovered { edge: String, face: String },
    #[error("edge `{edge}`: face `{face}` is matched more than once")]
    CoveredTwice { edge: String, face: String },
    #[error("edge `{edge}`: face `{face}` is matched with itself")]
    SelfPair { edge: String, face: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown {kind} `{id}`")]
    UnknownId {
        line: usize,
        kind: &'static str,
        id: String,
    },
    #[error("edge `{0}` has degree above 2 and no matching was given")]
    Missing(String),
}

/// All perfect matchings of `items`, pairing the first item with each later
/// item in turn and recursing on the rest. There are `(n-1)!!` of them.
pub fn enumerate_matchings<T: Clone>(items: &[T]) -> Result<Vec<Vec<(T, T)>>, CoverError> {
    if items.len() % 2 == 1 {
        return Err(CoverError::OddMatching(items.len()));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(items.len() / 2);
    recurse(items.to_vec(), &mut current, &mut out);
    Ok(out)
}

fn recurse<T: Clone>(rest: Vec<T>, current: &mut Vec<(T, T)>, out: &mut Vec<Vec<(T, T)>>) {
    if rest.is_empty() {
        out.push(current.clone());
        return;
    }
    for j in 1..rest.len() {
        let mut remaining = rest.clone();
        let partner = remaining.remove(j);
        let first = remaining.remove(0);
        current.push((first, partner));
        recurse(remaining, current, out);
        current.pop();
    }
}

/// `(n-1)!!`, the number of perfect matchings on `n` items (0 when `n` is odd).
pub fn matching_count(n: usize) -> BigUint {
    if n % 2 == 1 {
        return BigUint::from(0u32);
    }
    (1..n)
        .step_by(2)
        .fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Number of gluing assignments: the product over edges of `(deg - 1)!!`.
pub fn assignment_count(k: &TwoComplex) -> Result<BigUint, CoverError> {
    require_even(k)?;
    Ok(k.edge_degrees()
        .into_iter()
        .fold(BigUint::from(1u32), |acc, d| acc * matching_count(d)))
}

/// One perfect matching per edge on the faces containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingAssignment {
    matchings: Vec<Matching>,
}

impl GluingAssignment {
    /// Builds an assignment from per-edge matchings, indexed like the
    /// complex's edges. Pairs are normalized; call [`validate`] against a
    /// complex before use.
    ///
    /// [`validate`]: GluingAssignment::validate
    pub fn new(matchings: Vec<Matching>) -> Self {
        let mut a = Self { matchings };
        for m in &mut a.matchings {
            normalize(m);
        }
        a
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn matching(&self, edge: usize) -> &[Pair] {
        &self.matchings[edge]
    }

    pub(crate) fn set_matching(&mut self, edge: usize, mut matching: Matching) {
        normalize(&mut matching);
        self.matchings[edge] = matching;
    }

    pub fn validate(&self, k: &TwoComplex) -> Result<(), AssignmentError> {
        if self.matchings.len() != k.edge_count() {
            return Err(AssignmentError::EdgeCount {
                expected: k.edge_count(),
                got: self.matchings.len(),
            });
        }
        let incident = k.edge_faces();
        for (e, (m, inc)) in self.matchings.iter().zip(&incident).enumerate() {
            let edge = || k.edges()[e].id.clone();
            let face = |f: usize| {
                k.faces()
                    .get(f)
                    .map_or_else(|| f.to_string(), |f| f.id.clone())
            };
            let mut seen = BTreeMap::new();
            for &(f, g) in m {
                if f == g {
                    return Err(AssignmentError::SelfPair {
                        edge: edge(),
                        face: face(f),
                    });
                }
                for x in [f, g] {
                    if !inc.contains(&x) {
                        return Err(AssignmentError::NotIncident {
                            edge: edge(),
                            face: face(x),
                        });
                    }
                    if seen.insert(x, ()).is_some() {
                        return Err(AssignmentError::CoveredTwice {
                            edge: edge(),
                            face: face(x),
                        });
                    }
                }
            }
            if let Some(&f) = inc.iter().find(|f| !seen.contains_key(f)) {
                return Err(AssignmentError::Uncovered {
                    edge: edge(),
                    face: face(f),
                });
            }
        }
        Ok(())
    }

    /// Text form: one `glue <edge> <face> <face>` line per matched pair.
    pub fn to_text(&self, k: &TwoComplex) -> String {
        let mut out = String::new();
        for (e, m) in self.matchings.iter().enumerate() {
            for &(f, g) in m {
                writeln!(
                    out,
                    "glue {} {} {}",
                    k.edges()[e].id,
                    k.faces()[f].id,
                    k.faces()[g].id
                )
                .unwrap();
            }
        }
        out
    }

    /// Parses the text form. Edges of degree 2 may be omitted (their
    /// matching is forced); every other edge must be listed.
    pub fn parse(text: &str, k: &TwoComplex) -> Result<Self, AssignmentError> {
        let mut given: Vec<Option<Matching>> = vec![None; k.edge_count()];
        for (ln, line) in text.lines().enumerate() {
            let line_no = ln + 1;
            let toks: Vec<&str> = crate::complex::tokens_of(line);
            if toks.is_empty() {
                continue;
            }
            if toks[0] != "glue" || toks.len() != 4 {
                return Err(AssignmentError::Syntax {
                    line: line_no,
                    msg: "expected `glue <edge> <face> <face>`".into(),
                });
            }
            let e = k
                .edge_idx(toks[1])
                .ok_or_else(|| AssignmentError::UnknownId {
                    line: line_no,
                    kind: "edge",
                    id: toks[1].into(),
                })?;
            let face = |id: &str| {
                k.face_idx(id).ok_or_else(|| AssignmentError::UnknownId {
                    line: line_no,
                    kind: "face",
                    id: id.into(),
                })
            };
            let pair = (face(toks[2])?, face(toks[3])?);
            given[e].get_or_insert_with(Vec::new).push(pair);
        }
        let incident = k.edge_faces();
        let matchings = given
            .into_iter()
            .enumerate()
            .map(|(e, m)| match m {
                Some(m) => Ok(m),
                None if incident[e].len() == 2 => Ok(vec![(incident[e][0], incident[e][1])]),
                None => Err(AssignmentError::Missing(k.edges()[e].id.clone())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let a = Self::new(matchings);
        a.validate(k)?;
        Ok(a)
    }
}

fn normalize(m: &mut Matching) {
    for p in m.iter_mut() {
        if p.0 > p.1 {
            *p = (p.1, p.0);
        }
    }
    m.sort_unstable();
}

/// The first enumerated matching at every edge. With a decomposition, faces
/// are only matched within their own part.
pub fn canonical_assignment(
    k: &TwoComplex,
    decomposition: Option<&[FaceSubset]>,
) -> Result<GluingAssignment, CoverError> {
    require_even(k)?;
    let incident = k.edge_faces();
    let part_of = match decomposition {
        Some(parts) => Some(part_index(k, parts)?),
        None => None,
    };
    let mut matchings = Vec::with_capacity(k.edge_count());
    for (e, faces) in incident.iter().enumerate() {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &f in faces {
            let part = part_of.as_ref().map_or(0, |p| p[f]);
            groups.entry(part).or_default().push(f);
        }
        let mut matching = Vec::with_capacity(faces.len() / 2);
        for (part, group) in groups {
            if group.len() % 2 == 1 {
                return Err(CoverError::OddPart {
                    part,
                    edge: k.edges()[e].id.clone(),
                });
            }
            matching.extend(group.chunks(2).map(|c| (c[0], c[1])));
        }
        matchings.push(matching);
    }
    Ok(GluingAssignment::new(matchings))
}

fn part_index(k: &TwoComplex, parts: &[FaceSubset]) -> Result<Vec<usize>, CoverError> {
    let n = k.face_count();
    let mut owner = vec![Vec::new(); n];
    for (i, p) in parts.iter().enumerate() {
        for f in p.iter().filter(|&f| f < n) {
            owner[f].push(i);
        }
    }
    owner
        .into_iter()
        .enumerate()
        .map(|(f, o)| match o.as_slice() {
            [single] => Ok(*single),
            _ => Err(CoverError::NotAPartition {
                face: k.faces()[f].id.clone(),
                count: o.len(),
            }),
        })
        .collect()
}

/// Mixed-radix index space over all gluing assignments of an even complex.
///
/// Digits follow edge id order with the last edge varying fastest, so a
/// contiguous index range shares its leading choices.
#[derive(Clone, Debug)]
pub struct AssignmentSpace {
    options: Vec<Vec<Matching>>,
}

impl AssignmentSpace {
    pub fn new(k: &TwoComplex) -> Result<Self, CoverError> {
        require_even(k)?;
        let options = k
            .edge_faces()
            .iter()
            .map(|faces| enumerate_matchings(faces))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { options })
    }

    pub fn radices(&self) -> Vec<usize> {
        self.options.iter().map(Vec::len).collect()
    }

    pub fn options(&self, edge: usize) -> &[Matching] {
        &self.options[edge]
    }

    pub fn len(&self) -> BigUint {
        self.options
            .iter()
            .fold(BigUint::from(1u32), |acc, o| acc * o.len())
    }

    pub fn is_empty(&self) -> bool {
        self.options.iter().any(Vec::is_empty)
    }

    /// Per-edge matching indices for `index`.
    pub fn digits(&self, mut index: u64) -> Vec<usize> {
        let mut digits = vec![0; self.options.len()];
        for (e, o) in self.options.iter().enumerate().rev() {
            let radix = o.len() as u64;
            digits[e] = (index % radix) as usize;
            index /= radix;
        }
        digits
    }

    pub fn assignment(&self, index: u64) -> GluingAssignment {
        self.from_digits(&self.digits(index))
    }

    pub fn from_digits(&self, digits: &[usize]) -> GluingAssignment {
        GluingAssignment::new(
            self.options
                .iter()
                .zip(digits)
                .map(|(o, &d)| o[d].clone())
                .collect(),
        )
    }
}
