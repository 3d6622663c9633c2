//! Polygonal 2-complexes.
//!
//! A [`TwoComplex`] holds vertices, edges with two distinct endpoints, and
//! polygonal faces given as closed directed edge walks. Faces are stored as
//! walks rather than vertex cycles because parallel edges (same endpoints,
//! different ids) are allowed.
//!
//! Cells are addressed by dense indices in lexicographic id order; the
//! original string ids are preserved verbatim.

mod text;

pub use text::{parse_complex, serialize_complex, ParseError, ParseErrorKind};

pub(crate) fn tokens_of(line: &str) -> Vec<&str> {
    text::tokens(line).into_iter().map(|(_, t)| t).collect()
}

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::bits::BitVec;
use crate::union_find::DisjointSet;

/// Which kind of cell an id refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Vertex,
    Edge,
    Face,
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::Vertex => "vertex",
            CellKind::Edge => "edge",
            CellKind::Face => "face",
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: CellKind, id: String },
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("edge `{edge}` has equal endpoints `{vertex}`")]
    LoopEdge { edge: String, vertex: String },
    #[error("face `{face}` references unknown edge `{edge}`")]
    UnknownEdge { face: String, edge: String },
    #[error("face `{face}` has {len} edges; faces need at least 3")]
    FaceTooShort { face: String, len: usize },
    #[error("face `{face}` walk is not closed: step {step} ends at `{end}` but step {next} starts at `{start}`")]
    FaceNotClosed {
        face: String,
        step: usize,
        next: usize,
        end: String,
        start: String,
    },
    #[error("face `{face}` uses edge `{edge}` more than once")]
    RepeatedEdge { face: String, edge: String },
    #[error("face `{face}` visits vertex `{vertex}` more than once")]
    RepeatedVertex { face: String, vertex: String },
    #[error("invalid {kind} id `{id}`: ids are non-empty tokens without whitespace or `#`")]
    InvalidId { kind: CellKind, id: String },
    #[error("unknown face `{0}`")]
    UnknownFace(String),
    #[error("face subset has width {got}, complex has {expected} faces")]
    SubsetWidth { expected: usize, got: usize },
    #[error("face subset is empty")]
    EmptySubset,
    #[error("complex has no cells")]
    Empty,
    #[error("complex has no faces")]
    NoFaces,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// One step of a face walk: an edge index and whether it is traversed
/// tail to head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub walk: Vec<Step>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Position of `edge` in the walk, if the face uses it.
    pub fn position_of(&self, edge: usize) -> Option<usize> {
        self.walk.iter().position(|s| s.edge == edge)
    }
}

/// A validated, immutable polygonal 2-complex.
#[derive(Clone, Debug)]
pub struct TwoComplex {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    face_index: HashMap<String, usize>,
}

impl PartialEq for TwoComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges && self.faces == other.faces
    }
}

impl Eq for TwoComplex {}

impl TwoComplex {
    pub fn builder() -> ComplexBuilder {
        ComplexBuilder::default()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `(vertices, edges, faces)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertex_count(), self.edge_count(), self.face_count())
    }

    pub fn vertex_idx(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge_idx(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub fn face_idx(&self, id: &str) -> Option<usize> {
        self.face_index.get(id).copied()
    }

    /// Vertex at which `step` starts.
    pub fn step_start(&self, step: Step) -> usize {
        let e = &self.edges[step.edge];
        if step.forward {
            e.tail
        } else {
            e.head
        }
    }

    /// Vertex at which `step` ends.
    pub fn step_end(&self, step: Step) -> usize {
        let e = &self.edges[step.edge];
        if step.forward {
            e.head
        } else {
            e.tail
        }
    }

    /// Boundary vertices of a face, in walk order (corner `i` starts step `i`).
    pub fn face_vertices(&self, face: usize) -> Vec<usize> {
        self.faces[face]
            .walk
            .iter()
            .map(|&s| self.step_start(s))
            .collect()
    }

    /// Number of faces containing each edge, by edge index.
    pub fn edge_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.edges.len()];
        for f in &self.faces {
            for s in &f.walk {
                deg[s.edge] += 1;
            }
        }
        deg
    }

    /// Faces containing each edge, by edge index, in face index order.
    pub fn edge_faces(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            for s in &f.walk {
                inc[s.edge].push(fi);
            }
        }
        inc
    }

    pub fn degrees(&self) -> DegreeReport {
        let mut vertex_deg = vec![0usize; self.vertices.len()];
        for e in &self.edges {
            vertex_deg[e.tail] += 1;
            vertex_deg[e.head] += 1;
        }
        DegreeReport {
            edges: self
                .edges
                .iter()
                .zip(self.edge_degrees())
                .map(|(e, d)| (e.id.clone(), d))
                .collect(),
            vertices: self.vertices.iter().cloned().zip(vertex_deg).collect(),
        }
    }

    /// Every edge lies on a positive, even number of faces.
    pub fn is_even(&self) -> bool {
        self.edge_degrees().iter().all(|&d| d > 0 && d % 2 == 0)
    }

    /// Ids of edges whose degree is zero or odd.
    pub fn odd_edges(&self) -> Vec<&str> {
        self.edge_degrees()
            .iter()
            .zip(&self.edges)
            .filter(|(&d, _)| d == 0 || d % 2 == 1)
            .map(|(_, e)| e.id.as_str())
            .collect()
    }

    /// Connectivity of the incidence graph on vertices, edges and faces.
    pub fn is_connected(&self) -> Result<bool, ComplexError> {
        let (nv, ne, nf) = self.counts();
        if nv + ne + nf == 0 {
            return Err(ComplexError::Empty);
        }
        let mut ds = DisjointSet::new(nv + ne + nf);
        for (ei, e) in self.edges.iter().enumerate() {
            ds.union(nv + ei, e.tail);
            ds.union(nv + ei, e.head);
        }
        for (fi, f) in self.faces.iter().enumerate() {
            for s in &f.walk {
                ds.union(nv + ne + fi, nv + s.edge);
            }
        }
        Ok(ds.labels().1 == 1)
    }

    /// Connectivity of the complex with its vertices removed.
    ///
    /// Holds iff the complex is connected, every edge lies on a face, and
    /// the edge-face incidence graph is connected.
    pub fn is_strongly_connected(&self) -> Result<bool, ComplexError> {
        if self.faces.is_empty() {
            return Err(ComplexError::NoFaces);
        }
        if !self.is_connected()? {
            return Ok(false);
        }
        let ne = self.edges.len();
        let mut ds = DisjointSet::new(ne + self.faces.len());
        let mut touched = vec![false; ne];
        for (fi, f) in self.faces.iter().enumerate() {
            for s in &f.walk {
                touched[s.edge] = true;
                ds.union(ne + fi, s.edge);
            }
        }
        Ok(touched.iter().all(|&t| t) && ds.labels().1 == 1)
    }

    /// Empty subset over this complex's faces.
    pub fn empty_face_subset(&self) -> FaceSubset {
        FaceSubset::new(BitVec::zeros(self.faces.len()))
    }

    pub fn all_faces(&self) -> FaceSubset {
        FaceSubset::new(BitVec::ones(self.faces.len()))
    }

    pub fn face_subset<S: AsRef<str>>(&self, ids: &[S]) -> Result<FaceSubset, ComplexError> {
        let mut bits = BitVec::zeros(self.faces.len());
        for id in ids {
            let idx = self
                .face_idx(id.as_ref())
                .ok_or_else(|| ComplexError::UnknownFace(id.as_ref().to_string()))?;
            bits.set(idx, true);
        }
        Ok(FaceSubset::new(bits))
    }

    /// The complex spanned by the faces in `subset` together with their
    /// edges and vertices.
    pub fn subcomplex(&self, subset: &FaceSubset) -> Result<TwoComplex, ComplexError> {
        if subset.width() != self.faces.len() {
            return Err(ComplexError::SubsetWidth {
                expected: self.faces.len(),
                got: subset.width(),
            });
        }
        if subset.is_empty() {
            return Err(ComplexError::EmptySubset);
        }
        let mut keep_edge = vec![false; self.edges.len()];
        for fi in subset.iter() {
            for s in &self.faces[fi].walk {
                keep_edge[s.edge] = true;
            }
        }
        let mut keep_vertex = vec![false; self.vertices.len()];
        for (e, _) in self.edges.iter().zip(&keep_edge).filter(|(_, &k)| k) {
            keep_vertex[e.tail] = true;
            keep_vertex[e.head] = true;
        }
        let mut b = ComplexBuilder::default();
        for (v, _) in self.vertices.iter().zip(&keep_vertex).filter(|(_, &k)| k) {
            b.vertex(v.clone());
        }
        for (e, _) in self.edges.iter().zip(&keep_edge).filter(|(_, &k)| k) {
            b.edge(
                e.id.clone(),
                self.vertices[e.tail].clone(),
                self.vertices[e.head].clone(),
            );
        }
        for fi in subset.iter() {
            let f = &self.faces[fi];
            b.face(
                f.id.clone(),
                f.walk
                    .iter()
                    .map(|s| (self.edges[s.edge].id.clone(), s.forward)),
            );
        }
        b.build()
    }

    /// Same complex with every id passed through `rename`; used for
    /// isomorphism-invariance checks.
    pub fn relabel(
        &self,
        mut vertex: impl FnMut(&str) -> String,
        mut edge: impl FnMut(&str) -> String,
        mut face: impl FnMut(&str) -> String,
    ) -> Result<TwoComplex, ComplexError> {
        let vnames: Vec<String> = self.vertices.iter().map(|v| vertex(v)).collect();
        let enames: Vec<String> = self.edges.iter().map(|e| edge(&e.id)).collect();
        let mut b = ComplexBuilder::default();
        for v in &vnames {
            b.vertex(v.clone());
        }
        for (e, name) in self.edges.iter().zip(&enames) {
            b.edge(name.clone(), vnames[e.tail].clone(), vnames[e.head].clone());
        }
        for f in &self.faces {
            b.face(
                face(&f.id),
                f.walk.iter().map(|s| (enames[s.edge].clone(), s.forward)),
            );
        }
        b.build()
    }
}

/// Exact incidence counts keyed by id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    /// Edge id to number of faces containing it.
    pub edges: BTreeMap<String, usize>,
    /// Vertex id to number of incident edges.
    pub vertices: BTreeMap<String, usize>,
}

impl DegreeReport {
    /// Number of edges having each degree.
    pub fn edge_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for &d in self.edges.values() {
            *profile.entry(d).or_insert(0) += 1;
        }
        profile
    }
}

/// A set of faces, also read as a vector over GF(2) indexed by face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSubset {
    bits: BitVec,
}

impl FaceSubset {
    pub fn new(bits: BitVec) -> Self {
        Self { bits }
    }

    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::new(BitVec::from_indices(width, indices))
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    /// Number of faces of the ambient complex.
    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn contains(&self, face: usize) -> bool {
        self.bits.get(face)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn complement(&self) -> FaceSubset {
        Self::new(self.bits.not())
    }

    /// Faces of `within` that are not in `self`.
    pub fn complement_within(&self, within: &FaceSubset) -> FaceSubset {
        Self::new(within.bits.and(&self.bits.not()))
    }

    pub fn symmetric_difference(&self, other: &FaceSubset) -> FaceSubset {
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Self::new(bits)
    }

    pub fn ids<'a>(&self, complex: &'a TwoComplex) -> Vec<&'a str> {
        self.iter().map(|f| complex.faces[f].id.as_str()).collect()
    }
}

/// Collects cells by id and validates them into a [`TwoComplex`].
#[derive(Clone, Debug, Default)]
pub struct ComplexBuilder {
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
    faces: Vec<(String, Vec<(String, bool)>)>,
}

impl ComplexBuilder {
    pub fn vertex(&mut self, id: impl Into<String>) -> &mut Self {
        self.vertices.push(id.into());
        self
    }

    pub fn edge(
        &mut self,
        id: impl Into<String>,
        tail: impl Into<String>,
        head: impl Into<String>,
    ) -> &mut Self {
        self.edges.push((id.into(), tail.into(), head.into()));
        self
    }

    /// Adds a face from `(edge id, forward)` steps.
    pub fn face<I, S>(&mut self, id: impl Into<String>, walk: I) -> &mut Self
    where
        I: IntoIterator<Item = (S, bool)>,
        S: Into<String>,
    {
        self.faces.push((
            id.into(),
            walk.into_iter().map(|(e, fwd)| (e.into(), fwd)).collect(),
        ));
        self
    }

    pub fn build(&self) -> Result<TwoComplex, ComplexError> {
        let ids = self
            .vertices
            .iter()
            .map(|v| (CellKind::Vertex, v))
            .chain(self.edges.iter().map(|e| (CellKind::Edge, &e.0)))
            .chain(self.faces.iter().map(|f| (CellKind::Face, &f.0)));
        for (kind, id) in ids {
            if !is_valid_id(id) {
                return Err(ComplexError::InvalidId {
                    kind,
                    id: id.clone(),
                });
            }
        }
        let mut vertices = self.vertices.clone();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateId {
                kind: CellKind::Vertex,
                id: w[0].clone(),
            });
        }
        let vertex_index: HashMap<String, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();

        let mut raw_edges: Vec<&(String, String, String)> = self.edges.iter().collect();
        raw_edges.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = raw_edges.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(ComplexError::DuplicateId {
                kind: CellKind::Edge,
                id: w[0].0.clone(),
            });
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (id, tail, head) in raw_edges {
            let lookup = |v: &String| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| ComplexError::UnknownVertex {
                        edge: id.clone(),
                        vertex: v.clone(),
                    })
            };
            let (t, h) = (lookup(tail)?, lookup(head)?);
            if t == h {
                return Err(ComplexError::LoopEdge {
                    edge: id.clone(),
                    vertex: tail.clone(),
                });
            }
            edges.push(Edge {
                id: id.clone(),
                tail: t,
                head: h,
            });
        }
        let edge_index: HashMap<String, usize> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();

        let mut raw_faces: Vec<&(String, Vec<(String, bool)>)> = self.faces.iter().collect();
        raw_faces.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = raw_faces.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(ComplexError::DuplicateId {
                kind: CellKind::Face,
                id: w[0].0.clone(),
            });
        }
        let mut faces = Vec::with_capacity(raw_faces.len());
        for (id, raw_walk) in raw_faces {
            let mut walk = Vec::with_capacity(raw_walk.len());
            for (e, fwd) in raw_walk {
                let edge = *edge_index.get(e).ok_or_else(|| ComplexError::UnknownEdge {
                    face: id.clone(),
                    edge: e.clone(),
                })?;
                walk.push(Step {
                    edge,
                    forward: *fwd,
                });
            }
            validate_walk(id, &walk, &edges, &vertices)?;
            faces.push(Face {
                id: id.clone(),
                walk,
            });
        }
        let face_index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.id.clone(), i))
            .collect();

        Ok(TwoComplex {
            vertices,
            edges,
            faces,
            vertex_index,
            edge_index,
            face_index,
        })
    }
}

pub(crate) fn is_valid_id(id: &str) -> bool {
    !id.is_empty() && id != "=" && !id.contains('#') && !id.chars().any(char::is_whitespace)
}

fn validate_walk(
    face: &str,
    walk: &[Step],
    edges: &[Edge],
    vertices: &[String],
) -> Result<(), ComplexError> {
    if walk.len() < 3 {
        return Err(ComplexError::FaceTooShort {
            face: face.to_string(),
            len: walk.len(),
        });
    }
    let start = |s: &Step| {
        let e = &edges[s.edge];
        if s.forward {
            e.tail
        } else {
            e.head
        }
    };
    let end = |s: &Step| {
        let e = &edges[s.edge];
        if s.forward {
            e.head
        } else {
            e.tail
        }
    };
    for i in 0..walk.len() {
        let next = (i + 1) % walk.len();
        if end(&walk[i]) != start(&walk[next]) {
            return Err(ComplexError::FaceNotClosed {
                face: face.to_string(),
                step: i,
                next,
                end: vertices[end(&walk[i])].clone(),
                start: vertices[start(&walk[next])].clone(),
            });
        }
    }
    let mut seen_edges: Vec<usize> = walk.iter().map(|s| s.edge).collect();
    seen_edges.sort_unstable();
    if let Some(w) = seen_edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(ComplexError::RepeatedEdge {
            face: face.to_string(),
            edge: edges[w[0]].id.clone(),
        });
    }
    let mut seen_vertices: Vec<usize> = walk.iter().map(start).collect();
    seen_vertices.sort_unstable();
    if let Some(w) = seen_vertices.windows(2).find(|w| w[0] == w[1]) {
        return Err(ComplexError::RepeatedVertex {
            face: face.to_string(),
            vertex: vertices[w[0]].clone(),
        });
    }
    Ok(())
}
