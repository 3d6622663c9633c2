use thiserror::Error;

use super::{require_even, CombinatorialSurface, CoverError, GluingAssignment, Side, SurfaceFace};
use crate::complex::TwoComplex;

/// A cellular projection from a surface onto a complex.
///
/// Surface faces, edges (pairings) and vertices (corner orbits) each map to
/// a cell of the base by index.
#[derive(Clone, Debug)]
pub struct CoverMap<'a> {
    pub base: &'a TwoComplex,
    pub surface: CombinatorialSurface,
    /// Surface face index to base face index.
    pub face_map: Vec<usize>,
    /// Surface edge (pairing) index to base edge index.
    pub edge_map: Vec<usize>,
    /// Surface vertex index to base vertex index.
    pub vertex_map: Vec<usize>,
}

impl CoverMap<'_> {
    /// Number of components of the covering surface.
    pub fn component_count(&self) -> usize {
        self.surface.component_count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

/// First violated cover invariant.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CoverViolation {
    #[error("face map has {got} entries for {expected} surface faces")]
    FaceMapLength { expected: usize, got: usize },
    #[error("edge map has {got} entries for {expected} surface edges")]
    EdgeMapLength { expected: usize, got: usize },
    #[error("vertex map has {got} entries for {expected} surface vertices")]
    VertexMapLength { expected: usize, got: usize },
    #[error("base face `{0}` is covered twice")]
    FaceCoveredTwice(String),
    #[error("base face `{0}` is not covered")]
    FaceUncovered(String),
    #[error("surface face `{0}` does not follow the walk of its image")]
    WalkMismatch(String),
    #[error("surface edge {0} maps to a base edge its sides do not carry")]
    EdgeIncidence(usize),
    #[error("corner {pos} of surface face `{face}` maps to the wrong base vertex")]
    VertexIncidence { face: String, pos: usize },
    #[error(
        "base edge `{edge}` of degree {degree} has {found} preimage edges (expected {expected})"
    )]
    EdgePreimages {
        edge: String,
        degree: usize,
        found: usize,
        expected: usize,
    },
    #[error("surface corner {pos} of face `{face}` has {links} links (expected 2)")]
    LinkDegree {
        face: String,
        pos: usize,
        links: usize,
    },
}

/// Glues one copy of every face of `k` according to `assignment`.
///
/// For each matched pair `{f, g}` at edge `e`, the side of `f` on `e` is
/// glued to the side of `g` on `e`; at each endpoint of `e` the two faces'
/// corners there are identified. Surface vertices are the resulting corner
/// orbits.
pub fn build_cover<'a>(
    k: &'a TwoComplex,
    assignment: &GluingAssignment,
) -> Result<CoverMap<'a>, CoverError> {
    require_even(k)?;
    assignment.validate(k)?;
    let labels: Vec<String> = k.edges().iter().map(|e| e.id.clone()).collect();
    let faces: Vec<SurfaceFace> = k
        .faces()
        .iter()
        .map(|f| SurfaceFace {
            id: f.id.clone(),
            walk: f.walk.clone(),
        })
        .collect();
    let mut pairings = Vec::new();
    let mut edge_map = Vec::new();
    for (e, matching) in assignment.matchings().iter().enumerate() {
        for &(f, g) in matching {
            let side = |face: usize| Side {
                face,
                pos: k.faces()[face]
                    .position_of(e)
                    .expect("validated assignment only pairs incident faces"),
            };
            pairings.push((side(f), side(g)));
            edge_map.push(e);
        }
    }
    let surface = CombinatorialSurface::new(labels, faces, pairings)
        .expect("a validated assignment glues every side exactly once");
    let mut vertex_map = vec![usize::MAX; surface.vertex_count()];
    for (fi, f) in k.faces().iter().enumerate() {
        for (pos, &step) in f.walk.iter().enumerate() {
            vertex_map[surface.vertex_of(fi, pos)] = k.step_start(step);
        }
    }
    Ok(CoverMap {
        base: k,
        surface,
        face_map: (0..k.face_count()).collect(),
        edge_map,
        vertex_map,
    })
}

/// Checks every cover invariant and returns the first violation.
pub fn verify_cover(c: &CoverMap<'_>) -> Result<(), CoverViolation> {
    let k = c.base;
    let m = &c.surface;
    if c.face_map.len() != m.face_count() {
        return Err(CoverViolation::FaceMapLength {
            expected: m.face_count(),
            got: c.face_map.len(),
        });
    }
    if c.edge_map.len() != m.edge_count() {
        return Err(CoverViolation::EdgeMapLength {
            expected: m.edge_count(),
            got: c.edge_map.len(),
        });
    }
    if c.vertex_map.len() != m.vertex_count() {
        return Err(CoverViolation::VertexMapLength {
            expected: m.vertex_count(),
            got: c.vertex_map.len(),
        });
    }

    // every base face has exactly one preimage
    let mut hits = vec![0usize; k.face_count()];
    for &bf in &c.face_map {
        if bf >= hits.len() {
            return Err(CoverViolation::FaceMapLength {
                expected: k.face_count(),
                got: bf + 1,
            });
        }
        hits[bf] += 1;
        if hits[bf] > 1 {
            return Err(CoverViolation::FaceCoveredTwice(k.faces()[bf].id.clone()));
        }
    }
    if let Some(bf) = hits.iter().position(|&h| h == 0) {
        return Err(CoverViolation::FaceUncovered(k.faces()[bf].id.clone()));
    }

    // surface labels name base edges; walks agree step by step
    let label_edge: Vec<Option<usize>> = m.labels().iter().map(|l| k.edge_idx(l)).collect();
    for (sf, face) in m.faces().iter().enumerate() {
        let base = &k.faces()[c.face_map[sf]];
        let agrees = face.walk.len() == base.walk.len()
            && face
                .walk
                .iter()
                .zip(&base.walk)
                .all(|(s, b)| label_edge[s.edge] == Some(b.edge) && s.forward == b.forward);
        if !agrees {
            return Err(CoverViolation::WalkMismatch(face.id.clone()));
        }
    }

    for (i, &(a, b)) in m.pairings().iter().enumerate() {
        let carried = |s: Side| label_edge[m.faces()[s.face].walk[s.pos].edge];
        let be = c.edge_map[i];
        if carried(a) != Some(be) || carried(b) != Some(be) {
            return Err(CoverViolation::EdgeIncidence(i));
        }
    }

    for (sf, face) in m.faces().iter().enumerate() {
        let base = &k.faces()[c.face_map[sf]];
        for pos in 0..face.walk.len() {
            if c.vertex_map[m.vertex_of(sf, pos)] != k.step_start(base.walk[pos]) {
                return Err(CoverViolation::VertexIncidence {
                    face: face.id.clone(),
                    pos,
                });
            }
        }
    }

    // a degree-2k edge is the image of exactly k surface edges
    let mut preimages = vec![0usize; k.edge_count()];
    for &be in &c.edge_map {
        preimages[be] += 1;
    }
    for ((e, &found), degree) in k.edges().iter().zip(&preimages).zip(k.edge_degrees()) {
        if 2 * found != degree {
            return Err(CoverViolation::EdgePreimages {
                edge: e.id.clone(),
                degree,
                found,
                expected: degree / 2,
            });
        }
    }

    let links = m.link_degrees();
    for (sf, face) in m.faces().iter().enumerate() {
        for pos in 0..face.walk.len() {
            let d = links[m.corner_index(sf, pos)];
            if d != 2 {
                return Err(CoverViolation::LinkDegree {
                    face: face.id.clone(),
                    pos,
                    links: d,
                });
            }
        }
    }
    Ok(())
}
