//! Merging the components of a disconnected cover into one surface.
//!
//! If two components both cover some edge `e`, swapping partners between a
//! pair from each component at `e` slits both surfaces along their copy of
//! `e` and cross-glues them: a connected sum. Components drop by one and,
//! since the corner cycles at both endpoints of `e` merge, the vertex count
//! drops by two while edges and faces stay fixed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{FaceSubset, TwoComplex};
use crate::cover::{
    build_cover, canonical_assignment, CoverError, CoverMap, GluingAssignment, Pair,
};
use crate::gf2::{circlet_decomposition, Gf2Error};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SpliceError {
    #[error("cover is connected; nothing to splice")]
    SingleComponent,
    #[error("pair {pair:?} is not matched at edge `{edge}`")]
    PairNotPresent { edge: String, pair: Pair },
    #[error("splice needs two distinct pairs")]
    SamePair,
    #[error("complex is not strongly connected")]
    NotStronglyConnected,
    #[error(transparent)]
    Cover(#[from] CoverError),
}

impl From<Gf2Error> for SpliceError {
    fn from(e: Gf2Error) -> Self {
        match e {
            Gf2Error::NotEven(edges) => SpliceError::Cover(CoverError::NotEven(edges)),
        }
    }
}

/// An edge and two of its matched pairs lying in different components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpliceSite {
    pub edge: usize,
    pub first: Pair,
    pub second: Pair,
}

/// Finds the first edge (in id order) whose matching has pairs in two
/// different components, and the first such two pairs.
///
/// `components` labels each face with its component. When the complex is
/// strongly connected and there are at least two components, such an edge
/// always exists.
pub fn find_splice_edge(
    k: &TwoComplex,
    assignment: &GluingAssignment,
    components: &[usize],
) -> Result<SpliceSite, SpliceError> {
    let distinct = {
        let mut c = components.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    if distinct < 2 {
        return Err(SpliceError::SingleComponent);
    }
    for e in 0..k.edge_count() {
        let m = assignment.matching(e);
        for (i, &p) in m.iter().enumerate() {
            if let Some(&q) = m[i + 1..]
                .iter()
                .find(|q| components[q.0] != components[p.0])
            {
                return Ok(SpliceSite {
                    edge: e,
                    first: p,
                    second: q,
                });
            }
        }
    }
    Err(SpliceError::NotStronglyConnected)
}

/// Rewrites pairs `{f1, g1}`, `{f2, g2}` at `edge` into `{f1, f2}`, `{g1, g2}`.
pub fn splice(
    k: &TwoComplex,
    assignment: &GluingAssignment,
    edge: usize,
    first: Pair,
    second: Pair,
) -> Result<GluingAssignment, SpliceError> {
    let norm = |p: Pair| if p.0 <= p.1 { p } else { (p.1, p.0) };
    let present = |p: Pair| assignment.matching(edge).contains(&norm(p));
    for p in [first, second] {
        if !present(p) {
            return Err(SpliceError::PairNotPresent {
                edge: k.edges()[edge].id.clone(),
                pair: p,
            });
        }
    }
    if norm(first) == norm(second) {
        return Err(SpliceError::SamePair);
    }
    let mut matching: Vec<Pair> = assignment
        .matching(edge)
        .iter()
        .copied()
        .filter(|&p| p != norm(first) && p != norm(second))
        .collect();
    matching.push((first.0, second.0));
    matching.push((first.1, second.1));
    let mut out = assignment.clone();
    out.set_matching(edge, matching);
    Ok(out)
}

/// One merge performed by [`euler_cover`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceStep {
    pub step: usize,
    pub edge: String,
    pub pairs: [[String; 2]; 2],
    /// Components after the splice.
    pub components: usize,
    /// Euler characteristic after the splice.
    pub euler_characteristic: i64,
}

/// A connected cover together with how it was obtained.
#[derive(Clone, Debug)]
pub struct EulerCover<'a> {
    pub cover: CoverMap<'a>,
    pub assignment: GluingAssignment,
    pub decomposition: Vec<FaceSubset>,
    pub trace: Vec<SpliceStep>,
}

/// Builds a connected Euler cover of an even, strongly connected complex:
/// cover each circlet of the canonical decomposition separately, then
/// splice components together until one remains.
pub fn euler_cover(k: &TwoComplex) -> Result<EulerCover<'_>, SpliceError> {
    let decomposition = circlet_decomposition(k)?;
    if !k
        .is_strongly_connected()
        .map_err(|_| SpliceError::NotStronglyConnected)?
    {
        return Err(SpliceError::NotStronglyConnected);
    }
    let mut assignment = canonical_assignment(k, Some(&decomposition))?;
    let mut cover = build_cover(k, &assignment)?;
    let mut trace = Vec::new();
    while cover.component_count() > 1 {
        let before = cover.component_count();
        let site = find_splice_edge(k, &assignment, cover.surface.face_components())?;
        assignment = splice(k, &assignment, site.edge, site.first, site.second)?;
        cover = build_cover(k, &assignment)?;
        assert_eq!(
            cover.component_count() + 1,
            before,
            "a cross-component splice merges exactly two components"
        );
        let face = |f: usize| k.faces()[f].id.clone();
        trace.push(SpliceStep {
            step: trace.len() + 1,
            edge: k.edges()[site.edge].id.clone(),
            pairs: [
                [face(site.first.0), face(site.first.1)],
                [face(site.second.0), face(site.second.1)],
            ],
            components: cover.component_count(),
            euler_characteristic: cover.surface.euler_characteristic(),
        });
    }
    Ok(EulerCover {
        cover,
        assignment,
        decomposition,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{classify, verify_cover};
    use crate::generators;

    fn per_part(k: &TwoComplex) -> GluingAssignment {
        let parts = circlet_decomposition(k).unwrap();
        canonical_assignment(k, Some(&parts)).unwrap()
    }

    #[test]
    fn two_tetra_splice_at_shared_edge() {
        let k = generators::two_tetra_shared_edge();
        let a = per_part(&k);
        let before = build_cover(&k, &a).unwrap();
        assert_eq!(before.component_count(), 2);
        let site = find_splice_edge(&k, &a, before.surface.face_components()).unwrap();
        assert_eq!(k.edge_degrees()[site.edge], 4);

        let b = splice(&k, &a, site.edge, site.first, site.second).unwrap();
        let after = build_cover(&k, &b).unwrap();
        verify_cover(&after).unwrap();
        assert_eq!(after.component_count(), 1);
        assert_eq!(
            before.surface.vertex_count() - after.surface.vertex_count(),
            2
        );
        assert_eq!(after.surface.euler_characteristic(), 2);

        let back = splice(
            &k,
            &b,
            site.edge,
            (site.first.0, site.second.0),
            (site.first.1, site.second.1),
        )
        .unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn connected_cover_has_nothing_to_splice() {
        let k = generators::cross_polytope_skeleton(3).unwrap();
        let a = per_part(&k);
        let c = build_cover(&k, &a).unwrap();
        assert_eq!(
            find_splice_edge(&k, &a, c.surface.face_components()),
            Err(SpliceError::SingleComponent)
        );
    }

    #[test]
    fn splice_rejects_bad_pairs() {
        let k = generators::two_tetra_shared_edge();
        let a = per_part(&k);
        let e = k.edge_degrees().iter().position(|&d| d == 4).unwrap();
        let m = a.matching(e).to_vec();
        assert_eq!(splice(&k, &a, e, m[0], m[0]), Err(SpliceError::SamePair));
        assert!(matches!(
            splice(&k, &a, e, (m[0].0, m[1].0), m[1]),
            Err(SpliceError::PairNotPresent { .. })
        ));
    }

    #[test]
    fn simplex_five_pipeline() {
        let k = generators::simplex_skeleton(5).unwrap();
        let ec = euler_cover(&k).unwrap();
        verify_cover(&ec.cover).unwrap();
        assert_eq!(ec.cover.component_count(), 1);
        assert_eq!(ec.trace.len(), ec.decomposition.len() - 1);
        let types = classify(&ec.cover.surface);
        assert_eq!(types.len(), 1);
        assert_eq!(
            types[0].euler_characteristic,
            2 * ec.decomposition.len() as i64 - 2 * ec.trace.len() as i64
        );
    }

    #[test]
    fn pipeline_rejects_bad_inputs() {
        let d4 = generators::simplex_skeleton(4).unwrap();
        assert!(matches!(
            euler_cover(&d4),
            Err(SpliceError::Cover(CoverError::NotEven(_)))
        ));
        let shared_vertex = generators::two_tetra_shared_vertex();
        assert!(matches!(
            euler_cover(&shared_vertex),
            Err(SpliceError::NotStronglyConnected)
        ));
    }
}
