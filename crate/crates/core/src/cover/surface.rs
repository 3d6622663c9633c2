use std::collections::VecDeque;

use thiserror::Error;

use crate::complex::Step;
use crate::union_find::DisjointSet;

/// A face walk position: the `pos`-th step of face `face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Side {
    pub face: usize,
    pub pos: usize,
}

/// A polygon of the surface. Steps refer to edge labels of the surface
/// (for a cover, the base complex's edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceFace {
    pub id: String,
    pub walk: Vec<Step>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("face `{0}` has an empty walk")]
    EmptyFace(String),
    #[error("face `{face}` step {pos} uses unknown label {label}")]
    UnknownLabel {
        face: String,
        pos: usize,
        label: usize,
    },
    #[error("pairing {pairing} refers to a missing side {face}:{pos}")]
    MissingSide {
        pairing: usize,
        face: usize,
        pos: usize,
    },
    #[error("side {face}:{pos} is paired {count} times")]
    SideMultiplicity {
        face: String,
        pos: usize,
        count: usize,
    },
    #[error("pairing {0} joins a side to itself")]
    SelfPaired(usize),
    #[error("pairing {pairing} joins sides with different labels `{left}` and `{right}`")]
    LabelMismatch {
        pairing: usize,
        left: String,
        right: String,
    },
    #[error("corner {pos} of face `{face}` has {links} links (expected 2)")]
    LinkDegree {
        face: String,
        pos: usize,
        links: usize,
    },
}

/// Per-component cell counts and invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub orientable: bool,
}

impl ComponentStats {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// A closed surface given by polygons and a pairing of their sides.
///
/// Every side is paired with exactly one other side carrying the same
/// label. Gluing two sides identifies the corners at their matching ends:
/// the corner where each walk meets the label's tail is joined, and
/// likewise for the head. Surface vertices are the resulting corner
/// orbits. Faces need not stay embedded after the quotient.
#[derive(Clone, Debug)]
pub struct CombinatorialSurface {
    labels: Vec<String>,
    faces: Vec<SurfaceFace>,
    pairings: Vec<(Side, Side)>,
    offsets: Vec<usize>,
    partner: Vec<usize>,
    corner_orbit: Vec<usize>,
    orbit_count: usize,
    face_component: Vec<usize>,
    component_count: usize,
    flips: Vec<bool>,
    orientable: Vec<bool>,
}

impl PartialEq for CombinatorialSurface {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.faces == other.faces && self.pairings == other.pairings
    }
}

impl Eq for CombinatorialSurface {}

impl CombinatorialSurface {
    pub fn new(
        labels: Vec<String>,
        faces: Vec<SurfaceFace>,
        pairings: Vec<(Side, Side)>,
    ) -> Result<Self, SurfaceError> {
        let mut offsets = Vec::with_capacity(faces.len() + 1);
        let mut total = 0;
        for f in &faces {
            if f.walk.is_empty() {
                return Err(SurfaceError::EmptyFace(f.id.clone()));
            }
            if let Some((pos, s)) = f
                .walk
                .iter()
                .enumerate()
                .find(|(_, s)| s.edge >= labels.len())
            {
                return Err(SurfaceError::UnknownLabel {
                    face: f.id.clone(),
                    pos,
                    label: s.edge,
                });
            }
            offsets.push(total);
            total += f.walk.len();
        }
        offsets.push(total);

        let mut partner = vec![usize::MAX; total];
        let mut multiplicity = vec![0usize; total];
        for (i, &(a, b)) in pairings.iter().enumerate() {
            for s in [a, b] {
                if s.face >= faces.len() || s.pos >= faces[s.face].walk.len() {
                    return Err(SurfaceError::MissingSide {
                        pairing: i,
                        face: s.face,
                        pos: s.pos,
                    });
                }
            }
            if a == b {
                return Err(SurfaceError::SelfPaired(i));
            }
            let (la, lb) = (
                faces[a.face].walk[a.pos].edge,
                faces[b.face].walk[b.pos].edge,
            );
            if la != lb {
                return Err(SurfaceError::LabelMismatch {
                    pairing: i,
                    left: labels[la].clone(),
                    right: labels[lb].clone(),
                });
            }
            for s in [a, b] {
                let idx = offsets[s.face] + s.pos;
                multiplicity[idx] += 1;
                partner[idx] = i;
            }
        }
        for (fi, f) in faces.iter().enumerate() {
            for pos in 0..f.walk.len() {
                let count = multiplicity[offsets[fi] + pos];
                if count != 1 {
                    return Err(SurfaceError::SideMultiplicity {
                        face: f.id.clone(),
                        pos,
                        count,
                    });
                }
            }
        }

        let mut surface = Self {
            labels,
            faces,
            pairings,
            offsets,
            partner,
            corner_orbit: Vec::new(),
            orbit_count: 0,
            face_component: Vec::new(),
            component_count: 0,
            flips: Vec::new(),
            orientable: Vec::new(),
        };
        if let Some((face, pos, links)) = surface.first_bad_link() {
            return Err(SurfaceError::LinkDegree {
                face: surface.faces[face].id.clone(),
                pos,
                links,
            });
        }
        surface.compute_orbits();
        surface.compute_components();
        surface.compute_orientation();
        Ok(surface)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn faces(&self) -> &[SurfaceFace] {
        &self.faces
    }

    pub fn pairings(&self) -> &[(Side, Side)] {
        &self.pairings
    }

    /// Pairing that glues `side`.
    pub fn pairing_of(&self, side: Side) -> usize {
        self.partner[self.offsets[side.face] + side.pos]
    }

    /// Global index of the corner at which step `pos` of `face` starts.
    pub fn corner_index(&self, face: usize, pos: usize) -> usize {
        self.offsets[face] + pos
    }

    pub fn corner_count(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    /// Surface vertex (corner orbit) of the corner at the start of step
    /// `pos` of `face`.
    pub fn vertex_of(&self, face: usize, pos: usize) -> usize {
        self.corner_orbit[self.corner_index(face, pos)]
    }

    /// Number of surface vertices `p`.
    pub fn vertex_count(&self) -> usize {
        self.orbit_count
    }

    /// Number of surface edges `q`.
    pub fn edge_count(&self) -> usize {
        self.pairings.len()
    }

    /// Number of faces `r`.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `p - q + r`, additive over components.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Component label of each face, numbered by first face.
    pub fn face_components(&self) -> &[usize] {
        &self.face_component
    }

    /// Faces of each component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comps = vec![Vec::new(); self.component_count];
        for (f, &c) in self.face_component.iter().enumerate() {
            comps[c].push(f);
        }
        comps
    }

    /// Orientability of each component.
    pub fn orientable(&self) -> &[bool] {
        &self.orientable
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable.iter().all(|&o| o)
    }

    /// Whether each face is reversed in the consistent orientation found
    /// for its component (meaningful only for orientable components).
    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn component_stats(&self) -> Vec<ComponentStats> {
        let mut stats = vec![
            ComponentStats {
                vertices: 0,
                edges: 0,
                faces: 0,
                orientable: true,
            };
            self.component_count
        ];
        for (c, &o) in stats.iter_mut().zip(&self.orientable) {
            c.orientable = o;
        }
        for &c in &self.face_component {
            stats[c].faces += 1;
        }
        for (a, _) in &self.pairings {
            stats[self.face_component[a.face]].edges += 1;
        }
        let mut orbit_seen = vec![false; self.orbit_count];
        for (f, &c) in self.face_component.iter().enumerate() {
            for pos in 0..self.faces[f].walk.len() {
                let o = self.vertex_of(f, pos);
                if !orbit_seen[o] {
                    orbit_seen[o] = true;
                    stats[c].vertices += 1;
                }
            }
        }
        stats
    }

    /// The two corners a side touches, as (at label tail, at label head).
    fn side_corners(&self, side: Side) -> (usize, usize) {
        let face = &self.faces[side.face];
        let start = self.corner_index(side.face, side.pos);
        let end = self.corner_index(side.face, (side.pos + 1) % face.walk.len());
        if face.walk[side.pos].forward {
            (start, end)
        } else {
            (end, start)
        }
    }

    /// Number of link-graph edges at each corner: each gluing links the two
    /// tail corners and the two head corners of its sides.
    pub fn link_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.corner_count()];
        for &(a, b) in &self.pairings {
            let (at, ah) = self.side_corners(a);
            let (bt, bh) = self.side_corners(b);
            for c in [at, ah, bt, bh] {
                deg[c] += 1;
            }
        }
        deg
    }

    fn first_bad_link(&self) -> Option<(usize, usize, usize)> {
        let deg = self.link_degrees();
        self.faces.iter().enumerate().find_map(|(f, face)| {
            (0..face.walk.len()).find_map(|pos| {
                let d = deg[self.corner_index(f, pos)];
                (d != 2).then_some((f, pos, d))
            })
        })
    }

    fn compute_orbits(&mut self) {
        let mut ds = DisjointSet::new(self.corner_count());
        for &(a, b) in &self.pairings {
            let (at, ah) = self.side_corners(a);
            let (bt, bh) = self.side_corners(b);
            ds.union(at, bt);
            ds.union(ah, bh);
        }
        let (labels, count) = ds.labels();
        self.corner_orbit = labels;
        self.orbit_count = count;
    }

    fn compute_components(&mut self) {
        let mut ds = DisjointSet::new(self.faces.len());
        for &(a, b) in &self.pairings {
            ds.union(a.face, b.face);
        }
        let (labels, count) = ds.labels();
        self.face_component = labels;
        self.component_count = count;
    }

    /// Two-colours faces so that every gluing joins oppositely directed
    /// traversals; a conflict inside a component makes it non-orientable.
    fn compute_orientation(&mut self) {
        let n = self.faces.len();
        let mut flip: Vec<Option<bool>> = vec![None; n];
        let mut orientable = vec![true; self.component_count];
        for root in 0..n {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(f) = queue.pop_front() {
                let ff = flip[f].unwrap();
                for pos in 0..self.faces[f].walk.len() {
                    let (a, b) = self.pairings[self.pairing_of(Side { face: f, pos })];
                    let other = if a == (Side { face: f, pos }) { b } else { a };
                    let same_direction = self.faces[f].walk[pos].forward
                        == self.faces[other.face].walk[other.pos].forward;
                    let want = ff ^ same_direction;
                    match flip[other.face] {
                        None => {
                            flip[other.face] = Some(want);
                            queue.push_back(other.face);
                        }
                        Some(got) if got != want => {
                            orientable[self.face_component[f]] = false;
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        self.flips = flip.into_iter().map(|f| f.unwrap_or(false)).collect();
        self.orientable = orientable;
    }
}
