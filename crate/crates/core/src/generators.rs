//! Constructors for standard and named 2-complexes.

use thiserror::Error;

use crate::complex::{ComplexBuilder, FaceSubset, TwoComplex};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{what} needs n >= {min}, got {n}")]
    TooSmall {
        what: &'static str,
        min: usize,
        n: usize,
    },
    #[error("sphere decomposition needs odd n, got {0}")]
    EvenDimension(usize),
}

fn at_least(what: &'static str, n: usize, min: usize) -> Result<(), GeneratorError> {
    if n < min {
        Err(GeneratorError::TooSmall { what, min, n })
    } else {
        Ok(())
    }
}

fn simplex_edge(a: usize, b: usize) -> String {
    format!("{a}-{b}")
}

fn simplex_face(a: usize, b: usize, c: usize) -> String {
    format!("{a}-{b}-{c}")
}

/// Vertices, edges and triangles of the `n`-simplex on vertices `1..=n+1`.
pub fn simplex_skeleton(n: usize) -> Result<TwoComplex, GeneratorError> {
    at_least("simplex skeleton", n, 2)?;
    let v = n + 1;
    let mut b = ComplexBuilder::default();
    for i in 1..=v {
        b.vertex(i.to_string());
    }
    for i in 1..=v {
        for j in i + 1..=v {
            b.edge(simplex_edge(i, j), i.to_string(), j.to_string());
        }
    }
    for i in 1..=v {
        for j in i + 1..=v {
            for k in j + 1..=v {
                b.face(
                    simplex_face(i, j, k),
                    [
                        (simplex_edge(i, j), true),
                        (simplex_edge(j, k), true),
                        (simplex_edge(i, k), false),
                    ],
                );
            }
        }
    }
    Ok(b.build().expect("simplex skeleton is valid"))
}

/// Partition of the triangles of the odd `n`-simplex into octahedral and
/// tetrahedral spheres.
///
/// Vertices pair up antipodally as `{2i-1, 2i}` for `i = 1..=m`, `m =
/// (n+1)/2`. Each triple of pairs contributes the octahedron of the eight
/// triangles taking one vertex from each pair; each two pairs contribute the
/// four triangles of the tetrahedron on their four vertices. Octahedra come
/// first, then tetrahedra, each in lexicographic order of pair indices.
pub fn simplex_sphere_decomposition(
    k: &TwoComplex,
    n: usize,
) -> Result<Vec<FaceSubset>, GeneratorError> {
    at_least("sphere decomposition", n, 3)?;
    if n.is_multiple_of(2) {
        return Err(GeneratorError::EvenDimension(n));
    }
    let m = n.div_ceil(2);
    let pair = |i: usize| [2 * i - 1, 2 * i];
    let face = |mut t: [usize; 3]| {
        t.sort_unstable();
        k.face_idx(&simplex_face(t[0], t[1], t[2]))
            .expect("complex is the matching simplex skeleton")
    };
    let width = k.face_count();
    let mut parts = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for l in j + 1..=m {
                let mut faces = Vec::with_capacity(8);
                for a in pair(i) {
                    for b in pair(j) {
                        for c in pair(l) {
                            faces.push(face([a, b, c]));
                        }
                    }
                }
                parts.push(FaceSubset::from_indices(width, faces));
            }
        }
    }
    for i in 1..=m {
        for j in i + 1..=m {
            let vs = [pair(i)[0], pair(i)[1], pair(j)[0], pair(j)[1]];
            let faces = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
                .iter()
                .map(|t| face([vs[t[0]], vs[t[1]], vs[t[2]]]));
            parts.push(FaceSubset::from_indices(width, faces));
        }
    }
    Ok(parts)
}

/// Vertices, edges and square 2-faces of the `n`-cube.
///
/// Vertices are bit strings; an edge replaces its free coordinate with `*`
/// and a square its two free coordinates. Edges run from the `0` end to the
/// `1` end.
pub fn hypercube_skeleton(n: usize) -> Result<TwoComplex, GeneratorError> {
    at_least("hypercube skeleton", n, 2)?;
    let word = |bits: u64, free: &[usize]| -> String {
        (0..n)
            .map(|i| {
                if free.contains(&i) {
                    '*'
                } else if bits >> (n - 1 - i) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    };
    let bit = |i: usize| 1u64 << (n - 1 - i);
    let mut b = ComplexBuilder::default();
    for v in 0..1u64 << n {
        b.vertex(word(v, &[]));
    }
    for v in 0..1u64 << n {
        for i in (0..n).filter(|&i| v & bit(i) == 0) {
            b.edge(word(v, &[i]), word(v, &[]), word(v | bit(i), &[]));
        }
    }
    for v in 0..1u64 << n {
        for i in (0..n).filter(|&i| v & bit(i) == 0) {
            for j in (i + 1..n).filter(|&j| v & bit(j) == 0) {
                b.face(
                    word(v, &[i, j]),
                    [
                        (word(v, &[i]), true),
                        (word(v | bit(i), &[j]), true),
                        (word(v | bit(j), &[i]), false),
                        (word(v, &[j]), false),
                    ],
                );
            }
        }
    }
    Ok(b.build().expect("hypercube skeleton is valid"))
}

/// Vertices, edges and triangles of the `n`-dimensional cross-polytope on
/// vertices `+1, -1, ..., +n, -n`.
pub fn cross_polytope_skeleton(n: usize) -> Result<TwoComplex, GeneratorError> {
    at_least("cross-polytope skeleton", n, 3)?;
    // signed vertices as (index, sign), ordered by index then + before -
    let name = |(i, pos): (usize, bool)| format!("{}{i}", if pos { '+' } else { '-' });
    let edge = |a: (usize, bool), b: (usize, bool)| format!("{}{}", name(a), name(b));
    let signs = [true, false];
    let mut b = ComplexBuilder::default();
    for i in 1..=n {
        for s in signs {
            b.vertex(name((i, s)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for si in signs {
                for sj in signs {
                    b.edge(edge((i, si), (j, sj)), name((i, si)), name((j, sj)));
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for l in j + 1..=n {
                for si in signs {
                    for sj in signs {
                        for sl in signs {
                            let (x, y, z) = ((i, si), (j, sj), (l, sl));
                            b.face(
                                format!("{}{}{}", name(x), name(y), name(z)),
                                [(edge(x, y), true), (edge(y, z), true), (edge(x, z), false)],
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(b.build().expect("cross-polytope skeleton is valid"))
}

/// An octahedron whose two poles are identified into the vertex `P`.
///
/// The equator is `1 2 3 4`; edges from the former north and south poles
/// are `n1..n4` and `s1..s4`, so each equator vertex meets `P` along two
/// parallel edges.
pub fn pinched_sphere() -> TwoComplex {
    let mut b = ComplexBuilder::default();
    b.vertex("P");
    for i in 1..=4 {
        b.vertex(i.to_string());
    }
    for i in 1..=4 {
        let next = i % 4 + 1;
        b.edge(format!("e{i}"), i.to_string(), next.to_string());
        b.edge(format!("n{i}"), "P", i.to_string());
        b.edge(format!("s{i}"), "P", i.to_string());
    }
    for i in 1..=4 {
        let next = i % 4 + 1;
        for pole in ['n', 's'] {
            b.face(
                format!("{pole}{i}"),
                [
                    (format!("{pole}{i}"), true),
                    (format!("e{i}"), true),
                    (format!("{pole}{next}"), false),
                ],
            );
        }
    }
    b.build().expect("pinched sphere is valid")
}

/// Builds tetrahedron boundaries on the given vertex quadruples; shared
/// vertex pairs share their edge. Faces of the `t`-th tetrahedron are
/// prefixed with `prefixes[t]`.
fn tetrahedra(quads: &[[&str; 4]], prefixes: &[&str]) -> TwoComplex {
    let mut b = ComplexBuilder::default();
    let mut vertices: Vec<&str> = quads.iter().flatten().copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    for v in vertices {
        b.vertex(v);
    }
    let edge = |x: &str, y: &str| format!("{x}{y}");
    let mut edges = Vec::new();
    for q in quads {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((edge(q[i], q[j]), q[i], q[j]));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    for (id, t, h) in edges {
        b.edge(id, t, h);
    }
    for (q, prefix) in quads.iter().zip(prefixes) {
        for t in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
            let [x, y, z] = t.map(|i| q[i]);
            b.face(
                format!("{prefix}{x}{y}{z}"),
                [(edge(x, y), true), (edge(y, z), true), (edge(x, z), false)],
            );
        }
    }
    b.build().expect("tetrahedra are valid")
}

/// Two tetrahedron boundaries sharing exactly the edge `12`.
pub fn two_tetra_shared_edge() -> TwoComplex {
    tetrahedra(&[["1", "2", "3", "4"], ["1", "2", "5", "6"]], &["a", "b"])
}

/// Two tetrahedron boundaries sharing exactly the vertex `1`.
pub fn two_tetra_shared_vertex() -> TwoComplex {
    tetrahedra(&[["1", "2", "3", "4"], ["1", "5", "6", "7"]], &["a", "b"])
}

/// Two disjoint tetrahedron boundaries.
pub fn two_tetra_disjoint() -> TwoComplex {
    tetrahedra(&[["1", "2", "3", "4"], ["5", "6", "7", "8"]], &["a", "b"])
}

pub fn tetrahedron() -> TwoComplex {
    simplex_skeleton(3).expect("n = 3 is valid")
}

pub fn cube() -> TwoComplex {
    hypercube_skeleton(3).expect("n = 3 is valid")
}

pub fn octahedron() -> TwoComplex {
    cross_polytope_skeleton(3).expect("n = 3 is valid")
}

/// The three platonic sphere boundaries by name.
pub fn platonic_circlets() -> Vec<(&'static str, TwoComplex)> {
    vec![
        ("tetrahedron", tetrahedron()),
        ("cube", cube()),
        ("octahedron", octahedron()),
    ]
}

/// How one boundary 4-cycle of the cut tube is laid onto the cycle
/// `1 2 3 4`: its `i`-th vertex goes to position `shift ± i` (mod 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RimGluing {
    pub shift: usize,
    pub reversed: bool,
}

impl RimGluing {
    pub const IDENTITY: RimGluing = RimGluing {
        shift: 0,
        reversed: false,
    };

    fn position(self, i: usize) -> usize {
        if self.reversed {
            (self.shift + 4 - i % 4) % 4
        } else {
            (self.shift + i) % 4
        }
    }

    /// All eight dihedral placements.
    pub fn all() -> impl Iterator<Item = RimGluing> {
        (0..4).flat_map(|shift| {
            [false, true]
                .into_iter()
                .map(move |reversed| RimGluing { shift, reversed })
        })
    }
}

/// Placement of the right rim and the hole boundary used by
/// [`figure2_complex`]; the left rim and the detached square use
/// [`RimGluing::IDENTITY`].
pub const FIGURE2_RIGHT_RIM: RimGluing = RimGluing {
    shift: 0,
    reversed: true,
};
pub const FIGURE2_HOLE: RimGluing = RimGluing {
    shift: 0,
    reversed: true,
};

/// A square-grid tube, 4 squares around and 10 long, with one shaft square
/// detached, and its four boundary 4-cycles (both rims, the hole and the
/// detached square) identified into the single cycle `a b c d` on vertices
/// `1 2 3 4`.
///
/// The result has 36 vertices, 76 edges and 40 square faces; `a`, `b`, `c`,
/// `d` are the only edges of degree 4.
pub fn figure2_complex() -> TwoComplex {
    figure2_variant(FIGURE2_RIGHT_RIM, FIGURE2_HOLE)
}

/// Column and row (0-based) of the detached shaft square.
const HOLE: (usize, usize) = (4, 1);
const LENGTH: usize = 10;
const AROUND: usize = 4;

/// [`figure2_complex`] with the right rim and hole placed by the given
/// gluings.
pub fn figure2_variant(right_rim: RimGluing, hole: RimGluing) -> TwoComplex {
    const CYCLE_EDGES: [&str; 4] = ["a", "b", "c", "d"];
    let (hc, hr) = HOLE;
    // grid vertex (column, row); column 0 and LENGTH are the rims
    let grid = |c: usize, r: usize| (c, r % AROUND);
    let hole_cycle = [
        grid(hc, hr),
        grid(hc + 1, hr),
        grid(hc + 1, hr + 1),
        grid(hc, hr + 1),
    ];
    let on_cycle = |v: (usize, usize)| -> Option<usize> {
        if v.0 == 0 {
            Some(RimGluing::IDENTITY.position(v.1))
        } else if v.0 == LENGTH {
            Some(right_rim.position(v.1))
        } else {
            hole_cycle
                .iter()
                .position(|&h| h == v)
                .map(|i| hole.position(i))
        }
    };
    let vertex_name = |v: (usize, usize)| match on_cycle(v) {
        Some(p) => (p + 1).to_string(),
        None => format!("v{}_{}", v.0, v.1),
    };
    // cycle edge x runs from position x to x+1
    let cycle_step = |p: usize, q: usize| -> (String, bool) {
        if (p + 1) % 4 == q {
            (CYCLE_EDGES[p].to_string(), true)
        } else {
            debug_assert_eq!((q + 1) % 4, p);
            (CYCLE_EDGES[q].to_string(), false)
        }
    };
    let is_hole_edge = |a: (usize, usize), b: (usize, usize)| {
        (0..4).any(|i| {
            let (x, y) = (hole_cycle[i], hole_cycle[(i + 1) % 4]);
            (x, y) == (a, b) || (x, y) == (b, a)
        })
    };
    // step from grid vertex a to grid vertex b along a grid edge
    let step = |a: (usize, usize), b: (usize, usize)| -> (String, bool) {
        let rim = |v: (usize, usize)| v.0 == 0 || v.0 == LENGTH;
        if (rim(a) && rim(b)) || is_hole_edge(a, b) {
            return cycle_step(on_cycle(a).unwrap(), on_cycle(b).unwrap());
        }
        if a.0 == b.0 {
            // around the tube: w<c>_<r> from row r to row r+1
            let forward = (a.1 + 1) % AROUND == b.1;
            let r = if forward { a.1 } else { b.1 };
            (format!("w{}_{}", a.0, r), forward)
        } else {
            // along the tube: h<c>_<r> from column c to c+1
            let forward = a.0 < b.0;
            let c = a.0.min(b.0);
            (format!("h{c}_{}", a.1), forward)
        }
    };

    let mut b = ComplexBuilder::default();
    for p in 1..=4 {
        b.vertex(p.to_string());
    }
    for (p, e) in CYCLE_EDGES.into_iter().enumerate() {
        b.edge(e, (p + 1).to_string(), ((p + 1) % 4 + 1).to_string());
    }
    for c in 1..LENGTH {
        for r in 0..AROUND {
            if on_cycle((c, r)).is_none() {
                b.vertex(vertex_name((c, r)));
            }
        }
    }
    for c in 0..=LENGTH {
        for r in 0..AROUND {
            let (x, y) = (grid(c, r), grid(c, r + 1));
            if c != 0 && c != LENGTH && !is_hole_edge(x, y) {
                b.edge(format!("w{c}_{r}"), vertex_name(x), vertex_name(y));
            }
            if c < LENGTH {
                let y = grid(c + 1, r);
                if !is_hole_edge(x, y) {
                    b.edge(format!("h{c}_{r}"), vertex_name(x), vertex_name(y));
                }
            }
        }
    }
    for c in 0..LENGTH {
        for r in 0..AROUND {
            let id = format!("s{c}_{r}");
            if (c, r) == HOLE {
                // the detached square closes up along a b c d
                b.face(id, CYCLE_EDGES.map(|e| (e, true)));
                continue;
            }
            let corners = [
                grid(c, r),
                grid(c + 1, r),
                grid(c + 1, r + 1),
                grid(c, r + 1),
            ];
            b.face(id, (0..4).map(|i| step(corners[i], corners[(i + 1) % 4])));
        }
    }
    b.build().expect("tube complex is valid")
}
