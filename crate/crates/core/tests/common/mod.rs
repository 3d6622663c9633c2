#![allow(dead_code)]

use circlet::complex::{FaceSubset, TwoComplex};
use circlet::cover::GluingAssignment;
use circlet::generators;
use circlet::gf2::{boundary_matrix, kernel_basis};
use rand::seq::SliceRandom;
use rand::Rng;

/// Named complexes shipped with the generators, even or not.
pub fn bundled() -> Vec<(String, TwoComplex)> {
    let mut out: Vec<(String, TwoComplex)> = vec![
        ("tetrahedron".into(), generators::tetrahedron()),
        ("cube".into(), generators::cube()),
        ("octahedron".into(), generators::octahedron()),
        ("pinched-sphere".into(), generators::pinched_sphere()),
        (
            "two-tetra-shared-edge".into(),
            generators::two_tetra_shared_edge(),
        ),
        (
            "two-tetra-shared-vertex".into(),
            generators::two_tetra_shared_vertex(),
        ),
        (
            "two-tetra-disjoint".into(),
            generators::two_tetra_disjoint(),
        ),
        ("figure2".into(), generators::figure2_complex()),
    ];
    for n in 2..=7 {
        out.push((
            format!("simplex-{n}"),
            generators::simplex_skeleton(n).unwrap(),
        ));
    }
    for n in 3..=5 {
        out.push((
            format!("hypercube-{n}"),
            generators::hypercube_skeleton(n).unwrap(),
        ));
        out.push((
            format!("crosspoly-{n}"),
            generators::cross_polytope_skeleton(n).unwrap(),
        ));
    }
    out
}

pub fn bundled_even() -> Vec<(String, TwoComplex)> {
    bundled().into_iter().filter(|(_, k)| k.is_even()).collect()
}

/// A uniformly random perfect matching of each edge's incident faces.
pub fn random_assignment(k: &TwoComplex, rng: &mut impl Rng) -> GluingAssignment {
    GluingAssignment::new(
        k.edge_faces()
            .iter()
            .map(|faces| {
                let mut f = faces.clone();
                f.shuffle(rng);
                f.chunks(2).map(|c| (c[0], c[1])).collect()
            })
            .collect(),
    )
}

/// A random nonzero sum of kernel basis vectors of `k`, as a subcomplex.
/// Every such subcomplex is even.
pub fn random_even_subcomplex(k: &TwoComplex, rng: &mut impl Rng) -> TwoComplex {
    let basis = kernel_basis(&boundary_matrix(k));
    loop {
        let mut acc = FaceSubset::from_indices(k.face_count(), []);
        for b in &basis {
            if rng.gen_bool(0.5) {
                acc = acc.symmetric_difference(b);
            }
        }
        if !acc.is_empty() {
            return k.subcomplex(&acc).unwrap();
        }
    }
}

/// Number of face subsets (the empty one included) in which every edge has
/// even degree, by trying all of them.
pub fn count_even_subsets(k: &TwoComplex) -> u64 {
    let n = k.face_count();
    assert!(n <= 24, "exhaustive search over {n} faces");
    let masks: Vec<u32> = k
        .edge_faces()
        .iter()
        .map(|fs| fs.iter().fold(0u32, |m, &f| m ^ (1 << f)))
        .collect();
    (0u32..1 << n)
        .filter(|s| masks.iter().all(|m| (s & m).count_ones() % 2 == 0))
        .count() as u64
}

/// Circlet test by exhaustion: the whole face set is even and is the only
/// nonempty even subset.
pub fn brute_force_is_circlet(k: &TwoComplex) -> bool {
    k.face_count() > 0 && k.is_even() && count_even_subsets(k) == 2
}
