use std::collections::{BTreeMap, BTreeSet};

use circlet::complex::TwoComplex;
use circlet::cover::{
    build_cover, census, classify, verify_cover, AssignmentSpace, GluingAssignment,
};
use circlet::generators::{figure2_complex, figure2_variant, RimGluing};

const CYCLE: [&str; 4] = ["a", "b", "c", "d"];

/// Which of the four boundary sheets a face belongs to: left rim, right
/// rim, the squares around the hole, or the detached square.
fn sheet(id: &str) -> char {
    match id {
        "s4_1" => 'Q',
        _ if id.starts_with("s0_") => 'L',
        _ if id.starts_with("s9_") => 'R',
        _ => 'H',
    }
}

/// The matching at a cycle edge, as a pairing of sheets: the sheet paired
/// with `L`.
fn partner_of_left(k: &TwoComplex, a: &GluingAssignment, edge: &str) -> char {
    let e = k.edge_idx(edge).unwrap();
    let &(f, g) = a
        .matching(e)
        .iter()
        .find(|&&(f, g)| sheet(&k.faces()[f].id) == 'L' || sheet(&k.faces()[g].id) == 'L')
        .unwrap();
    let (sf, sg) = (sheet(&k.faces()[f].id), sheet(&k.faces()[g].id));
    if sf == 'L' {
        sg
    } else {
        sf
    }
}

#[test]
fn vertex_count_follows_adjacent_matchings() {
    // Each cycle vertex sits between two cycle edges; it has two preimages
    // when both edges pair the sheets the same way and one otherwise.
    let k = figure2_complex();
    let space = AssignmentSpace::new(&k).unwrap();
    for i in 0..81 {
        let a = space.assignment(i);
        let m: Vec<char> = CYCLE.iter().map(|e| partner_of_left(&k, &a, e)).collect();
        let equal = (0..4).filter(|&j| m[j] == m[(j + 1) % 4]).count();
        let c = build_cover(&k, &a).unwrap();
        assert_eq!(c.surface.vertex_count(), 36 + equal, "assignment {i}");
    }
}

#[test]
fn equal_neighbour_counts_by_enumeration() {
    // all 3^4 cyclic words: no word has exactly three equal neighbours
    let mut hist = BTreeMap::new();
    for w in 0..81u32 {
        let d: Vec<u32> = (0..4).map(|j| w / 3u32.pow(j) % 3).collect();
        let equal = (0..4).filter(|&j| d[j] == d[(j + 1) % 4]).count();
        *hist.entry(equal).or_insert(0) += 1;
    }
    assert_eq!(hist, BTreeMap::from([(0, 18), (1, 24), (2, 36), (4, 3)]));

    let k = figure2_complex();
    let c = census(&k, 81).unwrap();
    let mut p_hist = BTreeMap::new();
    for r in &c.records {
        *p_hist.entry(r.p - 36).or_insert(0) += 1;
    }
    assert_eq!(p_hist, hist);
}

#[test]
fn census_types() {
    let k = figure2_complex();
    let c = census(&k, 81).unwrap();
    assert_eq!(c.total, 81);
    assert!(c
        .records
        .iter()
        .all(|r| r.components == 1 && r.q == 80 && r.r == 40));
    let symbols: BTreeSet<String> = c
        .records
        .iter()
        .map(|r| r.surfaces[0].symbol.clone())
        .collect();
    let expected: BTreeSet<String> = ["S1", "N2", "S2", "N4", "N5", "S3", "N6"]
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(symbols, expected);
}

#[test]
fn no_placement_reaches_euler_characteristic_minus_one() {
    for rr in RimGluing::all() {
        for h in RimGluing::all() {
            let k = figure2_variant(rr, h);
            let c = census(&k, 81).unwrap();
            assert!(
                c.records.iter().all(|r| r.euler_characteristic != -1),
                "{rr:?} {h:?}"
            );
        }
    }
}

#[test]
fn uniform_sheet_pairings() {
    // rims to each other and hole to square gives a Klein bottle; each rim
    // to one of the others gives a torus
    let k = figure2_complex();
    let space = AssignmentSpace::new(&k).unwrap();
    let uniform = |pairs: [&str; 2]| {
        let digits: Vec<usize> = (0..k.edge_count())
            .map(|e| {
                space
                    .options(e)
                    .iter()
                    .position(|m| {
                        m.len() == 1
                            || m.iter().all(|&(f, g)| {
                                let mut s = [sheet(&k.faces()[f].id), sheet(&k.faces()[g].id)];
                                s.sort();
                                pairs.contains(&s.iter().collect::<String>().as_str())
                            })
                    })
                    .unwrap()
            })
            .collect();
        let c = build_cover(&k, &space.from_digits(&digits)).unwrap();
        verify_cover(&c).unwrap();
        classify(&c.surface)[0].name.clone()
    };
    assert_eq!(uniform(["LR", "HQ"]), "Klein bottle (N₂)");
    assert_eq!(uniform(["LQ", "HR"]), "torus (S₁)");
    assert_eq!(uniform(["HL", "QR"]), "torus (S₁)");
}
