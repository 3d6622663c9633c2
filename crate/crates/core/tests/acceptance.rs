//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when
//! any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use circlet::complex::{FaceSubset, TwoComplex};
use circlet::cover::{
    assignment_count, build_cover, canonical_assignment, census, classify, matching_count,
    verify_cover,
};
use circlet::generators;
use circlet::gf2::{circlet_decomposition, is_circlet, kernel_dimension};
use circlet::splice::{euler_cover, find_splice_edge, splice};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    brute_force_is_circlet, bundled_even, count_even_subsets, random_assignment,
    random_even_subcomplex,
};

const CENSUS_TIME_LIMIT: Duration = Duration::from_secs(1);
const PROPERTY_CASES: usize = 1200;
const PROPERTY_SEED: u64 = 0x00c1_7c1e_7000_0001;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn profile(k: &TwoComplex) -> BTreeMap<usize, usize> {
    k.degrees().edge_profile()
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn simplex_counts() -> Outcome {
    let k = generators::simplex_skeleton(5).map_err(|e| e.to_string())?;
    ensure(k.counts() == (6, 15, 20), || {
        format!("counts {:?}", k.counts())
    })?;
    ensure(profile(&k) == BTreeMap::from([(4, 15)]), || {
        format!("profile {:?}", profile(&k))
    })?;
    Ok("(6, 15, 20), every edge in 4 faces".into())
}

fn sphere_decomposition() -> Outcome {
    let k = generators::simplex_skeleton(5).map_err(|e| e.to_string())?;
    let parts = generators::simplex_sphere_decomposition(&k, 5).map_err(|e| e.to_string())?;
    let sizes: Vec<usize> = parts.iter().map(FaceSubset::len).collect();
    ensure(sizes == [8, 4, 4, 4], || format!("part sizes {sizes:?}"))?;
    let mut seen = vec![0; k.face_count()];
    for p in &parts {
        for f in p.iter() {
            seen[f] += 1;
        }
    }
    ensure(seen.iter().all(|&c| c == 1), || {
        "parts do not partition the faces".into()
    })?;
    for p in &parts {
        let sub = k.subcomplex(p).map_err(|e| e.to_string())?;
        ensure(is_circlet(&sub), || {
            format!("part {:?} is not a circlet", p.ids(&k))
        })?;
        let a = canonical_assignment(&sub, None).map_err(|e| e.to_string())?;
        let c = build_cover(&sub, &a).map_err(|e| e.to_string())?;
        verify_cover(&c).map_err(|e| e.to_string())?;
        let types = classify(&c.surface);
        ensure(types.len() == 1 && types[0].name == "sphere", || {
            format!("part {:?} covers {types:?}", p.ids(&k))
        })?;
    }
    Ok("1 octahedron + 3 tetrahedra, all circlets covered by spheres".into())
}

fn figure2_numbers() -> Outcome {
    let k = generators::figure2_complex();
    ensure(k.counts() == (36, 76, 40), || {
        format!("counts {:?}", k.counts())
    })?;
    let want = BTreeMap::from([(2, 72), (4, 4)]);
    ensure(profile(&k) == want, || format!("profile {:?}", profile(&k)))?;
    ensure(is_circlet(&k), || "not a circlet".into())?;
    let n = assignment_count(&k).map_err(|e| e.to_string())?;
    ensure(n == BigUint::from(81u32), || format!("{n} assignments"))?;
    Ok("(36, 76, 40), {4:4, 2:72}, circlet, 81 assignments".into())
}

fn figure2_census() -> Outcome {
    let k = generators::figure2_complex();
    let start = Instant::now();
    let c = census(&k, 81).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(c.total == 81, || format!("{} records", c.total))?;
    for r in &c.records {
        ensure(r.components == 1, || {
            format!("assignment {} has {} components", r.index, r.components)
        })?;
        ensure(r.r == 40 && r.q == 80, || {
            format!("assignment {}: q={} r={}", r.index, r.q, r.r)
        })?;
        ensure((36..=40).contains(&r.p), || {
            format!("assignment {}: p={}", r.index, r.p)
        })?;
        ensure((-4..=0).contains(&r.euler_characteristic), || {
            format!("assignment {}: chi={}", r.index, r.euler_characteristic)
        })?;
    }
    ensure(elapsed < CENSUS_TIME_LIMIT, || {
        format!("census took {elapsed:?}")
    })?;
    let expected: BTreeSet<&str> = [
        "torus (S₁)",
        "Klein bottle (N₂)",
        "sphere with three cross-caps (N₃)",
        "double torus (S₂)",
        "sphere with four cross-caps (N₄)",
        "sphere with five cross-caps (N₅)",
        "triple torus (S₃)",
        "sphere with six cross-caps (N₆)",
    ]
    .into_iter()
    .collect();
    let names = c.surface_names();
    let realized: BTreeSet<&str> = names.iter().map(String::as_str).collect();
    let mut p_hist = BTreeMap::new();
    for r in &c.records {
        *p_hist.entry(r.p).or_insert(0) += 1;
    }
    let missing: Vec<&str> = expected.difference(&realized).copied().collect();
    let extra: Vec<&str> = realized.difference(&expected).copied().collect();
    ensure(missing.is_empty() && extra.is_empty(), || {
        format!(
            "{} of 8 types realized; missing {missing:?}, unexpected {extra:?}; p histogram {p_hist:?}",
            realized.len()
        )
    })?;
    Ok(format!("81 connected covers, 8 types, {elapsed:?}"))
}

fn simplex_euler_cover() -> Outcome {
    let k = generators::simplex_skeleton(5).map_err(|e| e.to_string())?;
    let ec = euler_cover(&k).map_err(|e| e.to_string())?;
    verify_cover(&ec.cover).map_err(|e| e.to_string())?;
    ensure(ec.cover.is_connected(), || "cover is disconnected".into())?;
    let chi = ec.cover.surface.euler_characteristic();
    ensure(chi == 2, || format!("chi = {chi}"))?;
    let types = classify(&ec.cover.surface);
    ensure(types[0].name == "sphere", || {
        format!("classified as {}", types[0].name)
    })?;
    ensure(ec.trace.len() == 3, || {
        format!("{} splices", ec.trace.len())
    })?;
    Ok("connected sphere, chi 2, 3 splices".into())
}

fn oracle_equivalence() -> Outcome {
    let instances: Vec<(&str, TwoComplex)> = vec![
        ("tetrahedron", generators::tetrahedron()),
        ("cube", generators::cube()),
        ("octahedron", generators::octahedron()),
        ("pinched sphere", generators::pinched_sphere()),
        (
            "two tetrahedra sharing an edge",
            generators::two_tetra_shared_edge(),
        ),
        (
            "simplex 3",
            generators::simplex_skeleton(3).map_err(|e| e.to_string())?,
        ),
        (
            "cross-polytope 3",
            generators::cross_polytope_skeleton(3).map_err(|e| e.to_string())?,
        ),
    ];
    for (name, k) in &instances {
        ensure(k.face_count() <= 12, || {
            format!("{name} has {} faces", k.face_count())
        })?;
        let dim = kernel_dimension(k);
        let even_subsets = count_even_subsets(k);
        ensure(even_subsets == 1 << dim, || {
            format!("{name}: {even_subsets} even subsets, kernel dimension {dim}")
        })?;
        ensure(is_circlet(k) == brute_force_is_circlet(k), || {
            format!("{name}: circlet test disagrees with exhaustion")
        })?;
    }
    Ok(format!("{} instances agree", instances.len()))
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let corpus = bundled_even();
    let d7 = generators::simplex_skeleton(7).map_err(|e| e.to_string())?;
    let mut violations = Vec::new();
    let (mut circlet_checks, mut splice_checks) = (0, 0);
    for case in 0..PROPERTY_CASES {
        let k = if rng.gen_bool(0.5) {
            corpus[rng.gen_range(0..corpus.len())].1.clone()
        } else {
            random_even_subcomplex(&d7, &mut rng)
        };
        let a = random_assignment(&k, &mut rng);
        let c = build_cover(&k, &a).map_err(|e| format!("case {case}: {e}"))?;
        let m = &c.surface;
        if m.face_count() != k.face_count() {
            violations.push(format!("case {case}: r != |F|"));
        }
        if 2 * m.edge_count() != k.edge_degrees().iter().sum::<usize>() {
            violations.push(format!("case {case}: q != sum(deg)/2"));
        }
        if m.link_degrees().iter().any(|&d| d != 2) {
            violations.push(format!("case {case}: corner link not 2-regular"));
        }
        if let Err(e) = verify_cover(&c) {
            violations.push(format!("case {case}: {e}"));
        }

        // a random circlet of the decomposition covers connectedly
        let parts = circlet_decomposition(&k).map_err(|e| e.to_string())?;
        let part = &parts[rng.gen_range(0..parts.len())];
        let sub = k.subcomplex(part).map_err(|e| e.to_string())?;
        let sc =
            build_cover(&sub, &random_assignment(&sub, &mut rng)).map_err(|e| e.to_string())?;
        circlet_checks += 1;
        if !sc.is_connected() {
            violations.push(format!(
                "case {case}: circlet cover has {} components",
                sc.component_count()
            ));
        }

        // splice the random cover and the per-circlet cover wherever an edge
        // carries two components
        let per_part = canonical_assignment(&k, Some(&parts)).map_err(|e| e.to_string())?;
        for a in [a, per_part] {
            let before = build_cover(&k, &a).map_err(|e| e.to_string())?;
            let Ok(site) = find_splice_edge(&k, &a, before.surface.face_components()) else {
                continue;
            };
            let b =
                splice(&k, &a, site.edge, site.first, site.second).map_err(|e| e.to_string())?;
            let after = build_cover(&k, &b).map_err(|e| e.to_string())?;
            splice_checks += 1;
            if after.component_count() + 1 != before.component_count() {
                violations.push(format!(
                    "case {case}: splice changed components by other than 1"
                ));
            }
            if after.surface.vertex_count() + 2 != before.surface.vertex_count() {
                violations.push(format!("case {case}: splice changed p by other than 2"));
            }
        }
    }
    ensure(violations.is_empty(), || {
        format!("{} violations, first: {}", violations.len(), violations[0])
    })?;
    ensure(splice_checks > 0, || "no splice was exercised".into())?;
    Ok(format!(
        "{PROPERTY_CASES} cases, {circlet_checks} circlet covers, {splice_checks} splices, 0 violations"
    ))
}

fn counting_identities() -> Outcome {
    let counts: Vec<BigUint> = [2, 4, 6].iter().map(|&d| matching_count(d)).collect();
    let want: Vec<BigUint> = [1u32, 3, 15].iter().map(|&x| BigUint::from(x)).collect();
    ensure(counts == want, || format!("matching counts {counts:?}"))?;
    let d5 = generators::simplex_skeleton(5).map_err(|e| e.to_string())?;
    let n = assignment_count(&d5).map_err(|e| e.to_string())?;
    ensure(n == BigUint::from(3u32).pow(15), || {
        format!("assignment_count = {n}")
    })?;
    for n in [3usize, 5, 7, 9] {
        let m = (n as u64).div_ceil(2);
        let k = generators::simplex_skeleton(n).map_err(|e| e.to_string())?;
        let parts = generators::simplex_sphere_decomposition(&k, n).map_err(|e| e.to_string())?;
        let oct = parts.iter().filter(|p| p.len() == 8).count() as u64;
        let tet = parts.iter().filter(|p| p.len() == 4).count() as u64;
        ensure(oct + tet == parts.len() as u64, || {
            format!("n={n}: odd part sizes")
        })?;
        ensure(oct == binom(m, 3) && tet == binom(m, 2), || {
            format!("n={n}: {oct} octahedra, {tet} tetrahedra")
        })?;
        let lhs = 8 * binom(m, 3) + 4 * binom(m, 2);
        ensure(
            lhs == binom(2 * m, 3) && lhs == k.face_count() as u64,
            || {
                format!(
                    "n={n}: 8C(m,3)+4C(m,2) = {lhs}, C(2m,3) = {}",
                    binom(2 * m, 3)
                )
            },
        )?;
    }
    Ok("(1, 3, 15), 3^15, sizes for n = 3, 5, 7, 9".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("simplex 5 skeleton counts", simplex_counts),
        ("simplex 5 sphere decomposition", sphere_decomposition),
        ("figure2 complex numbers", figure2_numbers),
        ("figure2 census", figure2_census),
        ("simplex 5 Euler cover", simplex_euler_cover),
        ("kernel oracle equivalence", oracle_equivalence),
        ("randomized property suite", property_suite),
        ("counting identities", counting_identities),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
