use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use circlet::complex::TwoComplex;
use circlet::cover::{
    build_cover, canonical_assignment, census_with_jobs, CoverError, GluingAssignment,
};
use circlet::generators;
use circlet::gf2::{circlet_decomposition, kernel_dimension, Gf2Error};
use circlet::report::{
    parse_surface, report_classification, serialize_surface, ClassificationReport, SCHEMA_VERSION,
};
use circlet::splice::{euler_cover as build_euler_cover, SpliceError, SpliceStep};
use circlet::{parse_complex, serialize_complex, CombinatorialSurface};
use clap::ValueEnum as _;
use serde::Serialize;

use crate::{read_input, source_name, Failure, GenKind, Outcome};

fn load(file: Option<&Path>) -> Result<TwoComplex, Failure> {
    let text = read_input(file)?;
    parse_complex(&text).map_err(|e| Failure::Input(format!("{}: {e}", source_name(file))))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn cover_failure(e: CoverError) -> Failure {
    match e {
        CoverError::NotEven(_) => Failure::Domain(e.to_string()),
        other => Failure::Input(other.to_string()),
    }
}

fn splice_failure(e: SpliceError) -> Failure {
    match e {
        SpliceError::Cover(c) => cover_failure(c),
        SpliceError::NotStronglyConnected => Failure::Domain(e.to_string()),
        other => Failure::Input(other.to_string()),
    }
}

fn write_surface(path: Option<&Path>, m: &CombinatorialSurface) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, serialize_surface(m))
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckReport {
    schema_version: u32,
    vertices: usize,
    edges: usize,
    faces: usize,
    degree_profile: BTreeMap<usize, usize>,
    even: bool,
    odd_edges: Vec<String>,
    connected: bool,
    strongly_connected: bool,
    kernel_dimension: usize,
    circlet: bool,
}

pub fn check(file: Option<&Path>, json: bool) -> Result<Outcome, Failure> {
    let k = load(file)?;
    let odd_edges: Vec<String> = k.odd_edges().iter().map(|e| e.to_string()).collect();
    let even = odd_edges.is_empty();
    let dim = kernel_dimension(&k);
    let r = CheckReport {
        schema_version: SCHEMA_VERSION,
        vertices: k.vertex_count(),
        edges: k.edge_count(),
        faces: k.face_count(),
        degree_profile: k.degrees().edge_profile(),
        even,
        odd_edges,
        connected: k.is_connected().unwrap_or(false),
        strongly_connected: k.is_strongly_connected().unwrap_or(false),
        kernel_dimension: dim,
        circlet: even && dim == 1,
    };
    let stdout = if json {
        to_json(&r)
    } else {
        let profile: Vec<String> = r
            .degree_profile
            .iter()
            .map(|(d, n)| format!("{d}:{n}"))
            .collect();
        let mut s = String::new();
        writeln!(s, "vertices: {}", r.vertices).unwrap();
        writeln!(s, "edges: {}", r.edges).unwrap();
        writeln!(s, "faces: {}", r.faces).unwrap();
        writeln!(s, "edge-degrees: {}", profile.join(" ")).unwrap();
        writeln!(s, "even: {}", r.even).unwrap();
        if !r.even {
            writeln!(s, "odd-edges: {}", r.odd_edges.join(" ")).unwrap();
        }
        writeln!(s, "connected: {}", r.connected).unwrap();
        writeln!(s, "strongly-connected: {}", r.strongly_connected).unwrap();
        writeln!(s, "kernel-dimension: {}", r.kernel_dimension).unwrap();
        writeln!(s, "circlet: {}", r.circlet).unwrap();
        s
    };
    let failure = if !r.even {
        Some(Failure::Domain(format!(
            "complex is not even; offending edges: {}",
            r.odd_edges.join(", ")
        )))
    } else if !r.strongly_connected {
        Some(Failure::Domain("complex is not strongly connected".into()))
    } else {
        None
    };
    Ok(Outcome { stdout, failure })
}

#[derive(Serialize)]
struct Part {
    faces: Vec<String>,
}

#[derive(Serialize)]
struct DecomposeReport {
    schema_version: u32,
    count: usize,
    parts: Vec<Part>,
}

pub fn decompose(file: Option<&Path>, json: bool) -> Result<Outcome, Failure> {
    let k = load(file)?;
    let parts = circlet_decomposition(&k).map_err(|e| match e {
        Gf2Error::NotEven(_) => Failure::Domain(e.to_string()),
    })?;
    let r = DecomposeReport {
        schema_version: SCHEMA_VERSION,
        count: parts.len(),
        parts: parts
            .iter()
            .map(|p| Part {
                faces: p.ids(&k).into_iter().map(String::from).collect(),
            })
            .collect(),
    };
    if json {
        return Ok(to_json(&r).into());
    }
    let mut s = String::new();
    writeln!(s, "circlets: {}", r.count).unwrap();
    for (i, p) in r.parts.iter().enumerate() {
        writeln!(
            s,
            "part {} ({} faces): {}",
            i + 1,
            p.faces.len(),
            p.faces.join(" ")
        )
        .unwrap();
    }
    Ok(s.into())
}

fn classification_text(r: &ClassificationReport, trace: bool) -> String {
    let mut s = String::new();
    writeln!(s, "surface: {}", r.name).unwrap();
    writeln!(s, "components: {}", r.components).unwrap();
    writeln!(s, "p: {}", r.p).unwrap();
    writeln!(s, "q: {}", r.q).unwrap();
    writeln!(s, "r: {}", r.r).unwrap();
    writeln!(s, "euler-characteristic: {}", r.euler_characteristic).unwrap();
    writeln!(s, "orientable: {}", r.orientable).unwrap();
    if r.components > 1 {
        for (i, t) in r.surfaces.iter().enumerate() {
            writeln!(
                s,
                "component {}: {} (chi {})",
                i + 1,
                t.name,
                t.euler_characteristic
            )
            .unwrap();
        }
    }
    if trace {
        writeln!(s, "splices: {}", r.splice_trace.len()).unwrap();
        for SpliceStep {
            step,
            edge,
            pairs,
            components,
            euler_characteristic,
        } in &r.splice_trace
        {
            writeln!(
                s,
                "splice {step} at {edge}: {{{} {}}} {{{} {}}} -> {components} components, chi {euler_characteristic}",
                pairs[0][0], pairs[0][1], pairs[1][0], pairs[1][1]
            )
            .unwrap();
        }
    }
    s
}

pub fn cover(
    file: Option<&Path>,
    json: bool,
    assignment: Option<&Path>,
    respect_decomposition: bool,
    emit_surface: Option<&Path>,
) -> Result<Outcome, Failure> {
    let k = load(file)?;
    if !k.is_even() {
        return Err(cover_failure(CoverError::NotEven(
            k.odd_edges().iter().map(|e| e.to_string()).collect(),
        )));
    }
    let a = match assignment {
        Some(path) => {
            let text = read_input(Some(path))?;
            GluingAssignment::parse(&text, &k)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        None if respect_decomposition => {
            let parts = circlet_decomposition(&k).map_err(|e| match e {
                Gf2Error::NotEven(_) => Failure::Domain(e.to_string()),
            })?;
            canonical_assignment(&k, Some(&parts)).map_err(cover_failure)?
        }
        None => canonical_assignment(&k, None).map_err(cover_failure)?,
    };
    let c = build_cover(&k, &a).map_err(cover_failure)?;
    let r = report_classification(&c, &[])
        .map_err(|e| Failure::Domain(format!("cover failed verification: {e}")))?;
    write_surface(emit_surface, &c.surface)?;
    Ok(if json {
        to_json(&r)
    } else {
        classification_text(&r, false)
    }
    .into())
}

pub fn euler_cover(
    file: Option<&Path>,
    json: bool,
    trace: bool,
    emit_surface: Option<&Path>,
) -> Result<Outcome, Failure> {
    let k = load(file)?;
    let ec = build_euler_cover(&k).map_err(splice_failure)?;
    let r = report_classification(&ec.cover, &ec.trace)
        .map_err(|e| Failure::Domain(format!("cover failed verification: {e}")))?;
    write_surface(emit_surface, &ec.cover.surface)?;
    Ok(if json {
        to_json(&r)
    } else {
        classification_text(&r, trace)
    }
    .into())
}

#[derive(Serialize)]
struct CensusReport<'a> {
    schema_version: u32,
    total: u64,
    p_min: usize,
    p_max: usize,
    surface_names: Vec<String>,
    histogram: &'a [circlet::cover::CensusOutcome],
    records: &'a [circlet::cover::CensusRecord],
}

pub fn census(
    file: Option<&Path>,
    json: bool,
    limit: u64,
    jobs: usize,
) -> Result<Outcome, Failure> {
    let k = load(file)?;
    let c = census_with_jobs(&k, limit, jobs).map_err(cover_failure)?;
    if json {
        return Ok(to_json(&CensusReport {
            schema_version: SCHEMA_VERSION,
            total: c.total,
            p_min: c.p_min,
            p_max: c.p_max,
            surface_names: c.surface_names(),
            histogram: &c.histogram,
            records: &c.records,
        })
        .into());
    }
    let mut s = String::new();
    writeln!(s, "assignments: {}", c.total).unwrap();
    writeln!(s, "p: {}..{}", c.p_min, c.p_max).unwrap();
    writeln!(s, "distinct surfaces: {}", c.surface_names().len()).unwrap();
    writeln!(s, "{:>8}  {:>10}  surfaces", "count", "components").unwrap();
    for h in &c.histogram {
        writeln!(
            s,
            "{:>8}  {:>10}  {}",
            h.count,
            h.components,
            h.surfaces.join(" + ")
        )
        .unwrap();
    }
    Ok(s.into())
}

pub fn classify(file: Option<&Path>, json: bool) -> Result<Outcome, Failure> {
    let text = read_input(file)?;
    let is_surface = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        == Some("surface");
    let r = if is_surface {
        let m = parse_surface(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", source_name(file))))?;
        ClassificationReport::for_surface(&m, &[])
    } else {
        let k = parse_complex(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", source_name(file))))?;
        let ec = build_euler_cover(&k).map_err(splice_failure)?;
        report_classification(&ec.cover, &ec.trace)
            .map_err(|e| Failure::Domain(format!("cover failed verification: {e}")))?
    };
    Ok(if json {
        to_json(&r)
    } else {
        classification_text(&r, false)
    }
    .into())
}

#[derive(Serialize)]
struct DecompositionPart {
    kind: &'static str,
    faces: Vec<String>,
}

#[derive(Serialize)]
struct DecompositionReport {
    schema_version: u32,
    n: usize,
    parts: Vec<DecompositionPart>,
}

pub fn generate(kind: GenKind, n: Option<usize>, json: bool) -> Result<Outcome, Failure> {
    let name = kind.to_possible_value().expect("no skipped variants");
    let need = || {
        n.ok_or_else(|| Failure::Input(format!("`gen {}` needs a dimension N", name.get_name())))
    };
    let bad = |e: generators::GeneratorError| Failure::Input(e.to_string());
    let k = match kind {
        GenKind::Simplex => generators::simplex_skeleton(need()?).map_err(bad)?,
        GenKind::Hypercube => generators::hypercube_skeleton(need()?).map_err(bad)?,
        GenKind::Crosspoly => generators::cross_polytope_skeleton(need()?).map_err(bad)?,
        GenKind::Figure2 => generators::figure2_complex(),
        GenKind::PinchedSphere => generators::pinched_sphere(),
        GenKind::TwoTetra => generators::two_tetra_shared_edge(),
        GenKind::TwoTetraVertex => generators::two_tetra_shared_vertex(),
        GenKind::TwoTetraDisjoint => generators::two_tetra_disjoint(),
        GenKind::SimplexDecomposition => {
            let n = need()?;
            let k = generators::simplex_skeleton(n).map_err(bad)?;
            let parts = generators::simplex_sphere_decomposition(&k, n).map_err(bad)?;
            let r = DecompositionReport {
                schema_version: SCHEMA_VERSION,
                n,
                parts: parts
                    .iter()
                    .map(|p| DecompositionPart {
                        kind: if p.len() == 8 {
                            "octahedron"
                        } else {
                            "tetrahedron"
                        },
                        faces: p.ids(&k).into_iter().map(String::from).collect(),
                    })
                    .collect(),
            };
            if json {
                return Ok(to_json(&r).into());
            }
            let mut s = String::new();
            for (i, p) in r.parts.iter().enumerate() {
                writeln!(s, "part {} {}: {}", i + 1, p.kind, p.faces.join(" ")).unwrap();
            }
            return Ok(s.into());
        }
    };
    if json {
        return Err(Failure::Input(
            "--json applies to simplex-decomposition only".into(),
        ));
    }
    Ok(serialize_complex(&k).into())
}
