//! Text form of surfaces and structured classification records.
//!
//! ```text
//! surface
//! counts p=6 q=12 r=8 chi=2
//! label <id>
//! face <id> = +l1 -l2 +l3 ...
//! pair <face>:<pos> <face>:<pos>
//! ```
//!
//! Labels, faces and pairings keep their stored order, positions are
//! 0-based. The `counts` line is checked against the parsed surface.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::Step;
use crate::cover::{
    classify, verify_cover, CombinatorialSurface, CoverMap, CoverViolation, Side, SurfaceError,
    SurfaceFace, SurfaceType,
};
use crate::splice::SpliceStep;

/// Version of every JSON document this crate and its CLI emit.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SurfaceParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("declared (p, q, r, chi) = {declared:?} but the surface has {actual:?}")]
    CountsMismatch {
        declared: [i64; 4],
        actual: [i64; 4],
    },
    #[error(transparent)]
    Invalid(#[from] SurfaceError),
}

fn counts(m: &CombinatorialSurface) -> [i64; 4] {
    [
        m.vertex_count() as i64,
        m.edge_count() as i64,
        m.face_count() as i64,
        m.euler_characteristic(),
    ]
}

/// Renders `m` in the surface text format.
pub fn serialize_surface(m: &CombinatorialSurface) -> String {
    let [p, q, r, chi] = counts(m);
    let mut out = String::from("surface\n");
    writeln!(out, "counts p={p} q={q} r={r} chi={chi}").unwrap();
    for l in m.labels() {
        writeln!(out, "label {l}").unwrap();
    }
    for f in m.faces() {
        write!(out, "face {} =", f.id).unwrap();
        for s in &f.walk {
            let sign = if s.forward { '+' } else { '-' };
            write!(out, " {sign}{}", m.labels()[s.edge]).unwrap();
        }
        out.push('\n');
    }
    let side = |s: Side| format!("{}:{}", m.faces()[s.face].id, s.pos);
    for &(a, b) in m.pairings() {
        writeln!(out, "pair {} {}", side(a), side(b)).unwrap();
    }
    out
}

/// Reads the surface text format.
pub fn parse_surface(text: &str) -> Result<CombinatorialSurface, SurfaceParseError> {
    let syntax = |line: usize, msg: String| SurfaceParseError::Syntax { line, msg };
    let mut header = false;
    let mut declared: Option<[i64; 4]> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut label_idx: HashMap<String, usize> = HashMap::new();
    let mut faces: Vec<SurfaceFace> = Vec::new();
    let mut face_idx: HashMap<String, usize> = HashMap::new();
    let mut pairings = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = crate::complex::tokens_of(raw);
        let Some(&kw) = toks.first() else { continue };
        if !header {
            if toks != ["surface"] {
                return Err(syntax(line, "expected `surface` header".into()));
            }
            header = true;
            continue;
        }
        match kw {
            "counts" => {
                if declared.is_some() {
                    return Err(syntax(line, "duplicate `counts` line".into()));
                }
                let mut vals = [0i64; 4];
                if toks.len() != 5 {
                    return Err(syntax(
                        line,
                        "expected `counts p=.. q=.. r=.. chi=..`".into(),
                    ));
                }
                for (slot, (tok, key)) in toks[1..].iter().zip(["p", "q", "r", "chi"]).enumerate() {
                    vals[slot] = tok
                        .strip_prefix(key)
                        .and_then(|t| t.strip_prefix('='))
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| {
                            syntax(line, format!("expected `{key}=<integer>`, found `{tok}`"))
                        })?;
                }
                declared = Some(vals);
            }
            "label" => {
                let [_, id] = toks[..] else {
                    return Err(syntax(line, "expected `label <id>`".into()));
                };
                if label_idx.insert(id.to_string(), labels.len()).is_some() {
                    return Err(syntax(line, format!("duplicate label `{id}`")));
                }
                labels.push(id.to_string());
            }
            "face" => {
                if toks.len() < 4 || toks[2] != "=" {
                    return Err(syntax(line, "expected `face <id> = <steps>`".into()));
                }
                let id = toks[1];
                let walk = toks[3..]
                    .iter()
                    .map(|t| {
                        let (forward, name) = match t.split_at(1) {
                            ("+", n) => (true, n),
                            ("-", n) => (false, n),
                            _ => {
                                return Err(syntax(line, format!("step `{t}` needs a + or - sign")))
                            }
                        };
                        let edge = *label_idx
                            .get(name)
                            .ok_or_else(|| syntax(line, format!("unknown label `{name}`")))?;
                        Ok(Step { edge, forward })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if face_idx.insert(id.to_string(), faces.len()).is_some() {
                    return Err(syntax(line, format!("duplicate face `{id}`")));
                }
                faces.push(SurfaceFace {
                    id: id.to_string(),
                    walk,
                });
            }
            "pair" => {
                let [_, a, b] = toks[..] else {
                    return Err(syntax(
                        line,
                        "expected `pair <face>:<pos> <face>:<pos>`".into(),
                    ));
                };
                let side = |t: &str| -> Result<Side, SurfaceParseError> {
                    let (f, p) = t
                        .rsplit_once(':')
                        .ok_or_else(|| syntax(line, format!("side `{t}` is not `<face>:<pos>`")))?;
                    let face = *face_idx
                        .get(f)
                        .ok_or_else(|| syntax(line, format!("unknown face `{f}`")))?;
                    let pos = p
                        .parse()
                        .map_err(|_| syntax(line, format!("bad position `{p}`")))?;
                    Ok(Side { face, pos })
                };
                pairings.push((side(a)?, side(b)?));
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }
    if !header {
        return Err(syntax(1, "expected `surface` header".into()));
    }
    let m = CombinatorialSurface::new(labels, faces, pairings)?;
    if let Some(declared) = declared {
        let actual = counts(&m);
        if declared != actual {
            return Err(SurfaceParseError::CountsMismatch { declared, actual });
        }
    }
    Ok(m)
}

/// Classification of a covering surface, as reported by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Type name for a connected surface; component names joined by ` + `
    /// otherwise.
    pub name: String,
    pub components: usize,
    pub surfaces: Vec<SurfaceType>,
    pub splice_trace: Vec<SpliceStep>,
}

impl ClassificationReport {
    /// Record for a bare surface, with no cover to check.
    pub fn for_surface(m: &CombinatorialSurface, trace: &[SpliceStep]) -> Self {
        let surfaces = classify(m);
        let name = surfaces
            .iter()
            .map(|s| s.name.as_str())
            .collect::<Vec<_>>()
            .join(" + ");
        ClassificationReport {
            schema_version: SCHEMA_VERSION,
            p: m.vertex_count(),
            q: m.edge_count(),
            r: m.face_count(),
            euler_characteristic: m.euler_characteristic(),
            orientable: m.is_orientable(),
            name,
            components: m.component_count(),
            surfaces,
            splice_trace: trace.to_vec(),
        }
    }
}

/// Classifies the surface of a cover after checking the cover.
pub fn report_classification(
    c: &CoverMap<'_>,
    trace: &[SpliceStep],
) -> Result<ClassificationReport, CoverViolation> {
    verify_cover(c)?;
    Ok(ClassificationReport::for_surface(&c.surface, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{build_cover, canonical_assignment, AssignmentSpace};
    use crate::generators;
    use crate::splice::euler_cover;

    #[test]
    fn octahedron_round_trip() {
        let k = generators::octahedron();
        let c = build_cover(&k, &canonical_assignment(&k, None).unwrap()).unwrap();
        let text = serialize_surface(&c.surface);
        assert!(text.starts_with("surface\ncounts p=6 q=12 r=8 chi=2\n"));
        let back = parse_surface(&text).unwrap();
        assert_eq!(back, c.surface);
        assert_eq!(serialize_surface(&back), text);
    }

    #[test]
    fn figure2_header() {
        let k = generators::figure2_complex();
        let c = build_cover(&k, &canonical_assignment(&k, None).unwrap()).unwrap();
        let text = serialize_surface(&c.surface);
        let header = text.lines().nth(1).unwrap();
        assert!(header.contains(" q=80 r=40 "), "{header}");
    }

    #[test]
    fn counts_are_checked() {
        let k = generators::tetrahedron();
        let c = build_cover(&k, &canonical_assignment(&k, None).unwrap()).unwrap();
        let text = serialize_surface(&c.surface).replace("chi=2", "chi=0");
        assert!(matches!(
            parse_surface(&text),
            Err(SurfaceParseError::CountsMismatch { .. })
        ));
    }

    #[test]
    fn parse_errors_name_lines() {
        assert_eq!(
            parse_surface("surface\nlabel a\nface x = +b\n"),
            Err(SurfaceParseError::Syntax {
                line: 3,
                msg: "unknown label `b`".into()
            })
        );
        assert!(matches!(
            parse_surface("vertex 1\n"),
            Err(SurfaceParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_surface("surface\nlabel a\nface x = +a +a\n"),
            Err(SurfaceParseError::Invalid(
                SurfaceError::SideMultiplicity { .. }
            ))
        ));
    }

    #[test]
    fn sphere_report() {
        let k = generators::simplex_skeleton(5).unwrap();
        let ec = euler_cover(&k).unwrap();
        let r = report_classification(&ec.cover, &ec.trace).unwrap();
        assert_eq!((r.name.as_str(), r.euler_characteristic), ("sphere", 2));
        assert_eq!(r.splice_trace.len(), 3);
        assert_eq!(r.schema_version, SCHEMA_VERSION);
    }

    #[test]
    fn census_entries_report_named_types() {
        let k = generators::figure2_complex();
        let space = AssignmentSpace::new(&k).unwrap();
        let mut seen = Vec::new();
        for i in 0..81 {
            let c = build_cover(&k, &space.assignment(i)).unwrap();
            let r = report_classification(&c, &[]).unwrap();
            seen.push((r.name, r.euler_characteristic));
        }
        assert!(seen.contains(&("triple torus (S₃)".into(), -4)));
        assert!(seen.contains(&("Klein bottle (N₂)".into(), 0)));
    }

    #[test]
    fn refuses_broken_cover() {
        let k = generators::octahedron();
        let mut c = build_cover(&k, &canonical_assignment(&k, None).unwrap()).unwrap();
        c.vertex_map.reverse();
        assert!(report_classification(&c, &[]).is_err());
    }
}
