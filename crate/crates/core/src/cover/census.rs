use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::{build_cover, classify, AssignmentSpace, CoverError, SurfaceType};
use crate::complex::TwoComplex;

/// Matching chosen at an edge with more than one option.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeChoice {
    pub edge: String,
    pub matching: usize,
}

/// One gluing assignment and the surface it produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub index: u64,
    pub choices: Vec<EdgeChoice>,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub euler_characteristic: i64,
    pub components: usize,
    pub surfaces: Vec<SurfaceType>,
}

impl CensusRecord {
    fn outcome_key(&self) -> (usize, Vec<String>) {
        let mut names: Vec<String> = self.surfaces.iter().map(|s| s.name.clone()).collect();
        names.sort();
        (self.components, names)
    }
}

/// Number of assignments producing a given component count and multiset of
/// component types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusOutcome {
    pub components: usize,
    pub surfaces: Vec<String>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub total: u64,
    pub p_min: usize,
    pub p_max: usize,
    pub histogram: Vec<CensusOutcome>,
    pub records: Vec<CensusRecord>,
}

impl Census {
    /// Distinct surface type names over all records.
    pub fn surface_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .records
            .iter()
            .flat_map(|r| r.surfaces.iter().map(|s| s.name.clone()))
            .collect();
        names.sort();
        names.dedup();
        names
    }
}

/// Builds and classifies the cover for every gluing assignment of `k`.
pub fn census(k: &TwoComplex, limit: u64) -> Result<Census, CoverError> {
    census_with_jobs(k, limit, 1)
}

/// As [`census`], splitting the index range into `jobs` contiguous chunks
/// run on separate threads. Results do not depend on `jobs`.
pub fn census_with_jobs(k: &TwoComplex, limit: u64, jobs: usize) -> Result<Census, CoverError> {
    let space = AssignmentSpace::new(k)?;
    let count = space.len();
    if count > BigUint::from(limit) {
        return Err(CoverError::LimitExceeded { count, limit });
    }
    let total: u64 = count.try_into().expect("count is bounded by a u64 limit");
    let jobs = jobs.clamp(1, total.max(1) as usize) as u64;
    let chunk = total.div_ceil(jobs);
    let ranges: Vec<(u64, u64)> = (0..jobs)
        .map(|j| (j * chunk, ((j + 1) * chunk).min(total)))
        .filter(|(a, b)| a < b)
        .collect();

    let records: Vec<CensusRecord> = if ranges.len() <= 1 {
        ranges
            .iter()
            .flat_map(|&(a, b)| (a..b).map(|i| record(k, &space, i)))
            .collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(a, b)| {
                    let space = &space;
                    scope.spawn(move || (a..b).map(|i| record(k, space, i)).collect::<Vec<_>>())
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("census worker panicked"))
                .collect()
        })
    };

    let mut histogram: BTreeMap<(usize, Vec<String>), u64> = BTreeMap::new();
    for r in &records {
        *histogram.entry(r.outcome_key()).or_insert(0) += 1;
    }
    Ok(Census {
        total,
        p_min: records.iter().map(|r| r.p).min().unwrap_or(0),
        p_max: records.iter().map(|r| r.p).max().unwrap_or(0),
        histogram: histogram
            .into_iter()
            .map(|((components, surfaces), count)| CensusOutcome {
                components,
                surfaces,
                count,
            })
            .collect(),
        records,
    })
}

fn record(k: &TwoComplex, space: &AssignmentSpace, index: u64) -> CensusRecord {
    let digits = space.digits(index);
    let cover = build_cover(k, &space.from_digits(&digits))
        .expect("enumerated assignments are valid for an even complex");
    let m = &cover.surface;
    CensusRecord {
        index,
        choices: digits
            .iter()
            .enumerate()
            .filter(|&(e, _)| space.options(e).len() > 1)
            .map(|(e, &d)| EdgeChoice {
                edge: k.edges()[e].id.clone(),
                matching: d,
            })
            .collect(),
        p: m.vertex_count(),
        q: m.edge_count(),
        r: m.face_count(),
        euler_characteristic: m.euler_characteristic(),
        components: m.component_count(),
        surfaces: classify(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn octahedron_single_sphere() {
        let k = generators::cross_polytope_skeleton(3).unwrap();
        let c = census(&k, 10).unwrap();
        assert_eq!(c.total, 1);
        assert_eq!(
            c.histogram,
            vec![CensusOutcome {
                components: 1,
                surfaces: vec!["sphere".into()],
                count: 1
            }]
        );
    }

    #[test]
    fn two_tetra_outcomes() {
        let k = generators::two_tetra_shared_edge();
        let c = census(&k, 10).unwrap();
        assert_eq!(c.total, 3);
        assert!(c
            .records
            .iter()
            .any(|r| r.components == 2 && r.surfaces.iter().all(|s| s.name == "sphere")));
        assert!(c
            .records
            .iter()
            .any(|r| r.components == 1 && r.euler_characteristic == 2));
    }

    #[test]
    fn limit_is_enforced() {
        let k = generators::simplex_skeleton(5).unwrap();
        match census(&k, 1000) {
            Err(CoverError::LimitExceeded { count, limit }) => {
                assert_eq!(count, BigUint::from(14_348_907u64));
                assert_eq!(limit, 1000);
            }
            other => panic!("expected limit error, got {other:?}"),
        }
    }

    #[test]
    fn jobs_do_not_change_results() {
        let k = generators::two_tetra_shared_edge();
        let one = census_with_jobs(&k, 10, 1).unwrap();
        for jobs in [2, 3, 8] {
            assert_eq!(census_with_jobs(&k, 10, jobs).unwrap(), one);
        }
    }
}
