//! Even polygonal 2-complexes, their decompositions into circlets, and
//! Euler covers by closed surfaces.
//!
//! A 2-complex is *even* when every edge lies on a positive even number of
//! faces. A *circlet* is an even complex whose faces cannot be split into
//! two even parts. An *Euler cover* is a connected closed surface mapping
//! cellularly onto the complex so that each face is covered exactly once.
//! For a strongly connected complex the three notions line up: it is even
//! iff it splits into circlets iff it has an Euler cover, and every step is
//! constructive here:
//!
//! - [`gf2::circlet_decomposition`] splits an even complex into circlets,
//! - [`cover::build_cover`] glues faces pairwise along edges into a surface,
//! - [`splice::euler_cover`] joins the per-circlet surfaces by connected sums.

pub mod bits;
pub mod complex;
pub mod cover;
pub mod generators;
pub mod gf2;
pub mod report;
pub mod splice;
mod union_find;

pub use complex::{parse_complex, serialize_complex, FaceSubset, TwoComplex};
pub use cover::{build_cover, classify, verify_cover, CombinatorialSurface, CoverMap, SurfaceType};
