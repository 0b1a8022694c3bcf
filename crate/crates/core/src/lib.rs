//! Disc triangulations with a single irregular interior vertex.
//!
//! Give every edge length 1 and a triangulated disc becomes a flat surface
//! whose only curvature sits at vertices: an interior vertex of degree `d`
//! is a cone of angle `d·π/3`. This crate works with that structure exactly:
//!
//! * [`mesh`]: oriented combinatorial discs, validation and queries;
//! * [`metric`]: cone angles, orders, divisors and the discrete
//!   Gauss–Bonnet identity;
//! * [`develop`]: cutting a disc open at its cone point and unfolding it onto
//!   the Eisenstein lattice, then recovering the cone point from the two
//!   images of the cut endpoint;
//! * [`construct`]: lattice patches and k-sheeted branched covers, which give
//!   non-isomorphic discs with the same boundary when the irregular valence
//!   is a multiple of 6;
//! * [`iso`]: canonical codes for rooted oriented discs;
//! * [`enumerate`]: exhaustive filling of a boundary word.
//!
//! The guide under `book/` walks through each of these; its Rust snippets
//! are compiled and run as doc-tests of this crate.

pub mod construct;
pub mod develop;
pub mod eisenstein;
pub mod enumerate;
pub mod format;
pub mod iso;
pub mod mesh;
pub mod metric;
pub mod svg;

pub use construct::{branched_cover, counterexample_pair, generate_patch, BranchSelector, Cover, CoverSpec, PatchShape};
pub use develop::{cut_along_shortest_path, develop, locate_singularity, CutDisc, Development, Localization};
pub use eisenstein::Eisenstein;
pub use enumerate::{enumerate_fillings, verify_uniqueness, Enumeration, UniquenessReport};
pub use format::{parse_tri, to_tri};
pub use iso::{canonical_code, distance_invariant, is_isomorphic, CanonicalCode, IsoMode};
pub use mesh::{CombinatorialDisc, MeshError, TypeClassification, VertexId};
pub use metric::{check_gauss_bonnet, cone_data, divisor, irregular_valence_from_boundary};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/discs.md")]
    mod discs {}
    #[doc = include_str!("../../../book/src/cone-metric.md")]
    mod cone_metric {}
    #[doc = include_str!("../../../book/src/development.md")]
    mod development {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
}
