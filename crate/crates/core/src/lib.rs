//! Minimally intersecting coherent filling pairs of curves on surfaces.
//!
//! A pair of oriented simple closed curves `α`, `β` that cross `n` times,
//! always in the same direction, is stored as two cyclic orders on the
//! crossings ([`CurvePair`]). From that encoding the crate computes the
//! complementary faces, Euler characteristic and genus
//! ([`surface`]), performs 1-handle shear-and-splice surgeries and general
//! attaching schemes on a torus seed ([`surgery`]), builds the odd, even and
//! punctured constructions and enumerates point-local schemes
//! ([`constructions`]), and reads the result as a square-tiled surface
//! ([`origami`]).
//!
//! Indices are 0-based throughout.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod agraph;
pub mod constructions;
pub mod error;
pub mod origami;
pub mod perm;
pub mod surface;
pub mod surgery;

pub use agraph::{AGraph, GraphComponent};
pub use constructions::{
    apply_punctured, closed_point_scheme, enumerate_point_schemes, even_scheme, genus2_search,
    minimal_closed, minimal_punctured, odd_scheme, punctured_point_scheme, Enumeration,
    EnumerationOptions, LocalSurgery, PointScheme,
};
pub use error::{Curve, Error, SchemeViolation};
pub use origami::{cylinders, singularities, to_origami, Origami, SingularityProfile};
pub use perm::{
    commutator, compose, is_full_cycle, simultaneous_conjugacy, CycleDecomposition, Equivalence,
    Permutation,
};
pub use surface::{
    dart_map, faces, seed_face_labels, stats, verify_coherent_import, Corner, CurvePair,
    FaceDecomposition, Quadrant, SurfaceStats,
};
pub use surgery::{
    a_graph, apply_scheme, apply_scheme_traced, double_surgery, single_surgery, validate_scheme,
    AppliedScheme, CrossingPosition, GammaArc, Issue, Outcome, Scheme, SchemeReport, Side,
    SurgeryKind, Target,
};
