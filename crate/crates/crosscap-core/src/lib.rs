//! Exact edgepath-system machinery for pretzel knots: rational arithmetic,
//! piecewise-linear functions in the coordinate `w = 1/(1-u)`, the candidate
//! surface enumeration (types I, II, III) and the crosscap number bound
//! verification built on top of it.
//!
//! The crate is `no_std` + `alloc`; everything is exact, no floats anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod candidates;
pub mod diagram;
pub mod edgepath;
pub mod error;
pub mod fraction;
pub mod knot;
pub mod piecewise;

pub use analysis::{
    check_knot_monotonicity, crosscap_report, known_annulus_sheets, lambda_a_system, tuple_equiv,
    tuple_le, verify_bound, BoundReport, BoundaryWitness, CrosscapReport, EqualityWitness,
    WitnessKind,
};
pub use candidates::{
    basic_systems, chi_ratio, edgepath_length, enumerate_type_ii, enumerate_type_iii, solve_type_i,
    stats, CandidateFamily, CandidateStats, EdgepathSystem, Orientability, SystemType,
    TypeISolutions,
};
pub use diagram::{DiagramEdge, DiagramVertex, EdgeKind, EdgePoint, PointPosition};
pub use edgepath::{
    basic_edgepaths, big_x, cut_at, extend, gluing_sum, x_of, BasicEdgepath, Edgepath, Variant,
};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use knot::{parse_pretzel, KnotClass, PretzelKnot, ReferenceSurfaceStats};
pub use piecewise::{Infimum, PiecewiseLinear, Roots, ZeroInterval};
