//! Exact rotation numbers of closed sequences of primitive lattice vectors.
//!
//! A loop of primitive vectors `v_1, ..., v_d` in `Z^2` whose consecutive
//! determinants `eps_i = det(v_i, v_{i+1})` are all nonzero winds an integer
//! number of times around the origin. This crate computes that number three
//! independent ways, all in exact arithmetic:
//!
//! - a closed formula over per-edge Hirzebruch-Jung continued-fraction data
//!   ([`rotation::rotation_formula`]),
//! - the unimodular-loop formula applied to a refinement of the loop in which
//!   every consecutive determinant is `±1` ([`refine::refine_loop`] plus
//!   [`rotation::hm_rotation`]),
//! - an integer-only crossing-count winding oracle
//!   ([`rotation::winding_number_exact`]).
//!
//! All scalars are arbitrary-precision integers or exact rationals; no
//! result is subject to overflow or rounding.

use std::fmt;

pub mod analysis;
pub mod arith;
pub mod contfrac;
pub mod lattice;
pub mod rat;
pub mod refine;
pub mod rotation;
pub mod sample;

pub use analysis::{analyze_loop, edge_normalization, EdgeAnalysis, VectorLoop};
pub use arith::{ext_gcd, gcd, Int};
pub use contfrac::{
    hj_eval, hj_expand, hj_matrix_product, mod_inverse, regular_eval, regular_expand,
    regular_matrix_product, HjExpansion, RegExpansion,
};
pub use lattice::{LatticeVector, Mat2};
pub use rat::Rat;
pub use refine::{refine_edge, refine_loop, UnimodularRefinement, VertexOrigin};
pub use rotation::{
    hm_rotation, rotation_formula, winding_number_exact, winding_number_float, FloatWinding,
    RotationReport, FLOAT_WINDING_TOLERANCE,
};

/// Everything that can go wrong with user-supplied input.
///
/// Internal consistency violations (an identity that is guaranteed by
/// construction failing to hold) panic instead; they signal a bug, not bad
/// input. All vertex and edge indices are 1-based.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A loop needs at least two vertices.
    LoopTooShort { len: usize },
    /// A loop vertex whose components share a factor (or the zero vector).
    NonPrimitiveVertex { vertex: usize },
    /// Consecutive loop vectors are collinear.
    ZeroDeterminantEdge { edge: usize },
    /// Free-standing pair input to edge normalization was not primitive.
    NonPrimitiveVector,
    /// Free-standing pair input to edge normalization had determinant zero.
    CollinearVectors,
    /// An operation that needs `|eps| = 1` on every edge saw a bigger one.
    NotUnimodularLoop { edge: usize },
    /// Matrix inversion restricted to determinant `±1` saw something else.
    NotUnimodularMatrix { det: Int },
    /// Continued-fraction evaluation of an empty term list.
    EmptyExpansion,
    /// A continued-fraction term below the admissible minimum.
    TermOutOfRange { term: Int, min: u32 },
    /// Expansion input outside `m >= 2`, `0 < x < m`.
    FractionOutOfRange { m: Int, x: Int },
    /// Expansion or modular-inverse input with a common factor.
    NotCoprime { m: Int, x: Int },
    /// A string that does not parse as `p` or `p/q`.
    InvalidRational { text: String },
    /// The floating-point winding sum strayed too far from an integer.
    WindingTolerance { value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopTooShort { len } => {
                write!(f, "loop needs at least 2 vertices, got {len}")
            }
            Error::NonPrimitiveVertex { vertex } => {
                write!(f, "vertex {vertex} is not primitive")
            }
            Error::ZeroDeterminantEdge { edge } => {
                write!(f, "edge {edge} has zero determinant")
            }
            Error::NonPrimitiveVector => write!(f, "vector is not primitive"),
            Error::CollinearVectors => write!(f, "vectors are collinear"),
            Error::NotUnimodularLoop { edge } => {
                write!(f, "edge {edge} has determinant other than +1 or -1")
            }
            Error::NotUnimodularMatrix { det } => {
                write!(f, "matrix determinant {det} is not +1 or -1")
            }
            Error::EmptyExpansion => write!(f, "continued-fraction term list is empty"),
            Error::TermOutOfRange { term, min } => {
                write!(f, "continued-fraction term {term} is below the minimum {min}")
            }
            Error::FractionOutOfRange { m, x } => {
                write!(f, "expected m >= 2 and 0 < x < m, got x = {x}, m = {m}")
            }
            Error::NotCoprime { m, x } => write!(f, "{x} and {m} are not coprime"),
            Error::InvalidRational { text } => {
                write!(f, "cannot parse {text:?} as a rational")
            }
            Error::WindingTolerance { value } => {
                write!(f, "float winding sum {value} is not close enough to an integer")
            }
        }
    }
}

impl std::error::Error for Error {}
