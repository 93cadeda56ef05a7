//! Exact enumeration of labeled connected maps.
//!
//! Oriented maps are counted as pairs `(σ, τ)` of a vertex rotation and a
//! perfect matching of darts and binned by genus. Unoriented maps (Möbius
//! graphs) are counted as triples `(φ, σ, τ)` on doubled darts and binned by
//! Euler characteristic. The closed-form one-vertex polynomials and a
//! brute-force Wick contraction provide independent checks.
//!
//! Scalar-valued parts (polynomials, closed forms, Wick moments) are generic
//! over `num_traits::Num`; the aliases below fix the exact rational choice
//! used throughout the engine.

pub mod closed_form;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod histogram;
pub mod matching;
pub mod orbit;
pub mod oriented;
pub mod perm;
pub mod poly;
pub mod profile;
pub mod unoriented;
pub mod wick;

pub use closed_form::{
    goulden_jackson, goulden_jackson_table, harer_zagier, harer_zagier_table, OneVertexTable,
};
pub use engine::{EnumOptions, ProgressFn, PROGRESS_INTERVAL};
pub use error::{Error, Result};
pub use histogram::{ChiHistogram, CountHistogram, FaceHistogram, GenusHistogram};
pub use matching::{matching_count, matchings, Matching, MatchingStream};
pub use orbit::orbit_is_full;
pub use oriented::{build_sigma, classify, enumerate_oriented, enumerate_oriented_moments};
pub use perm::{CycleDecomposition, Permutation};
pub use poly::Polynomial;
pub use profile::DegreeProfile;
pub use unoriented::{
    build_doubled, classify_unoriented, enumerate_unoriented, enumerate_unoriented_moments, lift,
    signed_matching_count, validate_triple, DoubledDartSpace, SignedMatching,
};
pub use wick::{Ensemble, MomentSpec};

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;
/// Polynomial in `N` with exact rational coefficients.
pub type RationalPolynomial = Polynomial<Rational>;
/// Double-precision polynomial, for quick numeric evaluation.
pub type FloatPolynomial = Polynomial<f64>;

/// Exact GUE moment.
pub fn gue_moment(spec: &MomentSpec) -> Result<Rational> {
    wick::gue_moment(spec)
}

/// Exact GOE moment.
pub fn goe_moment(spec: &MomentSpec) -> Result<Rational> {
    wick::goe_moment(spec)
}

/// Exact `Σ_F bins[F] · N^{F−E}`.
pub fn face_power_sum(hist: &FaceHistogram, dimension: u32) -> Rational {
    wick::face_power_sum(hist, dimension)
}
