//! Exact arithmetic in ℚ(ζ_N), N a power of two, with polynomials and
//! verified root extraction.

mod poly;
mod roots;
mod scalar;

pub use poly::CycPoly;
pub use roots::{poly_from_roots, splitting_conductor, verified_roots, RootSet, DEFAULT_DENOM_BOUND};
pub use scalar::{parse_rational, CycScalar, FieldSpec, CONDUCTORS, DEFAULT_CONDUCTOR};
