//! Exact arithmetic over `ℤ[Y]`: genus polynomials, polynomials in `λ`
//! with `ℤ[Y]` coefficients, and dense matrices/vectors over `ℤ[Y]`.

mod bipoly;
mod matrix;
mod uni;

pub use bipoly::BiPoly;
pub use matrix::{PolyMatrix, PolyVector};
pub use uni::UniPoly;
