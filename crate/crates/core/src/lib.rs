//! Exact genus distributions for linear families of fasciagraphs.
//!
//! The crate builds chain graphs from small constituents ([`fascia`]),
//! enumerates their rotation systems ([`rotation`]), classifies embeddings
//! by how their faces meet the last copy of the chain ([`stype`]), and
//! derives the polynomial transfer matrix that carries those classes from
//! one chain length to the next ([`transfer`]). All arithmetic is over
//! `ℤ[Y]` with arbitrary-precision coefficients ([`exactpoly`]).

pub mod certify;
pub mod error;
pub mod exactpoly;
pub mod fascia;
pub mod known;
pub mod rotation;
pub mod stype;
pub mod transfer;

pub use error::{Error, Result};
pub use exactpoly::{BiPoly, PolyMatrix, PolyVector, UniPoly};
