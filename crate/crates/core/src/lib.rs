//! Exact enumeration of weighted Motzkin and Schröder lattice paths.
//!
//! All counts live in `Z[w]`, where `w` weights each horizontal step. The
//! [`oracle`] module counts paths by brute-force dynamic programming; every
//! closed form and generating function elsewhere in the crate is tested
//! against it.

pub mod algebra;
pub mod errata;
pub mod error;
pub mod hankel;
pub mod matrix;
pub mod motzkin;
pub mod oracle;
pub mod schroder;
pub mod verify;

pub use algebra::{OmegaPoly, RationalGF, TPoly, TSeries};
pub use error::{Error, Result};
pub use matrix::{SquareMatrix, TriMatrix};
pub use verify::{Mismatch, Verdict};
