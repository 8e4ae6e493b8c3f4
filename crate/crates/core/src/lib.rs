//! Exact computations with finite-dimensional left Leibniz algebras given by
//! structure constants over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: rational scalars, matrices, row reduction and subspaces;
//! - [`algebra`]: the [`Algebra`] type, identity checkers, ideals, normalizers,
//!   quotients and the left-normed rewriting of bracket expressions;
//! - [`analysis`]: derived and lower central series, radical, semisimplicity;
//! - [`forms`]: the Killing form and the trace criterion for solvability;
//! - [`engel`]: Engel subalgebras, Cartan subalgebras, invertible Leibniz derivations;
//! - [`classify`]: the catalog of low-dimensional algebras and classification;
//! - [`io`]: the JSON algebra file format and analysis reports.

pub mod algebra;
pub mod analysis;
pub mod classify;
pub mod engel;
mod error;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod random;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Subspace, Vector};
