//! Classical block designs, projector-family quantum designs, and the
//! completely positive maps that relate them.
//!
//! The crate is organised bottom-up:
//!
//! - [`numkit`]: exact natural-number matrices and small dense complex linear
//!   algebra (Kronecker products, Gram–Schmidt, projector splitting, a cyclic
//!   Jacobi eigensolver for Hermitian matrices).
//! - [`classical`]: incidence-matrix designs, their `(k, r, λ)` classification,
//!   the counting identities `b·k = r·v` and `λ(v−1) = r(k−1)`, homomorphisms,
//!   tensor and dual, generators, and a backtracking search.
//! - [`quantum`]: families of orthogonal projectors, their regularity,
//!   uniformity and degree, commutative designs back to incidence matrices,
//!   and mutually unbiased bases in prime dimension.
//! - [`cpmaps`]: linear maps between commutative and full matrix algebras,
//!   Choi matrices, complete positivity and trace preservation, and the functor
//!   sending block designs to diagonal projector designs.
//! - [`catalog_io`] and [`report`]: the JSON document formats and a bundled
//!   catalog of known designs.
//! - [`cli`]: the command-line front end used by the `qdesign` binary.
//!
//! Every type is an immutable value once constructed. Nothing here keeps
//! global state.

#![forbid(unsafe_code)]

pub mod catalog_io;
pub mod classical;
pub mod cli;
pub mod cpmaps;
mod error;
pub mod numkit;
pub mod quantum;
pub mod report;

pub use error::{Error, Result};
pub use num_complex::Complex64;
