//! Exact natural-number matrices and small dense complex linear algebra.
//!
//! Storage is row-major throughout, and a matrix is read as a map from its
//! column index (input) to its row index (output): a design `χ: b → v` is a
//! `v × b` matrix.

mod complex;
mod eigen;
mod nat;
mod subspace;
mod tolerance;

pub use complex::{inner, norm, ComplexMatrix, Vector};
pub use eigen::{hermitian_eigenvalues, min_eigenvalue_hermitian};
pub use nat::NatMatrix;
pub use subspace::{orthonormalize, split_by_projector, SubspaceSplit};
pub use tolerance::Tolerance;
