//! Exact Clifford algebra representations, spin lifts of holonomy algebras
//! and their spaces of parallel spinors, over the Gaussian rationals.

pub mod catalog;
pub mod cli;
pub mod clifford;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod parallel;
pub mod pseudo_orthogonal;
pub mod scalar;
pub mod signature;
pub mod spin_lie;

pub use catalog::{catalog, default_suite, HolonomyAlgebra, HolonomyKind};
pub use clifford::{basis_spinor, build_rep, CliffordRep, Spinor};
pub use error::{Error, Result};
pub use linalg::Subspace;
pub use matrix::{Matrix, SparseMatrix};
pub use parallel::{fixed_space, spinc_fixed_space, verify_table, SpinorSubspace};
pub use scalar::{GaussianRational, Rational, Scalar};
pub use signature::Signature;
pub use spin_lie::SOElement;

pub type CMatrix = Matrix<GaussianRational>;
pub type QMatrix = Matrix<Rational>;
pub type SparseCMatrix = SparseMatrix<GaussianRational>;
