//! Exact scalars (integers, rationals, integer polynomials) and the sparse
//! linear algebra needed to read off invariants of finitely presented modules.

// index loops read closer to the formulas than iterator chains here
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use error::{ExactError, Result};
pub use linalg::{
    cokernel_invariants, determinant, inverse, rank, smith_normal_form, LatticeEchelon, ModuleInvariants,
    RationalEchelon,
};
pub use matrix::SparseMatrix;
pub use poly::Poly;
pub use scalar::{Ring, Scalar};
