//! Frobenius algebras, the tensor categories they generate, decorated
//! cobordisms with their 2D TQFT evaluation, colimit presentations of
//! module-valued diagrams, and tunneling-graph presentations of skein modules.

// index loops read closer to the formulas than iterator chains here
#![allow(clippy::needless_range_loop)]

pub mod cobordism;
pub mod colimit;
pub mod error;
pub mod frobenius;
pub mod rewrite;
pub mod skein;
pub mod tensor;

pub use error::{Error, Result};
