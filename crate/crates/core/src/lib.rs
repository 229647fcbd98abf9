//! Exact linear algebra, polynomial and Gröbner machinery over prime fields
//! for Grassmannian `G(2,7)` and Pfaffian-cubic linear sections.

pub mod checks;
pub mod error;
pub mod exterior;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod sampler;
pub mod subspace;
pub mod varieties;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use matrix::FieldMatrix;
pub use subspace::Subspace;
