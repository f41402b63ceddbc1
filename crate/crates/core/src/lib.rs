pub mod analytic;
pub mod check;
pub mod counting;
pub mod error;
pub mod field;
pub mod integer;
pub mod poly;
pub mod real;
pub mod suite;
pub mod sweep;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use poly::{Factorization, Poly};
pub use real::BoundValue;
