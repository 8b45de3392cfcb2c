//! Functional decomposition of univariate polynomials and rational functions
//! over finite fields, including the composition ring of additive polynomials.

pub mod addecomp;
pub mod additive;
pub mod decomposition;
pub mod error;
pub mod field;
pub mod gendecomp;
pub mod parse;
pub mod ratfun;
pub mod upoly;

pub use additive::AdditivePoly;
pub use decomposition::{compose_all, Compose, Decomposition};
pub use error::{Error, Result};
pub use field::{Felt, Field};
pub use gendecomp::Strategy;
pub use ratfun::{FracLinear, RationalFunction};
pub use upoly::{Factorization, Poly};
